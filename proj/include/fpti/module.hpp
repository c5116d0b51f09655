#ifndef FPTI_MODULE_HPP
#define FPTI_MODULE_HPP

#include <string>
#include <vector>

#include "fpti/ring.hpp"

namespace fpti {

/// An element of the free module R^rank, stored as one sorted term list in
/// the ring's module order (the term position is the component index).
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(Ring ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  /// Arbitrary term list; canonicalized here.
  ModuleVector(Ring ring, std::size_t rank, terms::List t)
      : ring_(std::move(ring)), rank_(rank), terms_(std::move(t)) {
    for (const auto& x : terms_)
      if (x.pos >= rank_) throw Error(ErrorKind::RankMismatch, "term position out of range");
    terms::canonicalize(*ring_, ring_->order().module, terms_);
  }
  struct Canonical {};
  ModuleVector(Ring ring, std::size_t rank, terms::List t, Canonical)
      : ring_(std::move(ring)), rank_(rank), terms_(std::move(t)) {}

  static ModuleVector from_components(Ring ring, const std::vector<Polynomial>& comps) {
    terms::List t;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (const auto& x : comps[i].terms()) t.push_back(Term{x.coef, std::uint32_t(i), x.mono});
    return ModuleVector(ring, comps.size(), std::move(t));
  }
  static ModuleVector unit(Ring ring, std::size_t rank, std::size_t i) {
    terms::List t{Term{1, std::uint32_t(i), ring->one()}};
    return ModuleVector(ring, rank, std::move(t), Canonical{});
  }
  static ModuleVector scalar(const Polynomial& f) {
    return ModuleVector(f.ring(), 1, f.terms(), Canonical{});
  }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const terms::List& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }

  Polynomial component(std::size_t i) const {
    terms::List t;
    for (const auto& x : terms_)
      if (x.pos == i) t.push_back(Term{x.coef, 0, x.mono});
    if (ring_->order().module == ModuleOrder::PositionOverTerm)
      return Polynomial(ring_, std::move(t), Polynomial::Canonical{});
    return Polynomial(ring_, std::move(t));
  }
  std::vector<Polynomial> components() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < rank_; ++i) out.push_back(component(i));
    return out;
  }

  ModuleVector operator+(const ModuleVector& o) const {
    check(o);
    return {ring_, rank_, terms::add(*ring_, ring_->order().module, terms_, o.terms_), Canonical{}};
  }
  ModuleVector operator-(const ModuleVector& o) const {
    check(o);
    return {ring_, rank_,
            terms::add_scaled(*ring_, ring_->order().module, terms_, ring_->p() - 1, ring_->one(),
                              o.terms_),
            Canonical{}};
  }
  ModuleVector bracket(std::uint64_t q) const {
    return {ring_, rank_, terms::bracket(terms_, q), Canonical{}};
  }

  bool operator==(const ModuleVector& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

 private:
  void check(const ModuleVector& o) const {
    require_same_ring(ring_, o.ring_);
    if (rank_ != o.rank_) throw Error(ErrorKind::RankMismatch, "vector ranks differ");
  }

  Ring ring_;
  std::size_t rank_ = 0;
  terms::List terms_;
};

inline ModuleVector operator*(const Polynomial& f, const ModuleVector& v) {
  require_same_ring(f.ring(), v.ring());
  const auto& ring = *v.ring();
  return ModuleVector(v.ring(), v.rank(),
                      terms::multiply(ring, ring.order().module, f.terms(), v.terms()),
                      ModuleVector::Canonical{});
}

inline std::string to_string(const ModuleVector& v) {
  if (v.rank() == 1) return to_string(v.component(0));
  std::string s = "[";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(v.component(i));
  }
  return s + "]";
}

/// Dense rows x cols grid of sparse polynomials. Column j is read as an
/// element of R^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

  static PolyMatrix identity(Ring ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(ring, 1);
    return m;
  }
  static PolyMatrix from_columns(Ring ring, std::size_t rows, const std::vector<ModuleVector>& cols) {
    PolyMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].rank() != rows) throw Error(ErrorKind::RankMismatch, "column rank mismatch");
      m.set_column(j, cols[j]);
    }
    return m;
  }
  static PolyMatrix row(Ring ring, const std::vector<Polynomial>& entries) {
    PolyMatrix m(ring, 1, entries.size());
    for (std::size_t j = 0; j < entries.size(); ++j) m(0, j) = entries[j];
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  ModuleVector column(std::size_t j) const {
    terms::List t;
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& x : (*this)(i, j).terms()) t.push_back(Term{x.coef, std::uint32_t(i), x.mono});
    return ModuleVector(ring_, rows_, std::move(t));
  }
  std::vector<ModuleVector> columns() const {
    std::vector<ModuleVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }
  void set_column(std::size_t j, const ModuleVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v.component(i);
  }

  PolyMatrix transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_) throw Error(ErrorKind::RankMismatch, "matrix shapes do not compose");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        terms::List acc;
        for (std::size_t k = 0; k < cols_; ++k) {
          const auto& a = (*this)(i, k);
          const auto& b = o(k, j);
          if (a.is_zero() || b.is_zero()) continue;
          acc = terms::add(*ring_, ModuleOrder::PositionOverTerm, acc,
                           terms::multiply(*ring_, ModuleOrder::PositionOverTerm, a.terms(), b.terms()));
        }
        r(i, j) = Polynomial(ring_, std::move(acc), Polynomial::Canonical{});
      }
    return r;
  }

  ModuleVector operator*(const ModuleVector& v) const {
    if (v.rank() != cols_) throw Error(ErrorKind::RankMismatch, "vector rank differs from columns");
    PolyMatrix col(ring_, cols_, 1);
    col.set_column(0, v);
    return ((*this) * col).column(0);
  }

  PolyMatrix operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::RankMismatch, "shape mismatch");
    PolyMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
  }
  PolyMatrix operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::RankMismatch, "shape mismatch");
    PolyMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
  }

  PolyMatrix bracket(std::uint64_t q) const {
    PolyMatrix r(*this);
    for (auto& e : r.entries_) e = e.bracket(q);
    return r;
  }

  /// [this | o]
  PolyMatrix hstack(const PolyMatrix& o) const {
    if (rows_ != o.rows_) throw Error(ErrorKind::RankMismatch, "hstack row mismatch");
    PolyMatrix r(ring_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace fpti

#endif  // FPTI_MODULE_HPP
