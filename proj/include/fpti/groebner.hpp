#ifndef FPTI_GROEBNER_HPP
#define FPTI_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "fpti/module.hpp"

namespace fpti {

namespace detail {

/// Re-sorts a term list into module order `mod` when it differs from the
/// order it was produced under.
inline terms::List in_order(const RingCtx& ring, ModuleOrder mod, terms::List t) {
  if (ring.order().module != mod) std::sort(t.begin(), t.end(), terms::Greater{&ring, mod});
  return t;
}

inline void make_monic(const RingCtx& ring, terms::List& t) {
  if (t.empty() || t.front().coef == 1) return;
  const auto& F = ring.field();
  Coef inv = F.inv(t.front().coef);
  for (auto& x : t) x.coef = F.mul(x.coef, inv);
}

/// Division with remainder by a list of monic vectors. With `full`, tail terms
/// are reduced too; otherwise reduction stops at the first irreducible lead.
inline terms::List reduce(const RingCtx& ring, ModuleOrder mod, terms::List f,
                          std::span<const terms::List* const> basis, bool full,
                          const Limits& lim) {
  terms::List rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& t = f[start];
    const terms::List* div = nullptr;
    for (const auto* g : basis) {
      const Term& lt = g->front();
      if (lt.pos == t.pos && lt.mono.divides(t.mono)) {
        div = g;
        break;
      }
    }
    if (!div) {
      if (!full) {
        rem.insert(rem.end(), f.begin() + static_cast<std::ptrdiff_t>(start), f.end());
        return rem;
      }
      rem.push_back(t);
      ++start;
      continue;
    }
    Coef c = ring.field().neg(t.coef);
    Monomial m = t.mono / div->front().mono;
    std::span<const Term> tail(f.data() + start + 1, f.size() - start - 1);
    std::span<const Term> gtail(div->data() + 1, div->size() - 1);
    f = terms::add_scaled(ring, mod, tail, c, m, gtail);
    start = 0;
    if (f.size() > lim.max_terms)
      throw Error(ErrorKind::ResourceCap, "term count cap exceeded during reduction");
  }
  return rem;
}

/// Buchberger's algorithm with the normal selection strategy and
/// Gebauer–Möller pair elimination. Works for submodules of R^rank; the
/// product criterion is applied only for ideals.
class BuchbergerEngine {
 public:
  BuchbergerEngine(const RingCtx& ring, ModuleOrder mod, std::size_t rank, const Limits& lim)
      : ring_(ring), mod_(mod), rank_(rank), lim_(lim) {}

  std::vector<terms::List> run(std::vector<terms::List> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      auto h = reduce(ring_, mod_, std::move(g), active_ptrs(), true, lim_);
      if (h.empty()) continue;
      make_monic(ring_, h);
      update(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      auto s = spair(pr);
      auto h = reduce(ring_, mod_, std::move(s), active_ptrs(), true, lim_);
      if (h.empty()) continue;
      make_monic(ring_, h);
      update(std::move(h));
    }
    return interreduce();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Term lcm;  // coefficient unused
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    auto c = ring_.compare(a.lcm, b.lcm, mod_);
    if (c != 0) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  }

  const Term& lt(std::size_t i) const { return polys_[i].front(); }

  Term lcm_term(std::size_t i, std::size_t j) const {
    return Term{1, lt(i).pos, lt(i).mono.lcm(lt(j).mono)};
  }

  static bool term_divides(const Term& a, const Term& b) {
    return a.pos == b.pos && a.mono.divides(b.mono);
  }

  std::vector<const terms::List*> active_ptrs() const {
    std::vector<const terms::List*> out;
    out.reserve(active_.size());
    for (auto i : active_) out.push_back(&polys_[i]);
    return out;
  }

  terms::List spair(const Pair& p) const {
    const auto& f = polys_[p.i];
    const auto& g = polys_[p.j];
    Monomial mf = p.lcm.mono / f.front().mono;
    Monomial mg = p.lcm.mono / g.front().mono;
    auto a = terms::scale(ring_, terms::List(f.begin() + 1, f.end()), 1, mf);
    return terms::add_scaled(ring_, mod_, a, ring_.p() - 1, mg, std::span(g).subspan(1));
  }

  void update(terms::List h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Term& lh = lt(hi);
    const bool ideal = rank_ == 1;

    std::vector<Pair> C, D;
    for (auto g : active_)
      if (lt(g).pos == lh.pos) C.push_back(Pair{g, hi, lcm_term(g, hi)});

    while (!C.empty()) {
      Pair pr = C.front();
      C.erase(C.begin());
      bool coprime = ideal && lt(pr.i).mono.coprime(lh.mono);
      bool dominated = false;
      if (!coprime) {
        for (const auto& o : C)
          if (o.lcm.mono.divides(pr.lcm.mono)) { dominated = true; break; }
        if (!dominated)
          for (const auto& o : D)
            if (o.lcm.mono.divides(pr.lcm.mono)) { dominated = true; break; }
      }
      if (coprime || !dominated) D.push_back(pr);
    }
    std::vector<Pair> E;
    for (auto& pr : D)
      if (!(ideal && lt(pr.i).mono.coprime(lh.mono))) E.push_back(pr);

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + E.size());
    for (auto& pr : pairs_) {
      bool drop = term_divides(lh, pr.lcm) && !(lcm_term(pr.i, hi).mono == pr.lcm.mono) &&
                  !(lcm_term(pr.j, hi).mono == pr.lcm.mono);
      if (!drop) kept.push_back(std::move(pr));
    }
    for (auto& pr : E) kept.push_back(std::move(pr));
    pairs_ = std::move(kept);
    if (pairs_.size() > lim_.max_pairs)
      throw Error(ErrorKind::ResourceCap, "pair queue cap exceeded");

    std::vector<std::size_t> act;
    for (auto g : active_)
      if (!term_divides(lh, lt(g))) act.push_back(g);
    act.push_back(hi);
    active_ = std::move(act);
  }

  std::vector<terms::List> interreduce() const {
    std::vector<terms::List> basis;
    for (auto i : active_) basis.push_back(polys_[i]);
    std::sort(basis.begin(), basis.end(), [&](const terms::List& a, const terms::List& b) {
      return ring_.compare(a.front(), b.front(), mod_) < 0;
    });
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const terms::List*> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(&basis[l]);
      terms::List head{basis[k].front()};
      terms::List tail(basis[k].begin() + 1, basis[k].end());
      tail = reduce(ring_, mod_, std::move(tail), others, true, lim_);
      head.insert(head.end(), tail.begin(), tail.end());
      basis[k] = std::move(head);
    }
    return basis;
  }

  const RingCtx& ring_;
  ModuleOrder mod_;
  std::size_t rank_;
  Limits lim_;
  std::vector<terms::List> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// A reduced Gröbner basis of a submodule of R^rank, computed under the
/// ring's monomial order extended by `order`. Elements are monic and sorted
/// by ascending leading term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ring ring, std::size_t rank, ModuleOrder order, std::vector<terms::List> elems)
      : ring_(std::move(ring)), rank_(rank), order_(order), elems_(std::move(elems)) {}

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  ModuleOrder order() const { return order_; }
  bool reduced() const { return true; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  /// Raw term lists, sorted in this basis' module order.
  const std::vector<terms::List>& raw() const { return elems_; }

  std::vector<ModuleVector> elements() const {
    std::vector<ModuleVector> out;
    for (const auto& e : elems_) out.push_back(ModuleVector(ring_, rank_, e));
    return out;
  }

  bool is_unit_ideal() const {
    return rank_ == 1 && elems_.size() == 1 && elems_[0].size() == 1 && elems_[0][0].mono.is_one();
  }

  /// Normal form of a raw term list given in this basis' order.
  terms::List reduce_raw(terms::List f, const Limits& lim = {}) const {
    std::vector<const terms::List*> ptrs;
    for (const auto& e : elems_) ptrs.push_back(&e);
    return detail::reduce(*ring_, order_, std::move(f), ptrs, true, lim);
  }

  bool operator==(const GroebnerBasis& o) const {
    return rank_ == o.rank_ && order_ == o.order_ && elems_ == o.elems_;
  }

 private:
  Ring ring_;
  std::size_t rank_ = 0;
  ModuleOrder order_ = ModuleOrder::PositionOverTerm;
  std::vector<terms::List> elems_;
};

inline GroebnerBasis buchberger(const Ring& ring, std::size_t rank,
                                const std::vector<ModuleVector>& gens, const Limits& lim = {},
                                std::optional<ModuleOrder> order = std::nullopt) {
  ModuleOrder mod = order.value_or(ring->order().module);
  std::vector<terms::List> raw;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != rank) throw Error(ErrorKind::RankMismatch, "generator rank differs from ambient");
    raw.push_back(detail::in_order(*ring, mod, g.terms()));
  }
  detail::BuchbergerEngine eng(*ring, mod, rank, lim);
  return GroebnerBasis(ring, rank, mod, eng.run(std::move(raw)));
}

inline ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& G,
                                const Limits& lim = {}) {
  require_same_ring(v.ring(), G.ring());
  if (v.rank() != G.rank()) throw Error(ErrorKind::RankMismatch, "vector rank differs from basis");
  auto r = G.reduce_raw(detail::in_order(*v.ring(), G.order(), v.terms()), lim);
  return ModuleVector(v.ring(), v.rank(), std::move(r));
}

/// Gröbner basis of the graph {(M w, w)} ⊆ R^{rows+cols} under a
/// position-over-term order with the first `rows` positions eliminated first.
/// Yields membership and lifting for Image M, and the syzygies of M.
class Lifter {
 public:
  explicit Lifter(const PolyMatrix& M, const Limits& lim = {})
      : ring_(M.ring()), rows_(M.rows()), cols_(M.cols()), lim_(lim) {
    std::vector<terms::List> raw;
    const auto mod = ModuleOrder::PositionOverTerm;
    for (std::size_t j = 0; j < cols_; ++j) {
      terms::List t = detail::in_order(*ring_, mod, M.column(j).terms());
      t.push_back(Term{1, std::uint32_t(rows_ + j), ring_->one()});
      raw.push_back(std::move(t));
    }
    detail::BuchbergerEngine eng(*ring_, mod, rows_ + cols_, lim);
    basis_ = eng.run(std::move(raw));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// y with M y = v, or nullopt when v is not in Image M.
  std::optional<ModuleVector> lift(const ModuleVector& v) const {
    if (v.rank() != rows_) throw Error(ErrorKind::RankMismatch, "lift: vector rank mismatch");
    std::vector<const terms::List*> ptrs;
    for (const auto& e : basis_) ptrs.push_back(&e);
    auto r = detail::reduce(*ring_, ModuleOrder::PositionOverTerm,
                            detail::in_order(*ring_, ModuleOrder::PositionOverTerm, v.terms()), ptrs,
                            true, lim_);
    terms::List y;
    const auto& F = ring_->field();
    for (const auto& t : r) {
      if (t.pos < rows_) return std::nullopt;
      y.push_back(Term{F.neg(t.coef), std::uint32_t(t.pos - rows_), t.mono});
    }
    return ModuleVector(ring_, cols_, std::move(y));
  }

  /// Generators of {w : M w = 0}: the reduced basis elements living entirely
  /// in the last `cols` positions.
  std::vector<ModuleVector> syzygies() const {
    std::vector<ModuleVector> out;
    for (const auto& e : basis_) {
      if (e.front().pos < rows_) continue;
      terms::List t;
      for (const auto& x : e) t.push_back(Term{x.coef, std::uint32_t(x.pos - rows_), x.mono});
      out.push_back(ModuleVector(ring_, cols_, std::move(t)));
    }
    return out;
  }

  /// Image M part of the basis: a Gröbner basis of Image M (position-over-term).
  std::vector<ModuleVector> image_basis() const {
    std::vector<ModuleVector> out;
    for (const auto& e : basis_) {
      if (e.front().pos >= rows_) continue;
      terms::List t;
      for (const auto& x : e)
        if (x.pos < rows_) t.push_back(x);
      out.push_back(ModuleVector(ring_, rows_, std::move(t)));
    }
    return out;
  }

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  Limits lim_;
  std::vector<terms::List> basis_;
};

/// Columns generate the syzygy module {w : M w = 0}; M * result == 0.
inline PolyMatrix syzygy_matrix(const PolyMatrix& M, const Limits& lim = {}) {
  Lifter L(M, lim);
  return PolyMatrix::from_columns(M.ring(), M.cols(), L.syzygies());
}

}  // namespace fpti

#endif  // FPTI_GROEBNER_HPP
