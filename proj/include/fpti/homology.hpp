#ifndef FPTI_HOMOLOGY_HPP
#define FPTI_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "fpti/frobenius.hpp"

namespace fpti {

/// A free resolution ... -> F_2 --d_2--> F_1 --d_1--> F_0 = R of R/I, stored
/// as differentials[j-1] = d_j (rank F_{j-1} x rank F_j).
struct ResolutionData {
  Ideal ideal;
  std::vector<PolyMatrix> differentials;

  std::size_t length() const { return differentials.size(); }
  std::size_t rank(std::size_t j) const {
    if (j == 0) return 1;
    return j <= differentials.size() ? differentials[j - 1].cols() : 0;
  }
  const PolyMatrix& d(std::size_t j) const { return differentials.at(j - 1); }
};

namespace detail {

/// Drops generators lying in the span of the remaining ones.
inline std::vector<ModuleVector> prune_generators(const Ring& ring, std::size_t rank,
                                                  std::vector<ModuleVector> gens, const Limits& lim) {
  for (std::size_t k = gens.size(); k-- > 0;) {
    if (gens.size() == 1) break;
    std::vector<ModuleVector> others;
    for (std::size_t l = 0; l < gens.size(); ++l)
      if (l != k) others.push_back(gens[l]);
    if (membership(gens[k], Submodule(ring, rank, others), lim)) gens = std::move(others);
  }
  return gens;
}

inline void require_proper(const Ideal& I, const Limits& lim) {
  if (I.rank() != 1) throw Error(ErrorKind::RankMismatch, "expected an ideal");
  if (I.gb(lim).is_unit_ideal()) throw Error(ErrorKind::InvalidArgument, "ideal must be proper");
}

}  // namespace detail

/// Resolution of R/I by iterated syzygies, pruning redundant generators at
/// each stage. Stops at the first zero syzygy module.
inline ResolutionData free_resolution(const Ideal& I, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  const auto& ring = I.ring();
  ResolutionData res{I, {}};
  auto gens = detail::prune_generators(ring, 1, I.gens(), lim);
  if (gens.empty()) return res;
  PolyMatrix cur = PolyMatrix::from_columns(ring, 1, gens);
  const std::size_t cap = ring->nvars() + 4;
  while (true) {
    res.differentials.push_back(cur);
    Lifter L(cur, lim);
    auto syz = detail::prune_generators(ring, cur.cols(), L.syzygies(), lim);
    if (syz.empty()) break;
    if (res.differentials.size() >= cap)
      throw Error(ErrorKind::ResourceCap, "resolution did not terminate");
    cur = PolyMatrix::from_columns(ring, cur.cols(), syz);
  }
  return res;
}

/// Coker A ≅ Ext^i(R/I, R), together with the cocycle generators K the
/// presentation is written against: Ext^i = Image K / Image d_i^T, and
/// column l of A-space corresponds to column l of K.
struct ExtPresentation {
  std::size_t i = 0;
  PolyMatrix A;
  PolyMatrix K;         // rank F_i x alpha; empty (0 columns) for the zero module
  bool is_zero = false;
};

inline ExtPresentation ext_presentation(const ResolutionData& res, std::size_t i,
                                        const Limits& lim = {}) {
  const auto& ring = res.ideal.ring();
  if (i > ring->nvars()) throw Error(ErrorKind::InvalidArgument, "Ext degree exceeds number of variables");
  ExtPresentation out;
  out.i = i;
  auto zero_module = [&] {
    out.A = PolyMatrix::identity(ring, 1);
    out.K = PolyMatrix(ring, res.rank(i), 0);
    out.is_zero = true;
    return out;
  };
  const std::size_t ri = res.rank(i);
  if (ri == 0) return zero_module();

  // cocycles: ker d_{i+1}^T
  PolyMatrix K = i + 1 <= res.length()
                     ? syzygy_matrix(res.d(i + 1).transpose(), lim)
                     : PolyMatrix::identity(ring, ri);
  if (K.cols() == 0) return zero_module();

  Lifter L(K, lim);
  std::vector<ModuleVector> cols;
  if (i >= 1) {
    PolyMatrix dT = res.d(i).transpose();
    for (const auto& c : dT.columns()) {
      auto y = L.lift(c);
      if (!y) throw Error(ErrorKind::InvariantViolation, "coboundary is not a cocycle");
      if (!y->is_zero()) cols.push_back(*y);
    }
  }
  for (auto& s : L.syzygies()) cols.push_back(std::move(s));
  if (cols.empty()) cols.push_back(ModuleVector(ring, K.cols()));
  out.A = PolyMatrix::from_columns(ring, K.cols(), cols);
  if (Submodule::from_matrix(out.A).is_full(lim)) return zero_module();
  out.K = std::move(K);
  return out;
}

inline PolyMatrix ext_presentation(const Ideal& I, std::size_t i, const Limits& lim = {}) {
  return ext_presentation(free_resolution(I, lim), i, lim).A;
}

/// Coker A --U--> Coker A^{[p^e]}: the map Ext^i(R/I, R) -> Ext^i(R/I^{[p^e]}, R)
/// induced by R/I^{[p^e]} -> R/I.
struct ExtFrobeniusData {
  std::size_t i = 0;
  unsigned e = 1;
  PolyMatrix A;
  PolyMatrix U;
  bool is_zero = false;
};

/// Chain map phi_j : F_j^{[q]} -> F_j lifting the identity on R, so that
/// d_j phi_j = phi_{j-1} d_j^{[q]}. Returns phi_0 .. phi_upto.
inline std::vector<PolyMatrix> frobenius_chain_map(const ResolutionData& res, std::size_t upto,
                                                   unsigned e, const Limits& lim = {}) {
  const auto& ring = res.ideal.ring();
  const auto q = BracketExponent(ring->p(), e).q;
  std::vector<PolyMatrix> phi{PolyMatrix::identity(ring, 1)};
  for (std::size_t j = 1; j <= upto && j <= res.length(); ++j) {
    const PolyMatrix& d = res.d(j);
    PolyMatrix target = phi.back() * d.bracket(q);
    Lifter L(d, lim);
    std::vector<ModuleVector> cols;
    for (const auto& c : target.columns()) {
      auto y = L.lift(c);
      if (!y) throw Error(ErrorKind::InvariantViolation, "chain map lift failed at degree " + std::to_string(j));
      cols.push_back(*y);
    }
    phi.push_back(PolyMatrix::from_columns(ring, d.cols(), cols));
  }
  return phi;
}

inline ExtFrobeniusData induced_frobenius_matrix(const ResolutionData& res,
                                                 const ExtPresentation& ext, unsigned e,
                                                 const Limits& lim = {}) {
  const auto& ring = res.ideal.ring();
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "Frobenius exponent must be >= 1");
  const auto q = BracketExponent(ring->p(), e).q;
  ExtFrobeniusData out{ext.i, e, ext.A, PolyMatrix(ring, 1, 1), ext.is_zero};
  if (ext.is_zero) return out;

  auto phi = frobenius_chain_map(res, ext.i, e, lim);
  PolyMatrix phiT = phi[ext.i].transpose();
  Lifter L(ext.K, lim);
  const std::size_t alpha = ext.K.cols();
  std::vector<ModuleVector> cols;
  for (const auto& k : ext.K.columns()) {
    ModuleVector w = phiT * k;
    // w ∈ (Image K)^{[q]}: every basis component w_b lies in Image K.
    terms::List u;
    std::map<std::vector<std::uint32_t>, terms::List> buckets;
    for (const auto& t : w.terms()) {
      auto [quo, rem] = t.mono.divmod(static_cast<std::uint32_t>(q));
      buckets[std::vector<std::uint32_t>(rem.exps().begin(), rem.exps().end())].push_back(
          Term{t.coef, t.pos, std::move(quo)});
    }
    for (auto& [b, part] : buckets) {
      auto y = L.lift(ModuleVector(ring, w.rank(), std::move(part)));
      if (!y) throw Error(ErrorKind::InvariantViolation, "Frobenius image is not a cocycle of the bracket complex");
      Monomial bm(Monomial::Exps(b.begin(), b.end()));
      for (const auto& t : y->terms()) u.push_back(Term{t.coef, t.pos, t.mono.scaled(q) * bm});
    }
    cols.push_back(ModuleVector(ring, alpha, std::move(u)));
  }
  out.U = PolyMatrix::from_columns(ring, alpha, cols);
  return out;
}

inline ExtFrobeniusData induced_frobenius_matrix(const Ideal& I, std::size_t i, unsigned e,
                                                 const Limits& lim = {}) {
  auto res = free_resolution(I, lim);
  return induced_frobenius_matrix(res, ext_presentation(res, i, lim), e, lim);
}

/// codim I = n - dim R/I.
inline int codimension(const Ideal& I, const Limits& lim = {}) {
  return static_cast<int>(I.ring()->nvars()) - krull_dim(I, lim);
}

/// All Ext^i(R/I, R), i = 0..n, against one resolution.
class ExtModules {
 public:
  explicit ExtModules(const Ideal& I, const Limits& lim = {})
      : lim_(lim), res_(free_resolution(I, lim)) {
    for (std::size_t i = 0; i <= I.ring()->nvars(); ++i) ext_.push_back(ext_presentation(res_, i, lim));
  }

  const ResolutionData& resolution() const { return res_; }
  const ExtPresentation& ext(std::size_t i) const { return ext_.at(i); }
  std::size_t top() const { return ext_.size() - 1; }

  ExtFrobeniusData frobenius(std::size_t i, unsigned e = 1) const {
    return induced_frobenius_matrix(res_, ext_.at(i), e, lim_);
  }

  Ideal annihilator(std::size_t i) const {
    if (ext_.at(i).is_zero) return Submodule::unit_ideal(res_.ideal.ring());
    return ann_cokernel(ext_.at(i).A, lim_);
  }

 private:
  Limits lim_;
  ResolutionData res_;
  std::vector<ExtPresentation> ext_;
};

/// Ideal cutting out the non-Cohen–Macaulay locus of R/I: P is CM iff at
/// most one Ext^i(R/I, R)_P is nonzero, so the locus is the union over
/// i < j of Supp Ext^i ∩ Supp Ext^j.
inline Ideal non_cm_locus(const Ideal& I, const Limits& lim = {}) {
  ExtModules ext(I, lim);
  std::vector<Ideal> anns;
  for (std::size_t i = 0; i <= ext.top(); ++i) {
    Ideal a = ext.annihilator(i);
    if (!a.gb(lim).is_unit_ideal()) anns.push_back(a);
  }
  Ideal acc = Submodule::unit_ideal(I.ring());
  bool first = true;
  for (std::size_t a = 0; a < anns.size(); ++a)
    for (std::size_t b = a + 1; b < anns.size(); ++b) {
      Ideal both = sum(anns[a], anns[b]).reduced(lim);
      acc = first ? both : intersect(acc, both, lim);
      first = false;
    }
  return acc;
}

}  // namespace fpti

#endif  // FPTI_HOMOLOGY_HPP
