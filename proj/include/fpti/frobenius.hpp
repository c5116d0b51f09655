#ifndef FPTI_FROBENIUS_HPP
#define FPTI_FROBENIUS_HPP

#include <map>
#include <vector>

#include "fpti/submodule.hpp"

namespace fpti {

/// e together with q = p^e; q is kept below 2^31.
struct BracketExponent {
  unsigned e = 0;
  std::uint64_t q = 1;

  BracketExponent(std::uint32_t p, unsigned exponent) : e(exponent) {
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q >= (std::uint64_t(1) << 31))
        throw Error(ErrorKind::ExponentOverflow, "p^e does not fit below 2^31");
    }
  }
};

inline ModuleVector bracket_power(const ModuleVector& v, unsigned e) {
  return v.bracket(BracketExponent(v.ring()->p(), e).q);
}

inline Polynomial bracket_power(const Polynomial& f, unsigned e) {
  return f.bracket(BracketExponent(f.ring()->p(), e).q);
}

inline PolyMatrix bracket_power(const PolyMatrix& M, unsigned e) {
  return M.bracket(BracketExponent(M.ring()->p(), e).q);
}

/// W^{[p^e]}, generated by the bracket powers of W's generators.
inline Submodule bracket_power(const Submodule& W, unsigned e) {
  const auto q = BracketExponent(W.ring()->p(), e).q;
  std::vector<ModuleVector> g;
  for (const auto& v : W.gens()) g.push_back(v.bracket(q));
  return Submodule(W.ring(), W.rank(), std::move(g));
}

namespace detail {

/// Writes v = Σ_b u_b^{[q]} b over the monomial basis b = x^a, 0 <= a_i < q,
/// and returns the nonzero u_b ordered by b. Coefficients pass through
/// unchanged: Frobenius is the identity on F_p.
inline std::vector<ModuleVector> root_components(const ModuleVector& v, std::uint32_t q) {
  std::map<std::vector<std::uint32_t>, terms::List> buckets;
  for (const auto& t : v.terms()) {
    auto [quo, rem] = t.mono.divmod(q);
    std::vector<std::uint32_t> key(rem.exps().begin(), rem.exps().end());
    buckets[std::move(key)].push_back(Term{t.coef, t.pos, std::move(quo)});
  }
  std::vector<ModuleVector> out;
  out.reserve(buckets.size());
  for (auto& [b, t] : buckets) out.push_back(ModuleVector(v.ring(), v.rank(), std::move(t)));
  return out;
}

}  // namespace detail

/// I_e(K): the smallest submodule L with K ⊆ L^{[p^e]}. Returned presented by
/// its reduced Gröbner basis.
inline Submodule fe_root(const Submodule& K, unsigned e, const Limits& lim = {}) {
  if (e == 0) return K;
  const auto q = BracketExponent(K.ring()->p(), e).q;
  std::vector<ModuleVector> gens;
  for (const auto& v : K.gens()) {
    auto parts = detail::root_components(v, static_cast<std::uint32_t>(q));
    gens.insert(gens.end(), parts.begin(), parts.end());
  }
  return Submodule(K.ring(), K.rank(), std::move(gens)).reduced(lim);
}

struct StarClosureResult {
  Submodule module;
  int iterations = 0;  // chain steps taken before the stable value appeared
};

/// V^{★U}: the smallest W ⊇ V with U W ⊆ W^{[p^e]}, as the stable value of
/// V_0 = V, V_{i+1} = V_i + I_e(U V_i).
inline StarClosureResult star_closure_traced(const Submodule& V, const PolyMatrix& U, unsigned e = 1,
                                             const Limits& lim = {}) {
  require_same_ring(V.ring(), U.ring());
  if (U.rows() != V.rank() || U.cols() != V.rank())
    throw Error(ErrorKind::RankMismatch, "U must be square of the ambient rank");
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "star closure needs e >= 1");
  Submodule cur = V.reduced(lim);
  for (int it = 0; it < lim.star_iterations; ++it) {
    Submodule step = fe_root(image_under(U, cur), e, lim);
    if (contains(cur, step, lim)) return {cur, it};
    cur = sum(cur, step).reduced(lim);
  }
  throw Error(ErrorKind::IterationCap,
              "star closure did not stabilize within " + std::to_string(lim.star_iterations) +
                  " iterations");
}

inline Submodule star_closure(const Submodule& V, const PolyMatrix& U, unsigned e = 1,
                              const Limits& lim = {}) {
  return star_closure_traced(V, U, e, lim).module;
}

}  // namespace fpti

#endif  // FPTI_FROBENIUS_HPP
