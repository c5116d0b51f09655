#ifndef FPTI_FSING_HPP
#define FPTI_FSING_HPP

#include <optional>
#include <random>
#include <vector>

#include "fpti/homology.hpp"

namespace fpti {

// ---------------------------------------------------------------------------
// Test elements

struct TestElementCertificate {
  enum class Provenance { JacobianMinor, RandomCombination, UserSupplied };

  Polynomial c;
  Provenance provenance = Provenance::JacobianMinor;
  std::size_t minor_index = 0;   // for JacobianMinor
  std::uint64_t seed = 0;        // for RandomCombination
  int attempt = 0;               // for RandomCombination
  bool nzd_checked = false;      // (I : c) = I verified
};

inline const char* to_string(TestElementCertificate::Provenance p) {
  switch (p) {
    case TestElementCertificate::Provenance::JacobianMinor: return "jacobian-minor";
    case TestElementCertificate::Provenance::RandomCombination: return "random-combination";
    case TestElementCertificate::Provenance::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

inline Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  const auto& ring = f.ring();
  terms::List t;
  for (const auto& x : f.terms()) {
    std::uint32_t a = x.mono[var];
    if (a == 0) continue;
    Coef c = ring->field().mul(x.coef, ring->field().reduce(a));
    if (c == 0) continue;
    Monomial m = x.mono;
    m.set(var, a - 1);
    t.push_back(Term{c, 0, std::move(m)});
  }
  return Polynomial(ring, std::move(t));
}

/// rows = generators, cols = variables.
inline PolyMatrix jacobian_matrix(const Ring& ring, const std::vector<Polynomial>& gens) {
  PolyMatrix J(ring, gens.size(), ring->nvars());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t s = 0; s < ring->nvars(); ++s) J(r, s) = partial_derivative(gens[r], s);
  return J;
}

/// Determinant by cofactor expansion along the first row.
inline Polynomial determinant(const PolyMatrix& M) {
  const std::size_t n = M.rows();
  if (n != M.cols()) throw Error(ErrorKind::RankMismatch, "determinant of a non-square matrix");
  if (n == 0) return Polynomial::constant(M.ring(), 1);
  if (n == 1) return M(0, 0);
  Polynomial acc(M.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (M(0, j).is_zero()) continue;
    PolyMatrix minor(M.ring(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = M(r, c);
    Polynomial term = M(0, j) * determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace detail {

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool is_nonzerodivisor(const Ideal& I, const Polynomial& c, const Limits& lim) {
  if (c.is_zero()) return false;
  return module_equal(colon(I, c, lim), I, lim);
}

}  // namespace detail

/// All distinct nonzero h x h minors of the Jacobian of I's generators, in
/// (row subset, column subset) lexicographic order.
inline std::vector<Polynomial> jacobian_minors(const Ideal& I, int h) {
  const auto& ring = I.ring();
  auto gens = I.ideal_generators();
  std::vector<Polynomial> out;
  if (h <= 0) {
    out.push_back(Polynomial::constant(ring, 1));
    return out;
  }
  PolyMatrix J = jacobian_matrix(ring, gens);
  std::vector<std::vector<std::size_t>> rows, cols;
  detail::combinations(gens.size(), std::size_t(h), rows);
  detail::combinations(ring->nvars(), std::size_t(h), cols);
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      PolyMatrix M(ring, rs.size(), cs.size());
      for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) M(a, b) = J(rs[a], cs[b]);
      Polynomial d = determinant(M);
      if (d.is_zero()) continue;
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
  return out;
}

constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;

/// A Jacobian minor (or a random F_p-combination of minors) passing the
/// nonzerodivisor check (I : c) = I. I is assumed radical with S
/// geometrically reduced; that assumption is not verified.
inline TestElementCertificate jacobian_test_element(const Ideal& I, std::uint64_t seed = kDefaultSeed,
                                                    int attempts = 32, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  const int h = codimension(I, lim);
  auto minors = jacobian_minors(I, h);
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (detail::is_nonzerodivisor(I, minors[k], lim))
      return {minors[k], TestElementCertificate::Provenance::JacobianMinor, k, 0, 0, true};

  const auto& ring = I.ring();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, ring->p() - 1);
  for (int a = 0; a < attempts && minors.size() > 1; ++a) {
    Polynomial c(ring);
    for (const auto& m : minors) c = c + m.scaled(coef(gen));
    if (detail::is_nonzerodivisor(I, c, lim))
      return {c, TestElementCertificate::Provenance::RandomCombination, 0, seed, a, true};
  }
  throw Error(ErrorKind::NoTestElement,
              "no Jacobian minor or combination is a nonzerodivisor; supply c explicitly");
}

// ---------------------------------------------------------------------------
// Parameter test ideals

struct PtiResult {
  Ideal Z;
  TestElementCertificate c;
  int h = 0;
  ExtFrobeniusData frobenius;   // (A, U) at Ext degree h, e = 1
  Submodule star_module;        // (Image A + c R^alpha)^{★U}
  int iterations = 0;
};

inline TestElementCertificate resolve_test_element(const Ideal& I, const std::optional<Polynomial>& c,
                                                   std::uint64_t seed, const Limits& lim) {
  if (!c) return jacobian_test_element(I, seed, 32, lim);
  require_same_ring(I.ring(), c->ring());
  if (c->is_zero()) throw Error(ErrorKind::InvalidArgument, "test element must be nonzero");
  TestElementCertificate cert{*c, TestElementCertificate::Provenance::UserSupplied, 0, 0, 0, false};
  if (!detail::is_nonzerodivisor(I, *c, lim))
    throw Error(ErrorKind::NoTestElement, "supplied c is a zero divisor modulo I");
  cert.nzd_checked = true;
  return cert;
}

/// Z = Ann(R^alpha / (Image A + c R^alpha)^{★U}) for (A, U) presenting
/// Ext^h(R/I, R) -> Ext^h(R/I^{[p]}, R), h = codim I. At every prime in the
/// Cohen–Macaulay locus of R/I, Z localizes to the parameter test ideal.
inline PtiResult global_pti_cm(const Ideal& I, const std::optional<Polynomial>& c = std::nullopt,
                               std::uint64_t seed = kDefaultSeed, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  PtiResult out;
  out.h = codimension(I, lim);
  out.c = resolve_test_element(I, c, seed, lim);
  auto res = free_resolution(I, lim);
  auto ext = ext_presentation(res, std::size_t(out.h), lim);
  out.frobenius = induced_frobenius_matrix(res, ext, 1, lim);
  const auto& A = out.frobenius.A;
  const auto& ring = I.ring();
  std::vector<ModuleVector> gens = A.columns();
  for (std::size_t k = 0; k < A.rows(); ++k)
    gens.push_back(out.c.c * ModuleVector::unit(ring, A.rows(), k));
  Submodule V(ring, A.rows(), std::move(gens));
  auto star = star_closure_traced(V, out.frobenius.U, 1, lim);
  out.star_module = star.module;
  out.iterations = star.iterations;
  out.Z = quotient(star.module, Submodule::full(ring, A.rows()), lim);
  return out;
}

/// J = ∏_{i<d} Ann H^i_m(S), computed by local duality as ∏ Ann Ext^{n-i}(R/I, R).
inline Ideal colon_killer_ideal(const ExtModules& ext, int d, const Limits& lim = {}) {
  const std::size_t n = ext.top();
  Ideal J = Submodule::unit_ideal(ext.resolution().ideal.ring());
  for (int i = 0; i < d; ++i) {
    Ideal a = ext.annihilator(n - std::size_t(i));
    if (a.gb(lim).is_unit_ideal()) continue;
    J = product(J, a, lim);
  }
  return J;
}

inline Ideal colon_killer_ideal(const Ideal& I, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  return colon_killer_ideal(ExtModules(I, lim), krull_dim(I, lim), lim);
}

struct SandwichResult {
  Ideal lower;  // J^d Z
  Ideal upper;  // Z
  Ideal J;
  int d = 0;
  PtiResult pti;
};

/// J^d Z ⊆ τ ⊆ Z; the two agree when R/I is Cohen–Macaulay.
inline SandwichResult pti_sandwich(const Ideal& I, const std::optional<Polynomial>& c = std::nullopt,
                                   std::uint64_t seed = kDefaultSeed, const Limits& lim = {}) {
  SandwichResult out;
  out.pti = global_pti_cm(I, c, seed, lim);
  out.d = krull_dim(I, lim);
  out.J = colon_killer_ideal(ExtModules(I, lim), out.d, lim);
  out.upper = out.pti.Z.reduced(lim);
  out.lower = out.J.gb(lim).is_unit_ideal()
                  ? out.upper
                  : product(power(out.J, unsigned(out.d), lim), out.upper, lim);
  if (!contains(out.upper, out.lower, lim))
    throw Error(ErrorKind::InvariantViolation, "sandwich lower bound not inside upper bound");
  return out;
}

// ---------------------------------------------------------------------------
// HSL numbers

struct HSLReport {
  std::size_t j = 0;
  std::vector<Submodule> chain;  // B_{j,0} ⊇ B_{j,1} ⊇ ...
  int eta = -1;                  // -1 while not stabilized
  std::vector<Ideal> loci;       // Ann(B_{j,e-1}/B_{j,e}), e = 1..eta
};

class HslCapExceeded : public Error {
 public:
  HslCapExceeded(HSLReport partial, const std::string& what)
      : Error(ErrorKind::StabilizationCapExceeded, what), partial_(std::move(partial)) {}
  const HSLReport& partial() const { return partial_; }

 private:
  HSLReport partial_;
};

/// U^{[p^{e-1}]} ... U^{[p]} U.
inline PolyMatrix frobenius_power_product(const PolyMatrix& U, unsigned e) {
  PolyMatrix P = U;
  const std::uint64_t p = U.ring()->p();
  for (unsigned k = 1; k < e; ++k) P = P.bracket(p) * U;
  return P;
}

/// B_e = Image A + I_e(Image U^{[p^{e-1}]} ... U), computed through
/// B_{e+1} = Image A + I_1(U B_e) starting from B_0 = R^alpha. The first
/// repeat B_eta = B_{eta+1} must occur by e_max; one further step B_{eta+2}
/// is computed to confirm it.
inline HSLReport hsl_chain(const ExtFrobeniusData& data, unsigned e_max, const Limits& lim = {}) {
  if (e_max < 1) throw Error(ErrorKind::InvalidArgument, "e_max must be >= 1");
  const auto& ring = data.A.ring();
  const std::size_t alpha = data.A.rows();
  HSLReport rep;
  rep.j = data.i;
  Submodule image_a = Submodule::from_matrix(data.A);
  auto step = [&](const Submodule& prev) {
    return data.is_zero ? prev : sum(image_a, fe_root(image_under(data.U, prev), 1, lim)).reduced(lim);
  };
  rep.chain.push_back(Submodule::full(ring, alpha).reduced(lim));
  for (unsigned e = 1; e <= e_max; ++e) {
    Submodule next = step(rep.chain.back());
    bool stable = contains(next, rep.chain.back(), lim);
    rep.chain.push_back(next);
    if (stable) {
      rep.eta = static_cast<int>(e) - 1;
      Submodule confirm = step(next);
      rep.chain.push_back(confirm);
      if (!module_equal(confirm, next, lim))
        throw Error(ErrorKind::InvariantViolation, "HSL chain moved after stabilizing");
      break;
    }
  }
  for (std::size_t e = 1; e < rep.chain.size(); ++e) {
    if (rep.eta >= 0 && e > std::size_t(rep.eta)) break;
    rep.loci.push_back(quotient(rep.chain[e], rep.chain[e - 1], lim));
  }
  if (rep.eta < 0)
    throw HslCapExceeded(rep, "HSL chain did not stabilize within e_max = " + std::to_string(e_max));
  return rep;
}

inline HSLReport hsl_chain(const Ideal& I, std::size_t j, unsigned e_max, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  auto res = free_resolution(I, lim);
  return hsl_chain(induced_frobenius_matrix(res, ext_presentation(res, j, lim), 1, lim), e_max, lim);
}

inline int hsl_global_bound(const Ideal& I, unsigned e_max, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  ExtModules ext(I, lim);
  int best = 0;
  for (std::size_t j = 0; j <= ext.top(); ++j)
    best = std::max(best, hsl_chain(ext.frobenius(j, 1), e_max, lim).eta);
  return best;
}

/// ⋂_j Ann(B_{j,0} / B_{j,1}): primes avoiding it are exactly those where
/// every η(P, j) = 0.
inline Ideal f_injective_locus(const Ideal& I, const Limits& lim = {}) {
  detail::require_proper(I, lim);
  ExtModules ext(I, lim);
  Ideal acc = Submodule::unit_ideal(I.ring());
  for (std::size_t j = 0; j <= ext.top(); ++j) {
    auto data = ext.frobenius(j, 1);
    if (data.is_zero) continue;
    Submodule b1 = sum(Submodule::from_matrix(data.A),
                       fe_root(Submodule::from_matrix(data.U), 1, lim));
    Ideal a = quotient(b1, Submodule::full(I.ring(), data.A.rows()), lim);
    if (a.gb(lim).is_unit_ideal()) continue;
    acc = intersect(acc, a, lim);
  }
  return acc.reduced(lim);
}

}  // namespace fpti

#endif  // FPTI_FSING_HPP
