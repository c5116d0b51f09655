#ifndef FPTI_ORACLE_HPP
#define FPTI_ORACLE_HPP

// Deliberately naive verifiers for small instances. Nothing here calls into
// the Frobenius-root or intersection fast paths it is meant to check.

#include <map>
#include <random>
#include <vector>

#include "fpti/frobenius.hpp"

namespace fpti::oracle {

/// Bounds for randomly generated instances.
struct InstanceSpec {
  std::uint32_t p = 2;
  std::size_t n = 2;
  unsigned max_degree = 3;
  std::size_t ambient_rank = 1;
  std::size_t generator_count = 2;
  std::uint64_t seed = 1;
  unsigned max_terms = 4;
};

inline Ring instance_ring(const InstanceSpec& s) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> vars(names, names + s.n);
  return make_ring(s.p, vars);
}

/// A random vector with at most `max_terms` terms of degree <= max_degree.
inline ModuleVector random_vector(const Ring& ring, const InstanceSpec& s, std::mt19937_64& rng,
                                  bool homogeneous = false) {
  std::uniform_int_distribution<unsigned> deg_d(0, s.max_degree);
  std::uniform_int_distribution<std::uint32_t> coef_d(1, ring->p() - 1);
  std::uniform_int_distribution<std::size_t> pos_d(0, s.ambient_rank - 1);
  std::uniform_int_distribution<std::size_t> var_d(0, ring->nvars() - 1);
  std::uniform_int_distribution<unsigned> nterms_d(1, s.max_terms);
  unsigned fixed_deg = deg_d(rng);
  terms::List t;
  for (unsigned k = 0, nt = nterms_d(rng); k < nt; ++k) {
    Monomial m = ring->one();
    unsigned d = homogeneous ? fixed_deg : deg_d(rng);
    for (unsigned i = 0; i < d; ++i) m = m * ring->var_monomial(var_d(rng));
    t.push_back(Term{coef_d(rng), std::uint32_t(pos_d(rng)), m});
  }
  return ModuleVector(ring, s.ambient_rank, std::move(t));
}

inline Submodule random_submodule(const Ring& ring, const InstanceSpec& s, std::mt19937_64& rng,
                                  bool homogeneous = false) {
  std::vector<ModuleVector> gens;
  for (std::size_t k = 0; k < s.generator_count; ++k) gens.push_back(random_vector(ring, s, rng, homogeneous));
  return Submodule(ring, s.ambient_rank, std::move(gens));
}

inline PolyMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols,
                                const InstanceSpec& s, std::mt19937_64& rng) {
  InstanceSpec one = s;
  one.ambient_rank = 1;
  PolyMatrix M(ring, rows, cols);
  std::bernoulli_distribution sparse(0.3);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!sparse(rng)) M(i, j) = random_vector(ring, one, rng).component(0);
  return M;
}

// ---------------------------------------------------------------------------
// dense_fe_root

/// I_e(K) by dense regrouping: each generator becomes a coefficient grid
/// indexed by (position, exponent vector); cells are regrouped by exponent
/// residue mod p^e using mixed-radix index arithmetic.
inline Submodule dense_fe_root(const Submodule& K, unsigned e) {
  const auto& ring = K.ring();
  const std::size_t n = ring->nvars(), alpha = K.rank();
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) q *= ring->p();
  if (q > 64) throw Error(ErrorKind::BoundsExceeded, "dense_fe_root: p^e too large");
  if (e == 0) return K;

  std::vector<ModuleVector> out;
  for (const auto& g : K.gens()) {
    // grid extents, rounded up to a multiple of q
    std::vector<std::uint64_t> ext(n, q);
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < n; ++i) ext[i] = std::max<std::uint64_t>(ext[i], (t.mono[i] / q + 1) * q);
    std::uint64_t cells = alpha;
    for (auto x : ext) {
      cells *= x;
      if (x > 256 || cells > (1u << 22)) throw Error(ErrorKind::BoundsExceeded, "dense_fe_root: grid too large");
    }
    std::vector<std::uint32_t> grid(cells, 0);
    auto index = [&](std::uint32_t pos, const std::vector<std::uint64_t>& a) {
      std::uint64_t idx = pos;
      for (std::size_t i = 0; i < n; ++i) idx = idx * ext[i] + a[i];
      return idx;
    };
    for (const auto& t : g.terms()) {
      std::vector<std::uint64_t> a(n);
      for (std::size_t i = 0; i < n; ++i) a[i] = t.mono[i];
      grid[index(t.pos, a)] = t.coef;
    }
    // walk residues r ∈ [0,q)^n, then quotient cells a = q*s + r
    std::vector<std::uint64_t> qext(n);
    std::uint64_t qcells = 1;
    for (std::size_t i = 0; i < n; ++i) {
      qext[i] = ext[i] / q;
      qcells *= qext[i];
    }
    std::uint64_t rcells = 1;
    for (std::size_t i = 0; i < n; ++i) rcells *= q;
    for (std::uint64_t r = 0; r < rcells; ++r) {
      std::vector<std::uint64_t> res(n);
      for (std::uint64_t x = r, i = n; i-- > 0;) {
        res[i] = x % q;
        x /= q;
      }
      terms::List root;
      for (std::uint32_t pos = 0; pos < alpha; ++pos)
        for (std::uint64_t s = 0; s < qcells; ++s) {
          std::vector<std::uint64_t> quo(n), a(n);
          for (std::uint64_t x = s, i = n; i-- > 0;) {
            quo[i] = x % qext[i];
            x /= qext[i];
          }
          for (std::size_t i = 0; i < n; ++i) a[i] = quo[i] * q + res[i];
          std::uint32_t c = grid[index(pos, a)];
          if (!c) continue;
          Monomial::Exps ex;
          for (auto v : quo) ex.push_back(static_cast<std::uint32_t>(v));
          root.push_back(Term{c, pos, Monomial(std::move(ex))});
        }
      if (!root.empty()) out.push_back(ModuleVector(ring, alpha, std::move(root)));
    }
  }
  return Submodule(ring, alpha, std::move(out));
}

// ---------------------------------------------------------------------------
// brute_intersect

namespace detail {

/// Row reduction over F_p; returns the rank and leaves `rows` in echelon form.
inline std::size_t echelon(std::vector<std::vector<std::uint32_t>>& rows, std::size_t ncols,
                           std::uint32_t p) {
  const PrimeField F(p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Coef inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Coef f = rows[k][c];
      for (std::size_t j = 0; j < rows[k].size(); ++j) rows[k][j] = F.sub(rows[k][j], F.mul(f, rows[r][j]));
    }
    ++r;
  }
  return r;
}

inline void monomials_up_to(std::size_t n, unsigned D, std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(rec, 0, D);
}

}  // namespace detail

/// All elements of W1 ∩ W2 reachable in degree <= bound: the intersection of
/// the F_p-spans of {m g : deg(m g) <= bound} for the two generator sets.
inline Submodule brute_intersect(const Submodule& W1, const Submodule& W2, unsigned degree_bound) {
  const auto& ring = W1.ring();
  const std::size_t n = ring->nvars(), alpha = W1.rank();
  if (W2.rank() != alpha) throw Error(ErrorKind::RankMismatch, "brute_intersect: rank mismatch");
  std::vector<std::vector<std::uint32_t>> monos;
  detail::monomials_up_to(n, degree_bound, monos);
  std::map<std::vector<std::uint32_t>, std::size_t> mindex;
  for (std::size_t k = 0; k < monos.size(); ++k) mindex[monos[k]] = k;
  const std::size_t N = monos.size() * alpha;
  if (N > 3000) throw Error(ErrorKind::BoundsExceeded, "brute_intersect: coefficient space too large");

  auto span_rows = [&](const Submodule& W) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : W.gens()) {
      unsigned gdeg = 0;
      for (const auto& t : g.terms()) gdeg = std::max<unsigned>(gdeg, unsigned(t.mono.degree()));
      if (gdeg > degree_bound) continue;
      for (const auto& m : monos) {
        unsigned md = 0;
        for (auto a : m) md += a;
        if (md + gdeg > degree_bound) continue;
        std::vector<std::uint32_t> row(N, 0);
        for (const auto& t : g.terms()) {
          std::vector<std::uint32_t> a(n);
          for (std::size_t i = 0; i < n; ++i) a[i] = t.mono[i] + m[i];
          row[t.pos * monos.size() + mindex.at(a)] = t.coef;
        }
        rows.push_back(std::move(row));
      }
    }
    auto r = detail::echelon(rows, N, ring->p());
    rows.resize(r);
    return rows;
  };
  auto B1 = span_rows(W1), B2 = span_rows(W2);
  // left kernel of [B1; B2]: augment with identity, eliminate on the first N columns
  const std::size_t k1 = B1.size(), k = B1.size() + B2.size();
  std::vector<std::vector<std::uint32_t>> aug;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<std::uint32_t> row(N + k, 0);
    const auto& src = r < k1 ? B1[r] : B2[r - k1];
    std::copy(src.begin(), src.end(), row.begin());
    row[N + r] = 1;
    aug.push_back(std::move(row));
  }
  detail::echelon(aug, N, ring->p());
  std::vector<ModuleVector> out;
  const PrimeField F(ring->p());
  for (const auto& row : aug) {
    if (std::any_of(row.begin(), row.begin() + std::ptrdiff_t(N), [](auto x) { return x != 0; })) continue;
    std::vector<std::uint32_t> v(N, 0);
    for (std::size_t r = 0; r < k1; ++r) {
      Coef a = row[N + r];
      if (!a) continue;
      for (std::size_t c = 0; c < N; ++c) v[c] = F.add(v[c], F.mul(a, B1[r][c]));
    }
    terms::List t;
    for (std::size_t c = 0; c < N; ++c) {
      if (!v[c]) continue;
      const auto& m = monos[c % monos.size()];
      t.push_back(Term{v[c], std::uint32_t(c / monos.size()), Monomial(Monomial::Exps(m.begin(), m.end()))});
    }
    if (!t.empty()) out.push_back(ModuleVector(ring, alpha, std::move(t)));
  }
  return Submodule(ring, alpha, std::move(out));
}

// ---------------------------------------------------------------------------

/// W ⊇ V, U W ⊆ W^{[p^e]}, and V^{★U} ⊆ W.
inline bool verify_star_minimality(const Submodule& V, const PolyMatrix& U, const Submodule& W,
                                   unsigned e = 1, const Limits& lim = {}) {
  require_same_ambient(V, W);
  if (U.rows() != V.rank() || U.cols() != V.rank())
    throw Error(ErrorKind::RankMismatch, "U must be square of the ambient rank");
  if (!contains(W, V, lim)) return false;
  if (!contains(bracket_power(W, e), image_under(U, W), lim)) return false;
  return contains(W, star_closure(V, U, e, lim), lim);
}

/// z^{p^e} ∈ I^{[p^e]} for some e <= e_max.
inline bool frobenius_closure_membership(const Polynomial& z, const Ideal& I, unsigned e_max,
                                         const Limits& lim = {}) {
  for (unsigned e = 0; e <= e_max; ++e)
    if (membership(bracket_power(z, e), bracket_power(I, e), lim)) return true;
  return false;
}

}  // namespace fpti::oracle

#endif  // FPTI_ORACLE_HPP
