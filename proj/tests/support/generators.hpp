#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fpti/oracle.hpp"

namespace fpti::testing {

inline Polynomial P(const Ring& ring, const std::string& s) { return parse_polynomial(ring, s); }

inline Ideal ideal(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(P(ring, s));
  return Ideal::ideal(ring, g);
}

/// Draws random instance bounds within p ∈ {2,3,5}, n <= 3, degree <= 4.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  oracle::InstanceSpec spec(std::size_t max_rank = 1, unsigned max_degree = 4, std::size_t max_n = 3,
                            std::size_t max_gens = 3) {
    static const std::uint32_t primes[] = {2, 3, 5};
    oracle::InstanceSpec s;
    s.p = primes[pick(0, 2)];
    s.n = pick(1, max_n);
    s.max_degree = unsigned(pick(1, max_degree));
    s.ambient_rank = pick(1, max_rank);
    s.generator_count = pick(1, max_gens);
    s.max_terms = unsigned(pick(1, 4));
    s.seed = rng_();
    return s;
  }

  unsigned exponent(unsigned max_e = 2) { return unsigned(pick(1, max_e)); }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Submodule submodule(const Ring& ring, const oracle::InstanceSpec& s, bool homogeneous = false) {
    return oracle::random_submodule(ring, s, rng_, homogeneous);
  }

  ModuleVector vector(const Ring& ring, const oracle::InstanceSpec& s) {
    return oracle::random_vector(ring, s, rng_);
  }

  PolyMatrix matrix(const Ring& ring, std::size_t rows, std::size_t cols, const oracle::InstanceSpec& s) {
    return oracle::random_matrix(ring, rows, cols, s, rng_);
  }

  /// Homogeneous polynomial of degree d with up to `terms` terms.
  Polynomial form(const Ring& ring, unsigned d, unsigned terms) {
    terms::List t;
    std::uniform_int_distribution<std::uint32_t> coef(1, ring->p() - 1);
    for (unsigned k = 0, nt = unsigned(pick(1, terms)); k < nt; ++k) {
      Monomial m = ring->one();
      for (unsigned i = 0; i < d; ++i) m = m * ring->var_monomial(pick(0, ring->nvars() - 1));
      t.push_back(Term{coef(rng_), 0, m});
    }
    return Polynomial(ring, std::move(t));
  }

  /// Homogeneous ideal in n >= 2 variables with 1..max_gens generators of
  /// degree 2..max_degree; about a third are monomial ideals.
  Ideal singular_ideal(const Ring& ring, unsigned max_degree, std::size_t max_gens) {
    const unsigned terms = pick(0, 2) == 0 ? 1 : 3;
    for (;;) {
      std::vector<Polynomial> gens;
      for (std::size_t k = 0, m = pick(1, max_gens); k < m; ++k)
        gens.push_back(form(ring, unsigned(pick(2, std::max(2u, max_degree))), terms));
      Ideal I = Ideal::ideal(ring, gens);
      if (!I.is_zero()) return I;
    }
  }

  /// Random proper ideal, retried until it is not the unit ideal.
  Ideal proper_ideal(const Ring& ring, oracle::InstanceSpec s) {
    s.ambient_rank = 1;
    for (;;) {
      Ideal I = submodule(ring, s, true);
      if (!I.is_zero() && !I.gb().is_unit_ideal()) return I;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fpti::testing
