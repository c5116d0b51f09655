#ifndef FPTI_FIELD_HPP
#define FPTI_FIELD_HPP

#include <cstdint>

namespace fpti {

using Coef = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Arithmetic in F_p for p < 2^16. Products fit in 32 bits before reduction;
/// 64-bit intermediates are used anyway so the same code serves the oracles.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t characteristic() const { return p_; }

  Coef reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coef>(r < 0 ? r + p_ : r);
  }
  Coef add(Coef a, Coef b) const {
    Coef s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + p_ - b; }
  Coef neg(Coef a) const { return a == 0 ? 0 : p_ - a; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coef pow(Coef a, std::uint64_t k) const {
    std::uint64_t base = a % p_, acc = 1;
    while (k) {
      if (k & 1) acc = acc * base % p_;
      base = base * base % p_;
      k >>= 1;
    }
    return static_cast<Coef>(acc);
  }
  /// a must be nonzero.
  Coef inv(Coef a) const { return pow(a, p_ - 2); }

 private:
  std::uint32_t p_;
};

}  // namespace fpti

#endif  // FPTI_FIELD_HPP
