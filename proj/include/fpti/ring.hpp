#ifndef FPTI_RING_HPP
#define FPTI_RING_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <regex>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fpti/error.hpp"
#include "fpti/field.hpp"

namespace fpti {

enum class MonoOrder { Lex, GrevLex };
enum class ModuleOrder { PositionOverTerm, TermOverPosition };

/// Monomial order plus its extension to free modules. Lower positions always
/// take precedence (e_0 > e_1 > ...).
struct OrderSpec {
  MonoOrder mono = MonoOrder::GrevLex;
  ModuleOrder module = ModuleOrder::PositionOverTerm;

  bool operator==(const OrderSpec&) const = default;
};

inline const char* to_string(MonoOrder o) { return o == MonoOrder::Lex ? "lex" : "grevlex"; }

// ---------------------------------------------------------------------------
// Monomial

class Monomial {
 public:
  using Exps = boost::container::small_vector<std::uint32_t, 6>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exps exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {
    for (auto e : exps_) degree_ += e;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  const Exps& exps() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      std::uint64_t s = std::uint64_t(r.exps_[i]) + o.exps_[i];
      if (s > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorKind::ExponentOverflow, "monomial exponent exceeds 32 bits");
      r.exps_[i] = static_cast<std::uint32_t>(s);
    }
    r.degree_ += o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// this / o; requires o | this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    r.degree_ -= o.degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    r.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] && o.exps_[i]) return false;
    return true;
  }

  /// Every exponent multiplied by q.
  Monomial scaled(std::uint64_t q) const {
    Monomial r(*this);
    r.degree_ = 0;
    for (auto& e : r.exps_) {
      std::uint64_t s = std::uint64_t(e) * q;
      if (s > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorKind::ExponentOverflow, "bracket power exponent exceeds 32 bits");
      e = static_cast<std::uint32_t>(s);
      r.degree_ += e;
    }
    return r;
  }

  /// Split x^a as (x^{a div q})^q * x^{a mod q}.
  std::pair<Monomial, Monomial> divmod(std::uint32_t q) const {
    Monomial quo(*this), rem(*this);
    quo.degree_ = rem.degree_ = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      quo.exps_[i] = exps_[i] / q;
      rem.exps_[i] = exps_[i] % q;
      quo.degree_ += quo.exps_[i];
      rem.degree_ += rem.exps_[i];
    }
    return {quo, rem};
  }

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && exps_ == o.exps_; }

 private:
  Exps exps_;
  std::uint64_t degree_ = 0;
};

/// A coefficient times a monomial in position `pos` of a free module.
/// Polynomials are rank-one vectors: every term has pos == 0.
struct Term {
  Coef coef = 0;
  std::uint32_t pos = 0;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

// ---------------------------------------------------------------------------
// RingCtx

class RingCtx;
using Ring = std::shared_ptr<const RingCtx>;

/// Ambient data every value is interpreted against: F_p[vars] with an order.
class RingCtx {
 public:
  RingCtx(std::uint32_t p, std::vector<std::string> vars, OrderSpec order)
      : field_(p), vars_(std::move(vars)), order_(order) {
    if (p >= (1u << 16) || !is_prime(p))
      throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not a prime below 2^16");
    static const std::regex name_re("[A-Za-z][A-Za-z0-9_]*");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (!std::regex_match(v, name_re))
        throw Error(ErrorKind::InvalidVariable, "invalid variable name '" + v + "'");
      if (!seen.insert(v).second)
        throw Error(ErrorKind::DuplicateVariable, "variable '" + v + "' repeated");
    }
  }

  std::uint32_t p() const { return field_.characteristic(); }
  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  OrderSpec order() const { return order_; }

  std::ptrdiff_t var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }

  /// Monomial comparison under the ring's monomial order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = vars_.size();
    if (order_.mono == MonoOrder::GrevLex) {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }

  /// Term comparison in the module order `mod` (coefficients ignored).
  std::strong_ordering compare(const Term& a, const Term& b, ModuleOrder mod) const {
    if (mod == ModuleOrder::PositionOverTerm) {
      if (a.pos != b.pos) return b.pos <=> a.pos;
      return compare(a.mono, b.mono);
    }
    auto c = compare(a.mono, b.mono);
    if (c != 0) return c;
    return b.pos <=> a.pos;
  }

  std::strong_ordering compare(const Term& a, const Term& b) const {
    return compare(a, b, order_.module);
  }

  Monomial one() const { return Monomial(vars_.size()); }
  Monomial var_monomial(std::size_t i, std::uint32_t e = 1) const {
    Monomial m(vars_.size());
    m.set(i, e);
    return m;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  OrderSpec order_;
};

inline Ring make_ring(std::uint32_t p, std::vector<std::string> vars, OrderSpec order = {}) {
  return std::make_shared<const RingCtx>(p, std::move(vars), order);
}

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b && !(a && b && a->p() == b->p() && a->vars() == b->vars() &&
                  a->order() == b->order()))
    throw Error(ErrorKind::CtxMismatch, "values belong to different rings");
}

// ---------------------------------------------------------------------------
// Sorted term lists. Shared by Polynomial, ModuleVector and the GB engine.

namespace terms {

using List = std::vector<Term>;

struct Greater {
  const RingCtx* ring;
  ModuleOrder mod;
  bool operator()(const Term& a, const Term& b) const { return ring->compare(a, b, mod) > 0; }
};

/// Sort descending and merge equal (pos, mono) terms, dropping zeros.
inline void canonicalize(const RingCtx& ring, ModuleOrder mod, List& t) {
  std::sort(t.begin(), t.end(), Greater{&ring, mod});
  const auto& F = ring.field();
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    Term acc = std::move(t[i]);
    std::size_t j = i + 1;
    while (j < t.size() && t[j].pos == acc.pos && t[j].mono == acc.mono) {
      acc.coef = F.add(acc.coef, t[j].coef);
      ++j;
    }
    if (acc.coef != 0) t[out++] = std::move(acc);
    i = j;
  }
  t.resize(out);
}

/// a + c * m * b  (m shifts monomials only; positions of b are kept).
inline List add_scaled(const RingCtx& ring, ModuleOrder mod, std::span<const Term> a, Coef c,
                       const Monomial& m, std::span<const Term> b) {
  const auto& F = ring.field();
  List r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term tb;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      tb.coef = F.mul(c, b[j].coef);
      tb.pos = b[j].pos;
      tb.mono = b[j].mono * m;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  if (c == 0) return List(a.begin(), a.end());
  load_b();
  while (i < a.size() || have_b) {
    if (!have_b) {
      r.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      r.push_back(tb);
      ++j;
      load_b();
      continue;
    }
    auto cmp = ring.compare(a[i], tb, mod);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back(tb);
      ++j;
      load_b();
    } else {
      Coef s = F.add(a[i].coef, tb.coef);
      if (s) r.push_back(Term{s, tb.pos, tb.mono});
      ++i;
      ++j;
      load_b();
    }
  }
  return r;
}

inline List add(const RingCtx& ring, ModuleOrder mod, const List& a, const List& b) {
  return add_scaled(ring, mod, a, 1, ring.one(), b);
}

inline List scale(const RingCtx& ring, const List& a, Coef c, const Monomial& m) {
  List r;
  if (c == 0) return r;
  r.reserve(a.size());
  for (const auto& t : a) r.push_back(Term{ring.field().mul(c, t.coef), t.pos, t.mono * m});
  return r;
}

/// Product of a polynomial (pos 0 terms) with a term list.
inline List multiply(const RingCtx& ring, ModuleOrder mod, const List& f, const List& g) {
  List r;
  if (f.empty() || g.empty()) return r;
  r.reserve(f.size() * g.size());
  const auto& F = ring.field();
  for (const auto& a : f)
    for (const auto& b : g) r.push_back(Term{F.mul(a.coef, b.coef), b.pos, a.mono * b.mono});
  canonicalize(ring, mod, r);
  return r;
}

/// Entry-wise q-th power; coefficients are fixed by Frobenius on F_p.
inline List bracket(const List& a, std::uint64_t q) {
  List r;
  r.reserve(a.size());
  for (const auto& t : a) r.push_back(Term{t.coef, t.pos, t.mono.scaled(q)});
  return r;
}

}  // namespace terms

// ---------------------------------------------------------------------------
// Polynomial

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  /// Arbitrary term list; canonicalized here.
  Polynomial(Ring ring, terms::List t) : ring_(std::move(ring)), terms_(std::move(t)) {
    for (auto& x : terms_) x.pos = 0;
    terms::canonicalize(*ring_, ModuleOrder::PositionOverTerm, terms_);
  }

  static Polynomial constant(Ring ring, std::int64_t c) {
    Coef v = ring->field().reduce(c);
    terms::List t;
    if (v) t.push_back(Term{v, 0, ring->one()});
    return Polynomial(ring, std::move(t), Canonical{});
  }
  static Polynomial variable(Ring ring, std::size_t i, std::uint32_t e = 1) {
    terms::List t{Term{1, 0, ring->var_monomial(i, e)}};
    return Polynomial(ring, std::move(t), Canonical{});
  }
  static Polynomial monomial(Ring ring, Coef c, Monomial m) {
    terms::List t;
    if (c % ring->p()) t.push_back(Term{c % ring->p(), 0, std::move(m)});
    return Polynomial(ring, std::move(t), Canonical{});
  }

  struct Canonical {};
  /// Trusted constructor: t is already canonical.
  Polynomial(Ring ring, terms::List t, Canonical) : ring_(std::move(ring)), terms_(std::move(t)) {}

  const Ring& ring() const { return ring_; }
  const terms::List& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return {ring_, terms::add(*ring_, ModuleOrder::PositionOverTerm, terms_, o.terms_), Canonical{}};
  }
  Polynomial operator-() const {
    terms::List t = terms_;
    for (auto& x : t) x.coef = ring_->field().neg(x.coef);
    return {ring_, std::move(t), Canonical{}};
  }
  Polynomial operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return {ring_,
            terms::add_scaled(*ring_, ModuleOrder::PositionOverTerm, terms_, ring_->p() - 1,
                              ring_->one(), o.terms_),
            Canonical{}};
  }
  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    return {ring_, terms::multiply(*ring_, ModuleOrder::PositionOverTerm, terms_, o.terms_),
            Canonical{}};
  }
  Polynomial scaled(Coef c) const {
    return {ring_, terms::scale(*ring_, terms_, c % ring_->p(), ring_->one()), Canonical{}};
  }
  Polynomial pow(std::uint64_t k) const {
    Polynomial acc = constant(ring_, 1), base = *this;
    while (k) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }
  /// f^{[q]} for q a power of p.
  Polynomial bracket(std::uint64_t q) const { return {ring_, terms::bracket(terms_, q), Canonical{}}; }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  Ring ring_;
  terms::List terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                             const RingCtx& ring) {
  if (a.nvars() != ring.nvars() || b.nvars() != ring.nvars())
    throw Error(ErrorKind::CtxMismatch, "monomial arity differs from ring");
  return ring.compare(a, b);
}

// ---------------------------------------------------------------------------
// Text format

inline std::string to_string(const RingCtx& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.var(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coef);
    } else {
      if (t.coef != 1) s += std::to_string(t.coef) + "*";
      s += to_string(*f.ring(), t.mono);
    }
  }
  return s;
}

/// Parses `[int*] var[^int] (*var[^int])*` terms joined by + and -.
/// Integers are reduced mod p; whitespace is ignored.
inline Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  std::string s;
  std::vector<std::size_t> col;  // original column of each kept character
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
      col.push_back(i + 1);
    }
  std::size_t k = 0;
  auto fail = [&](const std::string& msg) -> Error {
    std::size_t c = k < col.size() ? col[k] : text.size() + 1;
    return Error(ErrorKind::ParseError,
                 msg + " at column " + std::to_string(c) + " in '" + std::string(text) + "'");
  };
  auto read_int = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[k] - '0');
      if (v > (1ull << 40)) throw fail("integer too large");
      ++k;
    }
    if (k == start) throw fail("expected integer");
    return v;
  };
  const auto& F = ring->field();
  if (s.empty()) throw fail("empty polynomial");
  terms::List out;
  bool first = true;
  while (k < s.size()) {
    bool negative = false;
    if (s[k] == '+' || s[k] == '-') {
      negative = s[k] == '-';
      ++k;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Coef c = 1;
    Monomial m = ring->one();
    bool need_factor = true;
    while (need_factor) {
      if (k >= s.size()) throw fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(s[k]))) {
        c = F.mul(c, F.reduce(static_cast<std::int64_t>(read_int() % ring->p())));
      } else if (std::isalpha(static_cast<unsigned char>(s[k]))) {
        std::size_t start = k;
        while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
        std::string name = s.substr(start, k - start);
        auto idx = ring->var_index(name);
        if (idx < 0) {
          k = start;
          throw fail("unknown variable '" + name + "'");
        }
        std::uint64_t e = 1;
        if (k < s.size() && s[k] == '^') {
          ++k;
          e = read_int();
        }
        if (e > std::numeric_limits<std::uint32_t>::max()) throw fail("exponent too large");
        m = m * ring->var_monomial(static_cast<std::size_t>(idx), static_cast<std::uint32_t>(e));
      } else {
        throw fail(std::string("unexpected character '") + s[k] + "'");
      }
      need_factor = k < s.size() && s[k] == '*';
      if (need_factor) ++k;
    }
    if (negative) c = F.neg(c);
    if (c) out.push_back(Term{c, 0, std::move(m)});
  }
  return Polynomial(ring, std::move(out));
}

}  // namespace fpti

#endif  // FPTI_RING_HPP
