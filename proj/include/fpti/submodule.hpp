#ifndef FPTI_SUBMODULE_HPP
#define FPTI_SUBMODULE_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "fpti/groebner.hpp"

namespace fpti {

/// A finitely generated submodule of R^rank given by generators, carrying a
/// lazily computed reduced Gröbner basis. The cache is write-once and shared
/// between copies, which always denote the same submodule.
class Submodule {
 public:
  Submodule() = default;
  Submodule(Ring ring, std::size_t rank, std::vector<ModuleVector> gens)
      : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (g.rank() != rank_) throw Error(ErrorKind::RankMismatch, "generator rank differs from ambient");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Submodule from_matrix(const PolyMatrix& M) {
    return Submodule(M.ring(), M.rows(), M.columns());
  }
  static Submodule ideal(Ring ring, const std::vector<Polynomial>& gens) {
    std::vector<ModuleVector> v;
    for (const auto& g : gens) v.push_back(ModuleVector::scalar(g));
    return Submodule(std::move(ring), 1, std::move(v));
  }
  static Submodule zero(Ring ring, std::size_t rank) { return Submodule(std::move(ring), rank, {}); }
  static Submodule full(Ring ring, std::size_t rank) {
    std::vector<ModuleVector> v;
    for (std::size_t i = 0; i < rank; ++i) v.push_back(ModuleVector::unit(ring, rank, i));
    return Submodule(std::move(ring), rank, std::move(v));
  }
  static Submodule unit_ideal(Ring ring) { return full(std::move(ring), 1); }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  PolyMatrix matrix() const { return PolyMatrix::from_columns(ring_, rank_, gens_); }

  std::vector<Polynomial> ideal_generators() const {
    if (rank_ != 1) throw Error(ErrorKind::RankMismatch, "not an ideal");
    std::vector<Polynomial> out;
    for (const auto& g : gens_) out.push_back(g.component(0));
    return out;
  }

  const GroebnerBasis& gb(const Limits& lim = {}) const {
    std::call_once(cache_->flag, [&] { cache_->gb = buchberger(ring_, rank_, gens_, lim); });
    return cache_->gb;
  }

  /// Same submodule, presented by its reduced Gröbner basis (cache carried over).
  Submodule reduced(const Limits& lim = {}) const {
    Submodule r(ring_, rank_, gb(lim).elements());
    std::call_once(r.cache_->flag, [&] { r.cache_->gb = cache_->gb; });
    return r;
  }

  bool is_full(const Limits& lim = {}) const {
    const auto& G = gb(lim);
    std::size_t units = 0;
    for (const auto& e : G.raw())
      if (e.front().mono.is_one()) ++units;
    return units == rank_;
  }

 private:
  struct Cache {
    std::once_flag flag;
    GroebnerBasis gb;
  };

  Ring ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleVector> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using SubmodulePresentation = Submodule;
using Ideal = Submodule;

inline void require_same_ambient(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "ambient ranks differ");
}

inline bool membership(const ModuleVector& v, const Submodule& W, const Limits& lim = {}) {
  if (v.rank() != W.rank()) throw Error(ErrorKind::RankMismatch, "membership: rank mismatch");
  if (v.is_zero()) return true;
  return normal_form(v, W.gb(lim), lim).is_zero();
}

inline bool membership(const Polynomial& f, const Ideal& I, const Limits& lim = {}) {
  return membership(ModuleVector::scalar(f), I, lim);
}

/// W2 ⊆ W1.
inline bool contains(const Submodule& W1, const Submodule& W2, const Limits& lim = {}) {
  require_same_ambient(W1, W2);
  for (const auto& g : W2.gens())
    if (!membership(g, W1, lim)) return false;
  return true;
}

inline bool module_equal(const Submodule& W1, const Submodule& W2, const Limits& lim = {}) {
  return contains(W1, W2, lim) && contains(W2, W1, lim);
}

inline Submodule sum(const Submodule& W1, const Submodule& W2) {
  require_same_ambient(W1, W2);
  auto g = W1.gens();
  g.insert(g.end(), W2.gens().begin(), W2.gens().end());
  return Submodule(W1.ring(), W1.rank(), std::move(g));
}

/// Submodule generated by M * v for v over the generators of W.
inline Submodule image_under(const PolyMatrix& M, const Submodule& W) {
  if (M.cols() != W.rank()) throw Error(ErrorKind::RankMismatch, "matrix does not act on ambient");
  std::vector<ModuleVector> out;
  for (const auto& g : W.gens()) out.push_back(M * g);
  return Submodule(W.ring(), M.rows(), std::move(out));
}

/// W1 ∩ W2 from the syzygies of [gens(W1) | gens(W2)].
inline Submodule intersect(const Submodule& W1, const Submodule& W2, const Limits& lim = {}) {
  require_same_ambient(W1, W2);
  if (W1.is_zero() || W2.is_zero()) return Submodule::zero(W1.ring(), W1.rank());
  PolyMatrix G1 = W1.matrix();
  Lifter L(G1.hstack(W2.matrix()), lim);
  std::vector<ModuleVector> out;
  const std::size_t k1 = G1.cols();
  for (const auto& s : L.syzygies()) {
    terms::List a;
    for (const auto& t : s.terms())
      if (t.pos < k1) a.push_back(t);
    if (a.empty()) continue;
    out.push_back(G1 * ModuleVector(s.ring(), k1, std::move(a)));
  }
  return Submodule(W1.ring(), W1.rank(), std::move(out)).reduced(lim);
}

/// (W : v) = {r ∈ R : r v ∈ W}, via the syzygies of [gens(W) | v].
inline Ideal colon(const Submodule& W, const ModuleVector& v, const Limits& lim = {}) {
  if (v.rank() != W.rank()) throw Error(ErrorKind::RankMismatch, "colon: rank mismatch");
  const auto& ring = W.ring();
  if (membership(v, W, lim)) return Submodule::unit_ideal(ring);
  PolyMatrix M = W.matrix().hstack(PolyMatrix::from_columns(ring, W.rank(), {v}));
  Lifter L(M, lim);
  std::vector<Polynomial> gens;
  const std::size_t last = M.cols() - 1;
  for (const auto& s : L.syzygies()) {
    auto r = s.component(last);
    if (!r.is_zero()) gens.push_back(r);
  }
  return Ideal::ideal(ring, gens).reduced(lim);
}

inline Ideal colon(const Ideal& I, const Polynomial& f, const Limits& lim = {}) {
  return colon(I, ModuleVector::scalar(f), lim);
}

/// (W2 : W1) = {r : r W1 ⊆ W2} = Ann(W1 + W2 / W2).
inline Ideal quotient(const Submodule& W2, const Submodule& W1, const Limits& lim = {}) {
  require_same_ambient(W1, W2);
  Ideal acc = Submodule::unit_ideal(W2.ring());
  bool first = true;
  for (const auto& g : W1.gens()) {
    if (membership(g, W2, lim)) continue;
    Ideal c = colon(W2, g, lim);
    acc = first ? c : intersect(acc, c, lim);
    first = false;
  }
  return acc;
}

/// Ann(R^rows / Image A) = ⋂_i (Image A : e_i).
inline Ideal ann_cokernel(const PolyMatrix& A, const Limits& lim = {}) {
  return quotient(Submodule::from_matrix(A), Submodule::full(A.ring(), A.rows()), lim);
}

inline Ideal product(const Ideal& I, const Ideal& J, const Limits& lim = {}) {
  require_same_ambient(I, J);
  std::vector<Polynomial> gens;
  for (const auto& f : I.ideal_generators())
    for (const auto& g : J.ideal_generators()) gens.push_back(f * g);
  return Ideal::ideal(I.ring(), gens).reduced(lim);
}

inline Ideal power(const Ideal& I, unsigned k, const Limits& lim = {}) {
  Ideal acc = Submodule::unit_ideal(I.ring());
  for (unsigned i = 0; i < k; ++i) acc = product(acc, I, lim);
  return acc;
}

/// dim R/I from the leading-term ideal: the largest set of variables no
/// leading monomial is supported in. dim of the unit ideal is -1.
inline int krull_dim(const Ideal& I, const Limits& lim = {}) {
  if (I.rank() != 1) throw Error(ErrorKind::RankMismatch, "krull_dim expects an ideal");
  const auto& G = I.gb(lim);
  if (G.is_unit_ideal()) return -1;
  const std::size_t n = I.ring()->nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& e : G.raw()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e.front().mono[i]) s |= std::uint64_t(1) << i;
    supports.push_back(s);
  }
  if (n > 24) throw Error(ErrorKind::ResourceCap, "krull_dim: too many variables");
  int best = 0;
  for (std::uint64_t S = 0; S < (std::uint64_t(1) << n); ++S) {
    int sz = __builtin_popcountll(S);
    if (sz <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~S) == 0) { independent = false; break; }
    if (independent) best = sz;
  }
  return best;
}

namespace detail {

/// The ring with one extra variable appended after the existing ones.
inline Ring extend_ring(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring->var_index(name) >= 0) name += "_";
  auto vars = ring->vars();
  vars.push_back(name);
  return make_ring(ring->p(), vars, ring->order());
}

inline Polynomial embed(const Ring& big, const Polynomial& f) {
  terms::List t;
  for (const auto& x : f.terms()) {
    Monomial::Exps e = x.mono.exps();
    e.resize(big->nvars(), 0);
    t.push_back(Term{x.coef, 0, Monomial(std::move(e))});
  }
  return Polynomial(big, std::move(t));
}

}  // namespace detail

/// g ∈ √I via the Rabinowitsch trick: 1 ∈ I + (1 - t g) in R[t].
inline bool radical_membership(const Polynomial& g, const Ideal& I, const Limits& lim = {}) {
  require_same_ring(g.ring(), I.ring());
  if (g.is_zero()) return true;
  Ring big = detail::extend_ring(I.ring(), "t");
  std::vector<Polynomial> gens;
  for (const auto& f : I.ideal_generators()) gens.push_back(detail::embed(big, f));
  Polynomial t = Polynomial::variable(big, big->nvars() - 1);
  gens.push_back(Polynomial::constant(big, 1) - t * detail::embed(big, g));
  return Ideal::ideal(big, gens).gb(lim).is_unit_ideal();
}

}  // namespace fpti

#endif  // FPTI_SUBMODULE_HPP
