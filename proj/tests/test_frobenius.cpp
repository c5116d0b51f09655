#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/properties.hpp"

using namespace fpti;
using fpti::testing::ideal;
using fpti::testing::P;

TEST(BracketExponent, Bounds) {
  EXPECT_EQ(BracketExponent(2, 30).q, std::uint64_t(1) << 30);
  EXPECT_EQ(BracketExponent(5, 0).q, 1u);
  try {
    BracketExponent(2, 31);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentOverflow);
  }
  EXPECT_THROW(BracketExponent(65521, 2), Error);
}

TEST(FeRoot, Examples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(module_equal(fe_root(ideal(R, {"x"}), 1), Ideal::unit_ideal(R)));
  EXPECT_TRUE(module_equal(fe_root(ideal(R, {"x^2"}), 1), ideal(R, {"x"})));
  EXPECT_TRUE(module_equal(fe_root(ideal(R, {"x*y"}), 1), Ideal::unit_ideal(R)));
  // cusp: y^2 + x^3 = (y)^2 * 1 + (x)^2 * x
  EXPECT_TRUE(module_equal(fe_root(ideal(R, {"y^2 + x^3"}), 1), ideal(R, {"x", "y"})));
  // f^3 over the p^2 basis has roots y, x, x^2
  auto f3 = P(R, "y^2 + x^3").pow(3);
  EXPECT_TRUE(module_equal(fe_root(Ideal::ideal(R, {f3}), 2), ideal(R, {"x", "y"})));
  EXPECT_TRUE(fe_root(Ideal::zero(R, 1), 1).is_zero());
}

TEST(FeRoot, ModuleExample) {
  auto R = make_ring(3, {"x", "y"});
  auto v = ModuleVector::from_components(R, {P(R, "x^3 + y"), P(R, "x^4")});
  auto root = fe_root(Submodule(R, 2, {v}), 1);
  // residues: 1 -> (x, 0), y -> (1, 0), x -> (0, x)
  Submodule expected(R, 2,
                     {ModuleVector::from_components(R, {P(R, "1"), P(R, "0")}),
                      ModuleVector::from_components(R, {P(R, "0"), P(R, "x")})});
  EXPECT_TRUE(module_equal(root, expected));
}

TEST(StarClosure, Examples) {
  auto R = make_ring(2, {"x", "y"});
  auto one = PolyMatrix::identity(R, 1);
  EXPECT_TRUE(star_closure(Ideal::zero(R, 1), one).is_zero());
  auto x2 = star_closure_traced(ideal(R, {"x^2"}), one);
  EXPECT_TRUE(module_equal(x2.module, Ideal::unit_ideal(R)));
  PolyMatrix U = PolyMatrix::row(R, {P(R, "y^2 + x^3")});
  auto cusp = star_closure_traced(ideal(R, {"y^2 + x^3", "x^2"}), U);
  EXPECT_TRUE(module_equal(cusp.module, ideal(R, {"x", "y"})));
  EXPECT_EQ(cusp.iterations, 3);
}

TEST(StarClosure, IterationCap) {
  auto R = make_ring(2, {"x", "y"});
  Limits lim;
  lim.star_iterations = 1;
  PolyMatrix U = PolyMatrix::row(R, {P(R, "y^2 + x^3")});
  try {
    star_closure(ideal(R, {"y^2 + x^3", "x^2"}), U, 1, lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IterationCap);
  }
}

TEST(StarClosure, ShapeChecks) {
  auto R = make_ring(2, {"x"});
  EXPECT_THROW(star_closure(Submodule::full(R, 2), PolyMatrix::identity(R, 1)), Error);
  EXPECT_THROW(star_closure(Submodule::full(R, 1), PolyMatrix::identity(R, 1), 0), Error);
}

namespace props = fpti::testing::props;

TEST(FrobeniusProperties, Adjunction) {
  auto r = props::adjunction(0xad1, 80);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(FrobeniusProperties, Roundtrip) {
  auto r = props::roundtrip(0x7e1, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(FrobeniusProperties, Additivity) {
  auto r = props::additivity(0xadd, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(FrobeniusProperties, Composition) {
  auto r = props::composition(0xc0, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(FrobeniusProperties, StarClosure) {
  auto r = props::star(0x57a, 40);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
