#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/properties.hpp"

using namespace fpti;
using fpti::testing::ideal;
using fpti::testing::P;

namespace {

std::vector<std::string> printed(const Submodule& W) {
  std::vector<std::string> out;
  for (const auto& v : W.gb().elements()) out.push_back(to_string(v));
  return out;
}

}  // namespace

TEST(Buchberger, SmallIdeals) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_EQ(printed(ideal(R, {"x^2", "x*y + y^2"})),
            (std::vector<std::string>{"x*y + y^2", "x^2", "y^3"}));
  EXPECT_TRUE(ideal(R, {"x", "x + 1"}).gb().is_unit_ideal());
  EXPECT_TRUE(Ideal::zero(R, 1).gb().empty());
}

TEST(Buchberger, LexEliminates) {
  auto R = make_ring(3, {"x", "y"}, OrderSpec{MonoOrder::Lex, ModuleOrder::PositionOverTerm});
  auto G = ideal(R, {"x - y^2", "x*y - 1"}).gb().elements();
  ASSERT_FALSE(G.empty());
  // smallest element involves only y
  EXPECT_EQ(G.front().lead().mono[0], 0u);
  EXPECT_EQ(to_string(G.front()), "y^3 + 2");
}

TEST(Buchberger, Determinism) {
  auto R = make_ring(5, {"x", "y", "z"});
  auto a = ideal(R, {"x^2*y + z", "y^3 - x*z", "x*y*z + 1"});
  auto b = ideal(R, {"y^3 - x*z", "x*y*z + 1", "x^2*y + z", "x^2*y + z"});
  EXPECT_EQ(printed(a), printed(b));
  EXPECT_EQ(a.gb(), b.gb());
}

TEST(Buchberger, ResourceCap) {
  auto R = make_ring(2, {"x", "y", "z"});
  Limits lim;
  lim.max_pairs = 1;
  try {
    buchberger(R, 1, ideal(R, {"x^2 + y", "y^2 + z", "z^2 + x", "x*y*z"}).gens(), lim);
    FAIL() << "expected ResourceCap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceCap);
  }
}

TEST(Membership, SpecExamples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(membership(P(R, "x"), ideal(R, {"x^2", "x"})));
  EXPECT_FALSE(membership(P(R, "y"), ideal(R, {"x"})));
  EXPECT_TRUE(membership(P(R, "x + y"), ideal(R, {"x^2", "y^2", "x+y"})));
  EXPECT_TRUE(membership(P(R, "x^2 + y^2"), ideal(R, {"x + y"})));
}

TEST(Lifter, LiftAndSyzygies) {
  auto R = make_ring(3, {"x", "y"});
  PolyMatrix M = PolyMatrix::row(R, {P(R, "x"), P(R, "y")});
  Lifter L(M);
  auto y = L.lift(ModuleVector::scalar(P(R, "x*y + y^2")));
  ASSERT_TRUE(y);
  EXPECT_EQ(M * *y, ModuleVector::scalar(P(R, "x*y + y^2")));
  EXPECT_FALSE(L.lift(ModuleVector::scalar(P(R, "1"))));
  auto S = syzygy_matrix(M);
  ASSERT_EQ(S.cols(), 1u);
  EXPECT_TRUE((M * S).is_zero());
}

TEST(ModuleOps, IntersectColonQuotient) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(module_equal(intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  EXPECT_TRUE(module_equal(intersect(ideal(R, {"x^2", "y"}), ideal(R, {"x"})), ideal(R, {"x^2", "x*y"})));
  EXPECT_TRUE(module_equal(colon(ideal(R, {"x*y"}), P(R, "x")), ideal(R, {"y"})));
  EXPECT_TRUE(module_equal(colon(ideal(R, {"x*y"}), P(R, "x + y")), ideal(R, {"x*y"})));
  // Ann(R^2 / <(x,0),(0,y)>) = (xy)
  auto A = PolyMatrix::from_columns(R, 2, {ModuleVector::from_components(R, {P(R, "x"), P(R, "0")}),
                                           ModuleVector::from_components(R, {P(R, "0"), P(R, "y")})});
  EXPECT_TRUE(module_equal(ann_cokernel(A), ideal(R, {"x*y"})));
  EXPECT_TRUE(module_equal(ann_cokernel(PolyMatrix::identity(R, 1)), Ideal::unit_ideal(R)));
  EXPECT_TRUE(module_equal(quotient(ideal(R, {"x^2", "y"}), ideal(R, {"x", "y"})), ideal(R, {"x", "y"})));
}

TEST(ModuleOps, ProductsAndPowers) {
  auto R = make_ring(3, {"x", "y"});
  auto m = ideal(R, {"x", "y"});
  EXPECT_TRUE(module_equal(power(m, 2), ideal(R, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(module_equal(power(m, 0), Ideal::unit_ideal(R)));
  EXPECT_TRUE(module_equal(product(m, ideal(R, {"x"})), ideal(R, {"x^2", "x*y"})));
}

TEST(ModuleOps, KrullDimension) {
  auto R = make_ring(2, {"x", "y", "z"});
  EXPECT_EQ(krull_dim(Ideal::zero(R, 1)), 3);
  EXPECT_EQ(krull_dim(ideal(R, {"x*y"})), 2);
  EXPECT_EQ(krull_dim(ideal(R, {"x", "y*z"})), 1);
  EXPECT_EQ(krull_dim(ideal(R, {"x", "y", "z^5"})), 0);
  EXPECT_EQ(krull_dim(Ideal::unit_ideal(R)), -1);
}

TEST(ModuleOps, RadicalMembership) {
  auto R = make_ring(7, {"x", "y"});
  auto I = ideal(R, {"x^3", "y^2"});
  EXPECT_TRUE(radical_membership(P(R, "x + y"), I));
  EXPECT_FALSE(radical_membership(P(R, "x + 1"), I));
  EXPECT_TRUE(radical_membership(P(R, "x*y"), ideal(R, {"x^2*y^2"})));
}

TEST(ModuleOps, RankMismatchIsReported) {
  auto R = make_ring(2, {"x"});
  try {
    (void)sum(Submodule::full(R, 2), Submodule::full(R, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankMismatch);
  }
}

TEST(GroebnerProperties, BuchbergerCriterionAndNormalForms) {
  auto r = fpti::testing::props::buchberger_criterion(0x6b01, 80);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(GroebnerProperties, SyzygyCompleteness) {
  auto r = fpti::testing::props::syzygies(0x5e2, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(GroebnerProperties, IntersectMatchesBruteForce) {
  auto r = fpti::testing::props::oracle_intersect(0x1e7, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_LT(r.skipped, 10);
}
