#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/properties.hpp"

using namespace fpti;
using fpti::testing::ideal;
using fpti::testing::P;

namespace {

Ideal two_planes() {
  auto R = make_ring(2, {"x", "y", "u", "v"});
  return ideal(R, {"x*u", "x*v", "y*u", "y*v"});
}

bool equal(const Ideal& a, const Ideal& b) { return module_equal(a, b); }

}  // namespace

TEST(TestElement, Examples) {
  auto R = make_ring(2, {"x", "y"});
  auto c1 = jacobian_test_element(ideal(R, {"x"}));
  EXPECT_EQ(c1.c, P(R, "1"));
  EXPECT_EQ(c1.provenance, TestElementCertificate::Provenance::JacobianMinor);
  auto c2 = jacobian_test_element(ideal(R, {"y^2 + x^3"}));
  EXPECT_EQ(c2.c, P(R, "x^2"));
  EXPECT_TRUE(c2.nzd_checked);
  auto c3 = jacobian_test_element(ideal(R, {"x*y"}));
  EXPECT_EQ(c3.provenance, TestElementCertificate::Provenance::RandomCombination);
  EXPECT_EQ(c3.seed, kDefaultSeed);
  EXPECT_EQ(c3.c, P(R, "x + y"));
  EXPECT_TRUE(equal(colon(ideal(R, {"x*y"}), c3.c), ideal(R, {"x*y"})));
}

TEST(TestElement, Failures) {
  auto R = make_ring(2, {"x", "y"});
  try {
    jacobian_test_element(ideal(R, {"x^2"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoTestElement);
  }
  // a supplied c must also be a nonzerodivisor
  EXPECT_THROW(global_pti_cm(ideal(R, {"x*y"}), P(R, "x")), Error);
  auto ok = global_pti_cm(ideal(R, {"x^2"}), P(R, "y"));
  EXPECT_EQ(ok.c.provenance, TestElementCertificate::Provenance::UserSupplied);
  EXPECT_TRUE(ok.c.nzd_checked);
}

TEST(Jacobian, DeterminantAndMinors) {
  auto R = make_ring(5, {"x", "y", "z"});
  PolyMatrix M(R, 2, 2);
  M(0, 0) = P(R, "x");
  M(0, 1) = P(R, "y");
  M(1, 0) = P(R, "z");
  M(1, 1) = P(R, "x");
  EXPECT_EQ(determinant(M), P(R, "x^2 - y*z"));
  EXPECT_EQ(partial_derivative(P(R, "x^3*y + 2*y"), 0), P(R, "3*x^2*y"));
  auto minors = jacobian_minors(ideal(R, {"x*y", "z"}), 2);
  // rows [y, x, 0] and [0, 0, 1]; the zero minor is dropped
  EXPECT_EQ(minors, (std::vector<Polynomial>{P(R, "y"), P(R, "x")}));
}

TEST(GlobalPti, Examples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(global_pti_cm(ideal(R, {"x"})).Z.is_full());
  EXPECT_TRUE(global_pti_cm(Ideal::zero(R, 1)).Z.is_full());
  auto cusp = global_pti_cm(ideal(R, {"y^2 + x^3"}));
  EXPECT_TRUE(equal(cusp.Z, ideal(R, {"x", "y"})));
  EXPECT_EQ(cusp.h, 1);
  EXPECT_TRUE(equal(global_pti_cm(ideal(R, {"x*y"})).Z, ideal(R, {"x", "y"})));
  // a user-supplied test element gives the same ideal
  EXPECT_TRUE(equal(global_pti_cm(ideal(R, {"y^2 + x^3"}), P(R, "x^4")).Z, ideal(R, {"x", "y"})));
}

TEST(ColonKiller, Examples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(colon_killer_ideal(ideal(R, {"y^2 + x^3"})).is_full());
  EXPECT_TRUE(colon_killer_ideal(ideal(R, {"x", "y"})).is_full());
  auto J = colon_killer_ideal(two_planes());
  EXPECT_FALSE(J.is_full());
  EXPECT_EQ(krull_dim(J), 0);
}

TEST(Sandwich, Examples) {
  auto R = make_ring(2, {"x", "y"});
  auto cusp = pti_sandwich(ideal(R, {"y^2 + x^3"}));
  EXPECT_TRUE(equal(cusp.lower, ideal(R, {"x", "y"})));
  EXPECT_TRUE(equal(cusp.upper, ideal(R, {"x", "y"})));
  auto line = pti_sandwich(ideal(R, {"x"}));
  EXPECT_TRUE(line.lower.is_full());
  EXPECT_TRUE(line.upper.is_full());
  auto planes = pti_sandwich(two_planes());
  EXPECT_TRUE(contains(planes.upper, planes.lower));
  EXPECT_FALSE(contains(planes.lower, planes.upper));
  EXPECT_EQ(krull_dim(planes.lower), 0);
}

TEST(Hsl, Examples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_EQ(hsl_chain(ideal(R, {"x"}), 1, 5).eta, 0);
  EXPECT_EQ(hsl_chain(ideal(R, {"x*y"}), 1, 5).eta, 0);
  auto cusp = hsl_chain(ideal(R, {"y^2 + x^3"}), 1, 5);
  EXPECT_EQ(cusp.eta, 1);
  ASSERT_EQ(cusp.loci.size(), 1u);
  EXPECT_TRUE(equal(cusp.loci[0], ideal(R, {"x", "y"})));
  ASSERT_GE(cusp.chain.size(), 3u);
  EXPECT_TRUE(cusp.chain[0].is_full());
  EXPECT_TRUE(equal(cusp.chain[1], ideal(R, {"x", "y"})));
  EXPECT_TRUE(equal(cusp.chain[2], ideal(R, {"x", "y"})));
  EXPECT_EQ(hsl_global_bound(ideal(R, {"x"}), 5), 0);
  EXPECT_EQ(hsl_global_bound(ideal(R, {"x*y"}), 5), 0);
  EXPECT_EQ(hsl_global_bound(ideal(R, {"y^2 + x^3"}), 5), 1);
}

TEST(Hsl, CapReportsPartialChain) {
  auto R = make_ring(2, {"x", "y"});
  try {
    hsl_chain(ideal(R, {"y^2 + x^3"}), 1, 1);
    FAIL();
  } catch (const HslCapExceeded& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StabilizationCapExceeded);
    EXPECT_FALSE(e.partial().chain.empty());
  }
  EXPECT_THROW(hsl_chain(ideal(R, {"x"}), 3, 4), Error);
}

TEST(FInjective, Examples) {
  auto R = make_ring(2, {"x", "y"});
  EXPECT_TRUE(f_injective_locus(ideal(R, {"x*y"})).is_full());
  EXPECT_TRUE(f_injective_locus(ideal(R, {"x"})).is_full());
  EXPECT_TRUE(equal(f_injective_locus(ideal(R, {"y^2 + x^3"})), ideal(R, {"x", "y"})));
}

TEST(FrobeniusPower, ProductMatchesDirectComputation) {
  auto R = make_ring(3, {"x", "y"});
  auto I = ideal(R, {"y^2 - x^3"});
  auto d1 = induced_frobenius_matrix(I, 1, 1), d2 = induced_frobenius_matrix(I, 1, 2);
  auto diff = d2.U - frobenius_power_product(d1.U, 2);
  EXPECT_TRUE(contains(Submodule::from_matrix(bracket_power(d2.A, 2)), Submodule::from_matrix(diff)));
}

TEST(FsingProperties, HslChains) {
  auto r = fpti::testing::props::hsl(0x451, 30);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
