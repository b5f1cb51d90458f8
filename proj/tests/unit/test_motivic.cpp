#include <gtest/gtest.h>

#include "zhodge/errors.hpp"
#include "zhodge/motivic.hpp"
#include "zhodge/oracles.hpp"
#include "zhodge/random.hpp"

using namespace zhodge;

namespace {

const Prime p2{2u};

CohomologyProfile t0() {
  return CohomologyProfile::make("T0", 2, {{{0, 0}, 1}}, {{3, FinAbGroup::cyclic(p2, 1)}});
}

CohomologyProfile pn(unsigned n) { return projective_space_profile(n); }

VirtualClass cls(unsigned n) { return VirtualClass::of(pn(n)); }

}  // namespace

TEST(Kunneth, TorsionFreeProduct) {
  const auto q = kunneth_product_profile(pn(1), pn(1));
  EXPECT_EQ(q.dim, 2u);
  EXPECT_EQ(q.hodge, (CohomologyProfile::HodgeNumbers{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  EXPECT_TRUE(q.torsion.empty());
}

TEST(Kunneth, TorsionProductOfT0) {
  const auto q = kunneth_product_profile(t0(), t0());
  EXPECT_EQ(q.torsion_at(3), FinAbGroup::cyclic(p2, 1, 2));
  EXPECT_EQ(q.torsion_at(5), FinAbGroup::cyclic(p2, 1));
  EXPECT_EQ(q.torsion_at(6), FinAbGroup::cyclic(p2, 1));
  EXPECT_EQ(q.torsion.size(), 3u);
  const std::string expected = "1 - 2*s_2*r_0*t^3*x - s_2*r_0*t^5*x + s_2*r_0*t^6*x";
  EXPECT_EQ(product_hz_direct(t0(), t0()).str(), expected);
  EXPECT_EQ((integral_hodge(t0()) * integral_hodge(t0())).str(), expected);
  EXPECT_EQ(integral_hodge(q).str(), expected);
}

TEST(Kunneth, PointIsTheUnit) {
  const auto x = t0();
  EXPECT_TRUE(kunneth_product_profile(x, point_profile()).same_cohomology(x));
  EXPECT_EQ(product_hz_direct(x, point_profile()), integral_hodge(x));
}

TEST(Blowup, ProjectivePlaneAtAPoint) {
  const auto [bl, e] = blowup_profiles(pn(2), point_profile(), 2);
  EXPECT_EQ(bl.hodge, (CohomologyProfile::HodgeNumbers{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  EXPECT_TRUE(e.same_cohomology(pn(1)));
  const auto lhs = integral_hodge(pn(2)) - integral_hodge(point_profile());
  EXPECT_EQ(lhs.str(), "u*v + u^2*v^2");
  EXPECT_EQ(integral_hodge(bl) - integral_hodge(e), lhs);
}

TEST(Blowup, TorsionTransport) {
  const auto z = CohomologyProfile::make("Z", 2, {{{0, 0}, 1}}, {{3, FinAbGroup::cyclic(p2, 1)}});
  const auto x = CohomologyProfile::make("X", 4, {{{0, 0}, 1}});
  const auto [bl, e] = blowup_profiles(x, z, 2);
  EXPECT_EQ(bl.torsion_at(5), FinAbGroup::cyclic(p2, 1));
  EXPECT_EQ(bl.torsion_at(3), FinAbGroup());
  EXPECT_EQ(e.torsion_at(3), FinAbGroup::cyclic(p2, 1));
  EXPECT_EQ(e.torsion_at(5), FinAbGroup::cyclic(p2, 1));
}

TEST(Blowup, RejectsBadInput) {
  EXPECT_THROW(blowup_profiles(pn(2), point_profile(), 1), InputError);
  EXPECT_THROW(blowup_profiles(pn(3), point_profile(), 2), InputError);
}

TEST(VirtualClassTest, AlgebraNormalizes) {
  const auto a = cls(1) * cls(2) + cls(2) * cls(1);
  EXPECT_EQ(a, 2 * (cls(2) * cls(1)));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(VirtualClass::lefschetz(2) * VirtualClass::lefschetz(-2), VirtualClass::point());
  EXPECT_EQ(power(cls(1), 3), cls(1) * cls(1) * cls(1));
}

TEST(HVir, Basics) {
  EXPECT_EQ(h_vir(VirtualClass::lefschetz(1)).str(), "u*v");
  EXPECT_EQ(h_vir(cls(1) * cls(1) - cls(1)).str(), "u*v + u^2*v^2");
  const auto inv = h_vir(VirtualClass::lefschetz(-1));
  EXPECT_EQ(inv.denom_exp, 1u);
  EXPECT_EQ(inv.numerator, RingElement::one());
  EXPECT_FALSE(localized_equals(inv, {RingElement::one(), 0}));
  EXPECT_FALSE(localized_equals(inv, {RingElement::uv_power(1), 0}));
  EXPECT_TRUE(h_vir(VirtualClass()).numerator.is_zero());
}

TEST(HVir, LefschetzPowers) {
  for (int k = -4; k <= 4; ++k) {
    EXPECT_TRUE(localized_equals(h_vir(VirtualClass::lefschetz(k)), uv_power(k))) << k;
  }
}

TEST(Cells, ProjectiveSpacesAndGrassmannian) {
  EXPECT_TRUE(h_vir(cell_decomposition_class({})).numerator.is_zero());
  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<unsigned> cells(n + 1);
    for (unsigned k = 0; k <= n; ++k) cells[k] = k;
    EXPECT_EQ(h_vir(cell_decomposition_class(cells)).numerator, integral_hodge(pn(n)));
  }
  const auto gr = h_vir(cell_decomposition_class({0, 1, 2, 2, 3, 4}));
  EXPECT_EQ(gr.str(), "1 + u*v + 2*u^2*v^2 + u^3*v^3 + u^4*v^4");
  const auto gauss = oracle::gaussian_binomial(4, 2);
  EXPECT_EQ(gauss, (std::vector<std::uint64_t>{1, 1, 2, 1, 1}));
}

TEST(CutAndPaste, Stratifications) {
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_TRUE(cut_and_paste_check(cls(n), VirtualClass::lefschetz(n), cls(n - 1)));
  }
  EXPECT_TRUE(cut_and_paste_check(VirtualClass::of(t0()), VirtualClass::of(t0()), VirtualClass()));
  EXPECT_FALSE(cut_and_paste_check(cls(2), VirtualClass::lefschetz(2), cls(1) + VirtualClass::point()));
}

TEST(Filtration, DegreeBound) {
  EXPECT_TRUE(filtration_degree_check(pn(2), 0));
  EXPECT_EQ(degree(h_vir(cls(2) * VirtualClass::lefschetz(-3))), -2);
  EXPECT_TRUE(filtration_degree_check(pn(2), 3));
  EXPECT_TRUE(filtration_degree_check(point_profile(), 0));
}

TEST(MotivicProperty, ThreeWayMultiplicativity) {
  Rng rng(51);
  ProfileParams params;
  for (int n = 0; n < 100; ++n) {
    const auto x = random_profile(rng, params, "X");
    const auto y = random_profile(rng, params, "Y");
    const auto lhs = integral_hodge(x) * integral_hodge(y);
    ASSERT_EQ(lhs, product_hz_direct(x, y));
    ASSERT_EQ(lhs, integral_hodge(kunneth_product_profile(x, y)));
  }
}

TEST(MotivicProperty, KunnethIsCommutativeAndAssociative) {
  Rng rng(52);
  ProfileParams params;
  params.max_degree = 4;
  for (int n = 0; n < 50; ++n) {
    const auto x = random_profile(rng, params, "X");
    const auto y = random_profile(rng, params, "Y");
    const auto z = random_profile(rng, params, "Z");
    EXPECT_TRUE(kunneth_product_profile(x, y).same_cohomology(kunneth_product_profile(y, x)));
    EXPECT_TRUE(kunneth_product_profile(kunneth_product_profile(x, y), z)
                    .same_cohomology(kunneth_product_profile(x, kunneth_product_profile(y, z))));
  }
}

TEST(MotivicProperty, BlowupIdentity) {
  Rng rng(53);
  ProfileParams params;
  for (int n = 0; n < 100; ++n) {
    const unsigned c = 2 + rng.below(4);
    const auto z = random_profile_of_dim(rng, params, rng.below(3), "Z");
    const auto x = random_profile_of_dim(rng, params, z.dim + c, "X");
    const auto [bl, e] = blowup_profiles(x, z, c);
    ASSERT_EQ(integral_hodge(x) - integral_hodge(z), integral_hodge(bl) - integral_hodge(e));
  }
}
