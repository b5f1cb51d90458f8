#include <gtest/gtest.h>

#include "zhodge/errors.hpp"
#include "zhodge/hodge.hpp"
#include "zhodge/random.hpp"

using namespace zhodge;

namespace {

const Prime p2{2u}, p5{5u};

CohomologyProfile enriques_like() {
  return CohomologyProfile::make("E", 2, {{{0, 0}, 1}, {{1, 1}, 10}, {{2, 2}, 1}},
                                 {{2, FinAbGroup::cyclic(p2, 1)}, {3, FinAbGroup::cyclic(p2, 1)}});
}

CohomologyProfile t0() {
  return CohomologyProfile::make("T0", 2, {{{0, 0}, 1}}, {{3, FinAbGroup::cyclic(p2, 1)}});
}

RingElement sr_tx(const Prime& p, unsigned j, unsigned i) {
  return RingElement::monomial({Idempotent::sr(p, j), MainMonomial::tx(i)});
}

}  // namespace

TEST(Profile, ValidationRejectsOutOfRangeData) {
  EXPECT_THROW(CohomologyProfile::make("X", 1, {{{2, 0}, 1}}), InputError);
  EXPECT_THROW(CohomologyProfile::make("X", 1, {}, {{3, FinAbGroup::cyclic(p2, 1)}}), InputError);
  EXPECT_THROW(CohomologyProfile::make("X", 2, {}, {{1, FinAbGroup::cyclic(p2, 1)}}), InputError);
  EXPECT_THROW(CohomologyProfile::make("X", 2, {}, {{2, FinAbGroup::free(1)}}), InputError);
  EXPECT_NO_THROW(CohomologyProfile::make("X", 1, {{{0, 0}, 0}}));
}

TEST(Profile, LintsWarnButDoNotReject) {
  EXPECT_TRUE(realizability_lints(enriques_like()).empty());
  EXPECT_FALSE(realizability_lints(t0()).empty());
  EXPECT_TRUE(realizability_lints(projective_space_profile(3)).empty());
}

TEST(Profile, CohomologyAssembly) {
  const auto e = enriques_like();
  EXPECT_EQ(e.betti(2), 10u);
  EXPECT_EQ(e.cohomology(2).str(), "Z^10 + Z/2");
  EXPECT_EQ(e.cohomology(1).str(), "0");
}

TEST(Hodge, AInvariants) {
  const auto e = enriques_like();
  EXPECT_EQ(a_pij(e, p2, 2, 0), 1u);
  EXPECT_EQ(a_pij(e, p2, 2, 1), 0u);
  EXPECT_EQ(a_pij(e, p5, 2, 0), 0u);
  const auto y = CohomologyProfile::make("Y", 2, {}, {{3, FinAbGroup(0, {{p2, {1, 2}}})}});
  EXPECT_EQ(a_pij(y, p2, 3, 0), 2u);
  EXPECT_EQ(a_pij(y, p2, 3, 1), 1u);
}

TEST(Hodge, TorsionPoincare) {
  EXPECT_TRUE(torsion_poincare(projective_space_profile(4)).is_zero());
  EXPECT_EQ(torsion_poincare(t0()), -sr_tx(p2, 0, 3));
  EXPECT_EQ(torsion_poincare(enriques_like()), sr_tx(p2, 0, 2) - sr_tx(p2, 0, 3));
}

TEST(Hodge, IntegralHodge) {
  EXPECT_EQ(integral_hodge(point_profile()), RingElement::one());
  EXPECT_EQ(integral_hodge(projective_space_profile(1)).str(), "1 + u*v");
  EXPECT_EQ(integral_hodge(enriques_like()).str(),
            "1 + 10*u*v + u^2*v^2 + s_2*r_0*t^2*x - s_2*r_0*t^3*x");
}

TEST(Hodge, RPlusMembership) {
  EXPECT_TRUE(is_in_r_plus(integral_hodge(enriques_like())));
  EXPECT_FALSE(is_in_r_plus(RingElement::monomial({{}, MainMonomial::xpow(2)})));
  EXPECT_FALSE(is_in_r_plus(sr_tx(p2, 1, 2) - sr_tx(p2, 0, 2) + sr_tx(p2, 1, 2)));
  EXPECT_FALSE(is_in_r_plus(-RingElement::one()));
  EXPECT_FALSE(is_in_r_plus(RingElement::uv_power(1) * RingElement::t()));
  EXPECT_FALSE(is_in_r_plus(RingElement::u()));
  EXPECT_TRUE(is_in_r_plus(-1 * RingElement::u()));
}

TEST(Hodge, Reconstruction) {
  const auto h = integral_hodge(enriques_like());
  EXPECT_EQ(phi(h, 2).str(), "Z^10 + Z/2");
  EXPECT_EQ(phi(h, 3).str(), "Z/2");
  EXPECT_EQ(phi(RingElement::one(), 0).str(), "Z");
  EXPECT_THROW(phi(RingElement::monomial({{}, MainMonomial::xpow(2)}), 0), DomainError);
}

TEST(HodgeProperty, RoundTrip) {
  Rng rng(31);
  ProfileParams params;
  for (int n = 0; n < 500; ++n) {
    const auto x = random_profile(rng, params, "X");
    const auto h = integral_hodge(x);
    ASSERT_TRUE(is_in_r_plus(h));
    ASSERT_TRUE(is_in_subring_S(torsion_poincare(x)));
    for (unsigned i = 0; i <= 2 * x.dim + 1; ++i) ASSERT_EQ(phi(h, i), x.cohomology(i)) << describe(x);
    auto renamed = x;
    renamed.name = "other";
    EXPECT_EQ(integral_hodge(renamed), h);
  }
}
