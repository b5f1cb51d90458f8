#include <gtest/gtest.h>

#include "zhodge/abgroup.hpp"
#include "zhodge/errors.hpp"
#include "zhodge/oracles.hpp"
#include "zhodge/random.hpp"

using namespace zhodge;

namespace {

const Prime p2{2u}, p3{3u}, p5{5u};

FinAbGroup z2() { return FinAbGroup::cyclic(p2, 1); }

}  // namespace

TEST(Prime, RejectsComposites) {
  EXPECT_THROW(Prime(4u), InputError);
  EXPECT_THROW(Prime(1u), InputError);
  EXPECT_THROW(Prime(0u), InputError);
  EXPECT_NO_THROW(Prime(BigInt("170141183460469231731687303715884105727")));
}

TEST(FinAbGroup, CanonicalFormIgnoresSummandOrder) {
  FinAbGroup a(1, {{p2, {1, 3, 2}}});
  FinAbGroup b(1, {{p2, {3, 2, 1}}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.torsion().at(p2), (FinAbGroup::Exponents{3, 2, 1}));
  EXPECT_EQ(FinAbGroup(0, {{p3, {}}}), FinAbGroup());
  EXPECT_THROW(FinAbGroup(0, {{p2, {0}}}), InputError);
}

TEST(FinAbGroup, Rendering) {
  EXPECT_EQ(FinAbGroup().str(), "0");
  EXPECT_EQ(FinAbGroup::free(1).str(), "Z");
  EXPECT_EQ(direct_sum(FinAbGroup::free(10), z2()).str(), "Z^10 + Z/2");
  EXPECT_EQ(FinAbGroup(0, {{p2, {2, 1}}, {p3, {1}}}).str(), "Z/2^2 + Z/2 + Z/3");
  EXPECT_EQ(FinAbGroup::cyclic(p5, 2, 2).str(), "Z/5^2 + Z/5^2");
}

TEST(FinAbGroup, TensorAndTorOfCyclics) {
  const auto z4 = FinAbGroup::cyclic(p2, 2);
  EXPECT_EQ(tensor(z2(), z4), z2());
  EXPECT_EQ(tor(z2(), z4), z2());
  EXPECT_TRUE(tensor(z2(), FinAbGroup::cyclic(p3, 1)).is_trivial());
  EXPECT_EQ(tensor(FinAbGroup::free(2), z4), direct_power(z4, 2));
  EXPECT_TRUE(tor(FinAbGroup::free(3), z4).is_trivial());
  EXPECT_EQ(tensor(FinAbGroup::free(2), FinAbGroup::free(3)), FinAbGroup::free(6));
}

TEST(FinAbGroup, AInvariantsCountExponentsAboveJ) {
  const FinAbGroup g(0, {{p2, {2, 1}}});
  EXPECT_EQ(a_invariant(g, p2, 0), 2u);
  EXPECT_EQ(a_invariant(g, p2, 1), 1u);
  EXPECT_EQ(a_invariant(g, p2, 2), 0u);
  EXPECT_EQ(a_invariant(g, p5, 0), 0u);
  EXPECT_EQ(a_invariant(FinAbGroup::free(7), p2, 0), 0u);
}

TEST(FinAbGroup, FromInvariantsRejectsBadTables) {
  EXPECT_THROW(from_invariants({{{p2, 0}, 1}, {{p2, 1}, 2}}), DomainError);
  EXPECT_THROW(from_invariants({{{p2, 0}, -1}}), DomainError);
  EXPECT_THROW(from_invariants({{{p2, 1}, 1}}), DomainError);
  EXPECT_EQ(from_invariants({{{p2, 0}, 2}, {{p2, 1}, 1}}), FinAbGroup(0, {{p2, {2, 1}}}));
  EXPECT_TRUE(from_invariants({}).is_trivial());
}

TEST(FinAbGroupProperty, InvariantTableRoundTrip) {
  Rng rng(11);
  ProfileParams params;
  for (int n = 0; n < 500; ++n) {
    const auto g = random_torsion_group(rng, params);
    EXPECT_EQ(from_invariants(invariant_table(g)), g) << g.str();
  }
}

TEST(FinAbGroupProperty, TensorMatchesSummandExpansion) {
  Rng rng(12);
  ProfileParams params;
  for (int n = 0; n < 500; ++n) {
    const auto a = direct_sum(FinAbGroup::free(rng.below(3)), random_torsion_group(rng, params));
    const auto b = direct_sum(FinAbGroup::free(rng.below(3)), random_torsion_group(rng, params));
    ASSERT_EQ(tensor(a, b), oracle::tensor(a, b)) << a.str() << " (x) " << b.str();
    EXPECT_EQ(tensor(a, b), tensor(b, a));
    EXPECT_EQ(tor(a, b), tor(b, a));
  }
}

TEST(FinAbGroupProperty, AInvariantIsMultiplicativeUnderTensor) {
  Rng rng(13);
  ProfileParams params;
  for (int n = 0; n < 500; ++n) {
    const auto a = random_torsion_group(rng, params);
    const auto b = random_torsion_group(rng, params);
    const auto ab = oracle::tensor(a, b);
    for (auto pv : params.primes) {
      const Prime p(pv);
      for (unsigned j = 0; j <= params.max_exponent; ++j) {
        EXPECT_EQ(oracle::a_invariant(ab, p, j), oracle::a_invariant(a, p, j) * oracle::a_invariant(b, p, j));
        EXPECT_EQ(a_invariant(a, p, j), oracle::a_invariant(a, p, j));
      }
    }
  }
}
