#include "helpers.hpp"

#include "tangle/cusp.hpp"
#include "tangle/error.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace tangle;

namespace {

CuspPair pair_of(std::string id, double length, const char *a1, const char *a2,
                 int rank) {
  return CuspPair{std::move(id), length, std::to_string(length),
                  parse_word(a1, rank), parse_word(a2, rank)};
}

// Genus 0 with three punctures: free of rank 2.
BaseSurface one_pair(double length) {
  return BaseSurface(0, 3, {pair_of("p", length, "a", "b", 2)});
}

} // namespace

TEST(BaseSurface, Validation) {
  EXPECT_EQ(one_pair(0).rank(), 2);
  EXPECT_EQ(BaseSurface(1, 1, {}).rank(), 2);
  EXPECT_THROW(BaseSurface(-1, 3, {}), InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 0, {}), InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 1, {}), InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 3, {pair_of("p", 0, "a", "a a", 2)}),
               InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 3, {pair_of("p", -1, "a", "b", 2)}),
               InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 4, {pair_of("p", 0, "a", "b", 2)}),
               InvalidArgument);
  EXPECT_THROW(BaseSurface(0, 3, {pair_of("p", 0, "a", "b", 2),
                                  pair_of("p", 1, "a", "b", 2)}),
               InvalidArgument);
}

TEST(BranchDegrees, Examples) {
  EXPECT_EQ(branch_degrees(Homomorphism::trivial(2, 1),
                           one_pair(0).pairs().front(), 1),
            (BranchDegrees{1, 1}));
  const Homomorphism phi({Permutation::from_cycles("(123)", 6),
                          Permutation::from_cycles("(45)", 6)});
  EXPECT_EQ(branch_degrees(phi, one_pair(0).pairs().front(), 1),
            (BranchDegrees{3, 1}));
  const CuspPair fig{"fig", 0, "0", testing_support::fig2_w1(),
                     testing_support::fig2_w2()};
  EXPECT_EQ(branch_degrees(testing_support::fig2_hom(), fig, 5),
            (BranchDegrees{4, 6}));
}

TEST(BranchDegrees, MatchesOrbitSizes) {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 1 + uniform_below(rng, 10);
    const Homomorphism phi = sample_hom(rng, 2, n);
    CuspPair pair{"x", 0, "0", testing_support::nontrivial_word(rng, 2, 5),
                  testing_support::nontrivial_word(rng, 2, 5)};
    const Point k = 1 + static_cast<Point>(uniform_below(rng, n));
    const auto d = branch_degrees(phi, pair, k);
    const auto p1 = oracle::evaluate(testing_support::raw(phi),
                                     testing_support::raw(pair.lollipop_1));
    const auto p2 = oracle::evaluate(testing_support::raw(phi),
                                     testing_support::raw(pair.lollipop_2));
    EXPECT_EQ(d.d1 + d.d2,
              static_cast<std::size_t>(oracle::cycle_length(p1, k - 1) +
                                       oracle::cycle_length(p2, k - 1)));
  }
}

TEST(LiftedLength, Examples) {
  EXPECT_DOUBLE_EQ(lifted_length(0.5, {1, 1}), 0.5);
  EXPECT_DOUBLE_EQ(lifted_length(0.5, {2, 3}),
                   0.5 + std::log(2.0) + std::log(3.0));
  EXPECT_THROW(lifted_length(0.0, {0, 1}), InvalidArgument);
}

TEST(Horoball, IdentityCover) {
  const auto trivial = Homomorphism::trivial(2, 1);
  const auto at_equality = has_L_horoball(trivial, one_pair(0.5), std::exp(0.25));
  EXPECT_TRUE(at_equality.decision);
  EXPECT_DOUBLE_EQ(at_equality.min_lift_length, 0.5);
  EXPECT_FALSE(horoball_failure_witness(trivial, one_pair(0.5), std::exp(0.25)));

  const auto short_lift = has_L_horoball(trivial, one_pair(0.5), std::exp(0.3));
  EXPECT_FALSE(short_lift.decision);
  EXPECT_DOUBLE_EQ(short_lift.min_lift_length, 0.5);
  EXPECT_EQ(short_lift.worst_pair, "p");
  EXPECT_EQ(short_lift.worst_point, 1u);
}

TEST(Horoball, LargeOrbitsNeedProductFour) {
  SplitMix64 rng(52);
  int checked = 0;
  while (checked < 100) {
    const auto n = 2 + uniform_below(rng, 6);
    const Homomorphism phi = sample_hom(rng, 2, n);
    const auto s1 = phi.image(1).orbit_sizes();
    const auto s2 = phi.image(2).orbit_sizes();
    if (*std::min_element(s1.begin(), s1.end()) < 2 ||
        *std::min_element(s2.begin(), s2.end()) < 2)
      continue;
    ++checked;
    bool expected = true;
    for (std::size_t k = 0; k < n; ++k)
      expected = expected && s1[k] * s2[k] >= 4;
    EXPECT_EQ(has_L_horoball(phi, one_pair(0), 2.0).decision, expected);
  }
}

TEST(Horoball, TrivialBelowOne) {
  const auto report = has_L_horoball(Homomorphism::trivial(2, 3), one_pair(0), 0.5);
  EXPECT_TRUE(report.decision);
  EXPECT_TRUE(report.note);
  EXPECT_THROW(has_L_horoball(Homomorphism::trivial(2, 3), one_pair(0), 0.0),
               InvalidArgument);
  EXPECT_THROW(has_L_horoball(Homomorphism::trivial(3, 3), one_pair(0), 2.0),
               InvalidArgument);
}

TEST(Horoball, NoPairsMeansInfiniteLength) {
  const auto report = has_L_horoball(Homomorphism::trivial(2, 2),
                                     BaseSurface(0, 3, {}), 5.0);
  EXPECT_TRUE(report.decision);
  EXPECT_TRUE(std::isinf(report.min_lift_length));
}

TEST(Witness, IdentityLollipopsAtLTwo) {
  // 2 ln 2 ~ 1.386: the lift has length 0 but d1 + d2 = 2 exceeds it, so the
  // failure carries no tangling witness.
  const auto phi = Homomorphism::trivial(2, 3);
  EXPECT_FALSE(has_L_horoball(phi, one_pair(0), 2.0).decision);
  const auto w = horoball_failure_witness(phi, one_pair(0), 2.0);
  ASSERT_TRUE(w);
  EXPECT_FALSE(w->tangled);
  EXPECT_EQ(w->degrees, (BranchDegrees{1, 1}));
  EXPECT_EQ(w->k, 1u);
  EXPECT_FALSE(is_tangled(phi, parse_word("a", 2), parse_word("b", 2),
                          static_cast<std::uint64_t>(std::floor(2 * std::log(2.0)))));
}

TEST(Witness, TangledWhenLIsLarge) {
  const double L = 3.0; // 2 ln 3 ~ 2.197
  const auto phi = Homomorphism::trivial(2, 3);
  const auto w = horoball_failure_witness(phi, one_pair(0), L);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->tangled);
  EXPECT_TRUE(is_tangled(phi, parse_word("a", 2), parse_word("b", 2),
                         static_cast<std::uint64_t>(std::floor(2 * std::log(L)))));
}

TEST(HoroballProperty, DegreeOneUsesMinimumBaseLength) {
  const BaseSurface s(0, 3, {pair_of("x", 0.7, "a", "b", 2),
                             pair_of("y", 0.2, "a b", "B", 2)});
  EXPECT_DOUBLE_EQ(has_L_horoball(Homomorphism::trivial(2, 1), s, 1.0)
                       .min_lift_length,
                   0.2);
}

TEST(HoroballProperty, MonotoneInL) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 1 + uniform_below(rng, 6);
    const Homomorphism phi = sample_hom(rng, 2, n);
    const double length = static_cast<double>(uniform_below(rng, 10)) / 10;
    const double L = 1.0 + static_cast<double>(uniform_below(rng, 100)) / 20;
    const double smaller = 1.0 + (L - 1.0) * 0.5;
    if (has_L_horoball(phi, one_pair(length), L).decision)
      EXPECT_TRUE(has_L_horoball(phi, one_pair(length), smaller).decision);
  }
}

TEST(HoroballProperty, LongBaseLengthsAlwaysPass) {
  SplitMix64 rng(54);
  const double L = 2.5;
  const BaseSurface s(0, 3, {pair_of("x", 2 * std::log(L), "a", "b", 2)});
  for (int trial = 0; trial < 100; ++trial)
    EXPECT_TRUE(
        has_L_horoball(sample_hom(rng, 2, 1 + uniform_below(rng, 8)), s, L)
            .decision);
}

TEST(HoroballProperty, WitnessSatisfiesLiftInequality) {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + uniform_below(rng, 6);
    const Homomorphism phi = sample_hom(rng, 2, n);
    const double L = 1.0 + static_cast<double>(uniform_below(rng, 60)) / 10;
    const auto report = has_L_horoball(phi, one_pair(0.1), L);
    const auto w = horoball_failure_witness(phi, one_pair(0.1), L);
    EXPECT_EQ(report.decision, !w.has_value());
    if (w) {
      EXPECT_LT(lifted_length(0.1, w->degrees), 2 * std::log(L));
      EXPECT_EQ(branch_degrees(phi, one_pair(0.1).pairs().front(), w->k),
                w->degrees);
      if (w->tangled)
        EXPECT_TRUE(is_tangled(
            phi, parse_word("a", 2), parse_word("b", 2),
            static_cast<std::uint64_t>(std::floor(2 * std::log(L) + 1e-9))));
    }
  }
}
