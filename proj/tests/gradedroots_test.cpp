#include <gtest/gtest.h>

#include <random>

#include "cusp/curvecheck.hpp"
#include "cusp/gradedroots.hpp"
#include "cusp/localinv.hpp"
#include "support/oracles.hpp"

using cusp::GradedRoot;
using cusp::Int;
using cusp::NewtonPair;
using cusp::Rat;
using cusp::TauFunction;

namespace {

cusp::Semigroup sg_of(std::vector<NewtonPair> pairs) {
  return cusp::semigroup_of(cusp::branch_from_newton_pairs(pairs));
}

TauFunction random_tau(std::mt19937_64& rng) {
  const auto len = std::uniform_int_distribution<std::size_t>(1, 15)(rng);
  std::uniform_int_distribution<std::int64_t> value(-8, 8);
  TauFunction t;
  for (std::size_t i = 0; i < len; ++i) t.values.push_back(value(rng));
  return t;
}

}  // namespace

TEST(RootFromTau, PureStem) {
  const auto r = cusp::root_from_tau({{0}});
  EXPECT_EQ(r.vertices().size(), 1U);
  EXPECT_EQ(r.stem_top(), 0);
  EXPECT_EQ(r.min_chi(), 0);
  EXPECT_TRUE(cusp::satisfies_root_axioms(r));
}

TEST(RootFromTau, FiveTwoThirteenShape) {
  const auto r = cusp::root_from_tau({{0, 1, -5, -2, -5, 1, 0}});
  EXPECT_TRUE(cusp::satisfies_root_axioms(r));
  EXPECT_EQ(r.min_chi(), -5);
  EXPECT_EQ(r.stem_top(), 1);
  EXPECT_EQ(r.level_size(-5), 2U);
  EXPECT_EQ(r.level_size(-3), 2U);
  EXPECT_EQ(r.level_size(-2), 1U);
  EXPECT_EQ(r.level_size(0), 3U);
  EXPECT_EQ(r.level_size(1), 1U);
  EXPECT_EQ(r.level_size(40), 1U);
  EXPECT_EQ(r.level_size(-6), 0U);
}

TEST(RootFromTau, ThreeSevenMergesLower) {
  const auto r = cusp::root_from_tau({{0, 1, -5, -3, -5, 1, 0}});
  EXPECT_EQ(r.level_size(-4), 2U);
  EXPECT_EQ(r.level_size(-3), 1U);
}

TEST(Tau, Constructions) {
  const TauFunction left{{0, 1, -5, -2, -5, 1, 0}};
  EXPECT_EQ(cusp::tau_for_surgery(sg_of({{2, 13}}), 5), left);
  EXPECT_EQ(cusp::tau_for_surgery(sg_of({{4, 5}}), 5), left);
  EXPECT_EQ(cusp::tau_for_brieskorn(5), left);
  EXPECT_EQ(cusp::tau_for_surgery(sg_of({{3, 7}}), 5), (TauFunction{{0, 1, -5, -3, -5, 1, 0}}));
  EXPECT_THROW(cusp::tau_for_surgery(sg_of({{2, 3}}), 5), cusp::GenusError);
  EXPECT_EQ(cusp::tau_for_brieskorn(3).values.size(), 3U);
}

TEST(Isomorphism, Examples) {
  const auto brieskorn = cusp::root_from_tau(cusp::tau_for_brieskorn(5));
  const auto left = cusp::root_from_tau(cusp::tau_for_surgery(sg_of({{2, 13}}), 5));
  const auto right = cusp::root_from_tau(cusp::tau_for_surgery(sg_of({{3, 7}}), 5));
  EXPECT_TRUE(cusp::roots_isomorphic(left, brieskorn));
  EXPECT_FALSE(cusp::roots_isomorphic(right, brieskorn));
  EXPECT_TRUE(cusp::roots_isomorphic(right, right));
}

TEST(Isomorphism, ReversalAndPaddingInvariance) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto t = random_tau(rng);
    auto rev = t;
    std::reverse(rev.values.begin(), rev.values.end());
    EXPECT_TRUE(cusp::roots_isomorphic(cusp::root_from_tau(t), cusp::root_from_tau(rev)));
    // Repeating a value next to itself does not change the sublevel components.
    auto padded = t;
    padded.values.insert(padded.values.begin(), t.values.front());
    EXPECT_TRUE(cusp::roots_isomorphic(cusp::root_from_tau(t), cusp::root_from_tau(padded)));
    // A shifted function gives a shifted root.
    auto shifted = t;
    for (auto& v : shifted.values) v += 1;
    EXPECT_FALSE(cusp::roots_isomorphic(cusp::root_from_tau(t), cusp::root_from_tau(shifted)));
  }
}

TEST(Axioms, HoldForRandomTau) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto t = random_tau(rng);
    const auto r = cusp::root_from_tau(t);
    EXPECT_TRUE(cusp::satisfies_root_axioms(r));
    EXPECT_EQ(r.min_chi(), *std::min_element(t.values.begin(), t.values.end()));
    EXPECT_LE(r.stem_top(), *std::max_element(t.values.begin(), t.values.end()));
    // Level sizes match a direct count of sublevel runs.
    for (std::int64_t n = r.min_chi(); n <= r.stem_top() + 1; ++n) {
      std::size_t runs = 0;
      bool inside = false;
      for (auto v : t.values) {
        if (v <= n && !inside) ++runs;
        inside = v <= n;
      }
      EXPECT_EQ(r.level_size(n), runs);
    }
  }
}

TEST(Ranks, FiveTwoThirteen) {
  const auto r = cusp::root_from_tau(cusp::tau_for_brieskorn(5));
  const auto ranks = cusp::hplus_ranks(r, -12, 10);
  EXPECT_EQ(ranks.ranks.at(-10), 2);
  EXPECT_EQ(ranks.ranks.at(0), 3);
  EXPECT_EQ(ranks.ranks.at(10), 1);
  for (std::int64_t h : {-12, -11, -9, 1}) {
    const auto it = ranks.ranks.find(h);
    EXPECT_TRUE(it == ranks.ranks.end() || it->second == 0) << "h=" << h;
  }
  const auto shifted = cusp::shifted_ranks(ranks, cusp::brieskorn_k2_plus_sharp(5));
  ASSERT_FALSE(shifted.empty());
  EXPECT_EQ(shifted.front().first, Rat(-10) + Rat(40) / Rat(4));
}

TEST(Ranks, MatchLinearAlgebraOracle) {
  std::mt19937_64 rng(6);
  std::vector<GradedRoot> roots;
  for (int i = 0; i < 200; ++i) roots.push_back(cusp::root_from_tau(random_tau(rng)));
  for (std::int64_t d = 3; d <= 8; ++d) {
    roots.push_back(cusp::root_from_tau(cusp::tau_for_brieskorn(d)));
    for (const auto& b : oracle::branches_with_mu((d - 1) * (d - 2)))
      roots.push_back(cusp::root_from_tau(cusp::tau_for_surgery(cusp::semigroup_of(b), d)));
  }
  for (const auto& r : roots) {
    const std::int64_t lo = 2 * r.min_chi() - 2, hi = 2 * r.stem_top() + 4;
    const auto ranks = cusp::hplus_ranks(r, lo, hi);
    for (std::int64_t h = lo; h <= hi; ++h) {
      const auto it = ranks.ranks.find(h);
      const std::int64_t got = it == ranks.ranks.end() ? 0 : it->second;
      EXPECT_EQ(got, oracle::hplus_rank_by_linear_algebra(r, h)) << "h=" << h;
    }
    for (std::int64_t h = 2 * r.stem_top(); h <= hi; h += 2) EXPECT_EQ(ranks.ranks.at(h), 1);
  }
}

TEST(SwFromRoot, Examples) {
  EXPECT_EQ(cusp::sw_from_root(cusp::tau_for_surgery(sg_of({{2, 13}}), 5), Int(-44)), Rat(9) / Rat(2));
  EXPECT_EQ(cusp::brieskorn_k2_plus_sharp(5), -40);
  EXPECT_EQ(cusp::sw_from_root(cusp::tau_for_brieskorn(5), cusp::brieskorn_k2_plus_sharp(5)), Rat(5));
  EXPECT_EQ(cusp::sw_from_root(cusp::tau_for_surgery(sg_of({{2, 3}}), 3), Int(-2)), Rat(3) / Rat(4));
}

TEST(SwFromRoot, DifferenceSumEqualsCSum) {
  for (std::int64_t d = 3; d <= 14; ++d) {
    for (const auto& b : oracle::branches_with_mu((d - 1) * (d - 2))) {
      const auto sg = cusp::semigroup_of(b);
      const auto cp = cusp::c_profile(sg, d);
      Int c_sum = 0;
      for (const auto& c : cp.from_q) c_sum += c;
      EXPECT_EQ(cusp::sw_from_root(cusp::tau_for_surgery(sg, d), Int(0)), Rat(c_sum));
    }
  }
}

TEST(Ranks, IsomorphicRootsHaveEqualRanks) {
  for (std::int64_t d = 3; d <= 10; ++d) {
    const auto brieskorn = cusp::root_from_tau(cusp::tau_for_brieskorn(d));
    for (const auto& b : oracle::branches_with_mu((d - 1) * (d - 2))) {
      const auto root = cusp::root_from_tau(cusp::tau_for_surgery(cusp::semigroup_of(b), d));
      const std::int64_t lo = 2 * std::min(root.min_chi(), brieskorn.min_chi()) - 2;
      const std::int64_t hi = 2 * std::max(root.stem_top(), brieskorn.stem_top()) + 2;
      const bool same_ranks = cusp::hplus_ranks(root, lo, hi).ranks == cusp::hplus_ranks(brieskorn, lo, hi).ranks;
      if (cusp::roots_isomorphic(root, brieskorn)) EXPECT_TRUE(same_ranks);
    }
  }
}
