#include <gtest/gtest.h>

#include <random>

#include "cusp/branchdata.hpp"
#include "support/oracles.hpp"

using cusp::BranchType;
using cusp::NewtonPair;
using cusp::Semigroup;

namespace {

BranchType branch(std::vector<NewtonPair> pairs) { return cusp::branch_from_newton_pairs(pairs); }

}  // namespace

TEST(BranchType, SpliceDecorations) {
  EXPECT_EQ(branch({{2, 7}, {4, 17}}).splice_decorations(), (std::vector<std::int64_t>{7, 73}));
  EXPECT_EQ(branch({{2, 3}}).splice_decorations(), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(branch({{3, 22}}).splice_decorations(), (std::vector<std::int64_t>{22}));
  EXPECT_EQ(branch({{2, 7}, {4, 17}}).multiplicity(), 8);
}

TEST(BranchType, RejectsInvalidPairs) {
  EXPECT_THROW(branch({}), cusp::InvalidBranch);
  EXPECT_THROW(branch({{2, 4}}), cusp::InvalidBranch);
  EXPECT_THROW(branch({{1, 3}}), cusp::InvalidBranch);
  EXPECT_THROW(branch({{3, 2}}), cusp::InvalidBranch);
  EXPECT_THROW(branch({{2, 3}, {2, 2}}), cusp::InvalidBranch);
  EXPECT_THROW(branch({{2, 3}, {3, 0}}), cusp::InvalidBranch);
  EXPECT_NO_THROW(branch({{2, 3}, {2, 1}}));
}

TEST(Semigroup, CounterexampleGenerators) {
  const auto b = branch({{2, 7}, {4, 17}});
  EXPECT_EQ(cusp::semigroup_generators(b), (std::vector<std::int64_t>{8, 28, 73}));
  const auto sg = cusp::semigroup_of(b);
  EXPECT_EQ(sg.mu(), 240);
  EXPECT_EQ(sg.conductor(), 240);
}

TEST(Semigroup, OrdinaryCusp) {
  const auto sg = cusp::semigroup_of(branch({{2, 3}}));
  EXPECT_EQ(sg.gaps(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(sg.delta(), 1);
  EXPECT_EQ(sg.conductor(), 2);
}

TEST(Semigroup, ThreeSeven) {
  const auto sg = cusp::semigroup_of(branch({{3, 7}}));
  EXPECT_EQ(sg.gaps(), (std::vector<std::int64_t>{1, 2, 4, 5, 8, 11}));
  EXPECT_EQ(sg.delta(), 6);
  EXPECT_EQ(sg.conductor(), 12);
  EXPECT_EQ(sg.count_up_to(5), 2);
  EXPECT_EQ(sg.count_up_to(10), 6);
  EXPECT_EQ(sg.count_up_to(100), 95);
  EXPECT_EQ(sg.small_elements(), (std::vector<std::int64_t>{0, 3, 6, 7, 9, 10}));
}

TEST(Semigroup, FromGeneratorsValidation) {
  EXPECT_THROW(Semigroup::from_generators({4, 6}), cusp::InvalidBranch);
  EXPECT_THROW(Semigroup::from_generators({3, 4, 5}), cusp::InvalidBranch);  // not symmetric
  EXPECT_THROW(Semigroup::from_generators({}), cusp::InvalidBranch);
  const auto sg = Semigroup::from_generators({13, 2, 2, 4});
  EXPECT_EQ(sg.generators(), (std::vector<std::int64_t>{2, 13}));
  EXPECT_EQ(sg, cusp::semigroup_of(branch({{2, 13}})));
}

TEST(Semigroup, InverseOfGeneratorFormula) {
  const std::vector<std::int64_t> gens{8, 28, 73};
  EXPECT_EQ(cusp::branch_from_generators(gens).newton_pairs(), (std::vector<NewtonPair>{{2, 7}, {4, 17}}));
  const std::vector<std::int64_t> not_plane{3, 4, 5};
  EXPECT_THROW(cusp::branch_from_generators(not_plane), cusp::InvalidBranch);
  const std::vector<std::int64_t> not_minimal{4, 6, 10, 13};
  EXPECT_THROW(cusp::branch_from_generators(not_minimal), cusp::InvalidBranch);
}

TEST(Multiplicity, CounterexampleSequence) {
  const auto md = cusp::multiplicity_data(branch({{2, 7}, {4, 17}}));
  EXPECT_EQ(md.runs, (std::vector<cusp::MultiplicityRun>{{8, 3}, {4, 6}, {1, 4}}));
  EXPECT_EQ(md.length, 13);
  EXPECT_EQ(md.sum_m_m_minus_1(), 240);
  EXPECT_EQ(md.length - 1, md.inner + md.outer);
  EXPECT_EQ(md.free_points, 2 + md.outer);
}

TEST(Multiplicity, OrdinaryCusp) {
  const auto md = cusp::multiplicity_data(branch({{2, 3}}));
  EXPECT_EQ(md.expanded(), (std::vector<std::int64_t>{2, 1, 1}));
  EXPECT_EQ(md.inner, 1);
  EXPECT_EQ(md.outer, 1);
  EXPECT_EQ(md.free_points, 3);
}

TEST(Multiplicity, FourFive) {
  const auto md = cusp::multiplicity_data(branch({{4, 5}}));
  EXPECT_EQ(md.expanded(), (std::vector<std::int64_t>{4, 1, 1, 1, 1}));
  EXPECT_EQ(md.sum_m_m_minus_1(), 12);
}

TEST(BranchProperties, RandomBranchesAgainstOracles) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto pairs = oracle::random_branch(rng, 3, 2000);
    SCOPED_TRACE(::testing::PrintToString(pairs.size()) + " pairs, first (" + std::to_string(pairs[0].p) + "," +
                 std::to_string(pairs[0].q) + ")");
    const auto b = branch(pairs);
    const auto sg = cusp::semigroup_of(b);

    const auto beta = oracle::puiseux_characteristic(pairs);
    EXPECT_EQ(cusp::characteristic_exponents(b), beta);
    EXPECT_EQ(cusp::semigroup_generators(b), oracle::zariski_generators(beta));
    EXPECT_EQ(sg.gaps(), oracle::monoid_gaps(sg.generators()));
    EXPECT_EQ(sg.conductor(), 2 * sg.delta());
    for (std::int64_t k = 0; k < sg.mu(); ++k) EXPECT_NE(sg.contains(k), sg.contains(sg.mu() - 1 - k));

    const auto md = cusp::multiplicity_data(b);
    const auto m = md.expanded();
    EXPECT_EQ(m, oracle::blowup_multiplicities(beta));
    EXPECT_EQ(md.inner, oracle::satellite_count(m));
    EXPECT_EQ(md.sum_m_m_minus_1(), sg.mu());
    EXPECT_EQ(m.front(), sg.small_elements().at(1));
    EXPECT_TRUE(std::is_sorted(m.rbegin(), m.rend()));
    EXPECT_EQ(m.back(), 1);
    EXPECT_EQ(md.length - 1, md.inner + md.outer);
    EXPECT_EQ(md.free_points, 2 + md.outer);
    EXPECT_EQ(md.free_points, md.length - md.inner + 1);

    const std::vector<std::int64_t> gens = sg.generators();
    EXPECT_EQ(cusp::branch_from_generators(gens), b);
  }
}

TEST(BranchProperties, OnePairDeltaFormula) {
  for (std::int64_t a = 2; a <= 15; ++a)
    for (std::int64_t b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto sg = cusp::semigroup_of(branch({{a, b}}));
      EXPECT_EQ(sg.delta(), (a - 1) * (b - 1) / 2);
      EXPECT_EQ(static_cast<std::int64_t>(oracle::monoid_gaps({a, b}).size()), (a - 1) * (b - 1) / 2);
    }
}
