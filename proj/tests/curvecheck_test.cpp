#include <gtest/gtest.h>

#include <random>

#include "cusp/curvecheck.hpp"
#include "cusp/localinv.hpp"
#include "support/oracles.hpp"

using cusp::BranchType;
using cusp::CurveSpec;
using cusp::Int;
using cusp::KappaBar;
using cusp::NewtonPair;

namespace {

BranchType branch(std::vector<NewtonPair> pairs) { return cusp::branch_from_newton_pairs(pairs); }

CurveSpec curve(std::int64_t d, std::vector<std::vector<NewtonPair>> cusps, std::optional<int> stab = std::nullopt) {
  CurveSpec c;
  c.degree = d;
  for (auto& p : cusps) c.cusps.push_back(branch(std::move(p)));
  c.stab_dim = stab;
  return c;
}

std::vector<long> as_long(const std::vector<Int>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST(Validate, RejectsMalformedSpecs) {
  EXPECT_THROW(cusp::validate(curve(2, {{{2, 3}}})), std::invalid_argument);
  EXPECT_THROW(cusp::validate(curve(5, {})), std::invalid_argument);
  EXPECT_THROW(cusp::validate(curve(5, {{{2, 3}}}, 7)), std::invalid_argument);
  EXPECT_THROW(cusp::validate(curve(5, {{{2, 3}}}, -1)), std::invalid_argument);
  EXPECT_NO_THROW(cusp::validate(curve(5, {{{2, 3}}}, 6)));
}

TEST(KappaBar, ParseAndPrint) {
  EXPECT_EQ(cusp::parse_kappa_bar("-inf"), KappaBar::minus_infinity);
  EXPECT_EQ(cusp::parse_kappa_bar("-infinity"), KappaBar::minus_infinity);
  EXPECT_EQ(cusp::parse_kappa_bar("2"), KappaBar::two);
  EXPECT_EQ(cusp::parse_kappa_bar("unknown"), KappaBar::unknown);
  EXPECT_THROW(cusp::parse_kappa_bar("3"), std::invalid_argument);
  for (auto k : {KappaBar::minus_infinity, KappaBar::zero, KappaBar::one, KappaBar::two, KappaBar::unknown})
    EXPECT_EQ(cusp::parse_kappa_bar(cusp::to_string(k)), k);
}

TEST(Genus, Examples) {
  EXPECT_TRUE(cusp::genus_check(curve(3, {{{2, 3}}})));
  EXPECT_TRUE(cusp::genus_check(curve(17, {{{2, 7}, {4, 17}}})));
  EXPECT_TRUE(cusp::genus_check(curve(5, {{{3, 7}}})));
  EXPECT_FALSE(cusp::genus_check(curve(5, {{{2, 3}}})));
  const auto g = cusp::genus_details(curve(17, {{{2, 7}, {4, 17}}}));
  EXPECT_EQ(g.target, 240);
  EXPECT_EQ(g.from_semigroups, 240);
  EXPECT_EQ(g.from_multiplicities, 240);
  // Three cusps: (2,3) three times on a quartic.
  EXPECT_TRUE(cusp::genus_check(curve(4, {{{2, 3}}, {{2, 3}}, {{2, 3}}})));
}

TEST(Hints, ImplicationRules) {
  const auto three = cusp::kappa_stab_hints(curve(4, {{{2, 3}}, {{2, 3}}, {{2, 3}}}));
  EXPECT_EQ(three.kappa_bar, KappaBar::two);
  EXPECT_EQ(three.stab_dim, 0);

  auto cubic = curve(3, {{{2, 3}}});
  cubic.pencil = cusp::PencilType{3, 1};
  EXPECT_EQ(cusp::kappa_stab_hints(cubic).stab_dim, 1);

  const auto alone = cusp::kappa_stab_hints(curve(5, {{{2, 13}}}));
  EXPECT_EQ(alone.kappa_bar, KappaBar::unknown);
  EXPECT_FALSE(alone.stab_dim.has_value());

  const auto two = cusp::kappa_stab_hints(curve(4, {{{2, 5}}, {{2, 3}}}));
  EXPECT_EQ(two.kappa_bar, KappaBar::unknown);
  EXPECT_FALSE(two.stab_dim.has_value());
  EXPECT_FALSE(two.notes.empty());

  auto declared = curve(5, {{{2, 13}}});
  declared.kappa_bar = KappaBar::two;
  EXPECT_EQ(cusp::kappa_stab_hints(declared).stab_dim, 0);

  auto bad_pencil = curve(4, {{{2, 3}}});
  bad_pencil.pencil = cusp::PencilType{4, 2};
  EXPECT_FALSE(cusp::kappa_stab_hints(bad_pencil).stab_dim.has_value());
}

TEST(Dimensions, CuspidalCubic) {
  const auto r = cusp::dimensions_report(curve(3, {{{2, 3}}}, 1));
  EXPECT_EQ(r.virtdim, 0);
  EXPECT_FALSE(r.orevkov_ok);
  EXPECT_TRUE(r.virtdim_ok);
  EXPECT_TRUE(r.identities_ok);
  EXPECT_EQ(r.sum_mbar, 1);
  EXPECT_EQ(r.stab_source, cusp::StabSource::declared);
  EXPECT_EQ(r.chi_theta + r.virtdim, r.stab_dim);
}

TEST(Dimensions, FourFiveQuintic) {
  const auto r = cusp::dimensions_report(curve(5, {{{4, 5}}}, 0));
  const auto md = cusp::multiplicity_data(branch({{4, 5}}));
  EXPECT_EQ(r.virtdim, 3 * 5 - 9 - cusp::mbar(md));
  EXPECT_EQ(r.virtdim, r.virtdim_from_expdim);
  EXPECT_EQ(r.virtdim, r.virtdim_from_multiplicities);
  EXPECT_EQ(r.virtdim, r.virtdim_from_cbar);
  EXPECT_TRUE(r.identities_ok);
}

TEST(Dimensions, StabilizerResolution) {
  EXPECT_THROW(cusp::dimensions_report(curve(5, {{{2, 13}}})), cusp::StabUnknown);
  const auto assumed = cusp::dimensions_report(curve(5, {{{2, 13}}}), true);
  EXPECT_TRUE(assumed.stab_assumed());
  EXPECT_EQ(assumed.stab_dim, 0);
  const auto derived = cusp::dimensions_report(curve(4, {{{2, 3}}, {{2, 3}}, {{2, 3}}}));
  EXPECT_EQ(derived.stab_source, cusp::StabSource::derived);
  EXPECT_EQ(derived.stab_dim, 0);
}

TEST(ConjectureA, Examples) {
  const auto a = cusp::conjectureA_check(curve(5, {{{2, 13}}}));
  EXPECT_EQ(as_long(a.n), (std::vector<long>{0, 0, 0}));
  EXPECT_TRUE(a.pass);
  const auto b = cusp::conjectureA_check(curve(5, {{{3, 7}}}));
  EXPECT_EQ(as_long(b.c), (std::vector<long>{1, 2, 6}));
  EXPECT_EQ(as_long(b.n), (std::vector<long>{0, -1, 0}));
  EXPECT_TRUE(b.pass);
  const auto c = cusp::conjectureA_check(curve(3, {{{2, 3}}}));
  EXPECT_EQ(as_long(c.n), (std::vector<long>{0}));
  EXPECT_THROW(cusp::conjectureA_check(curve(5, {{{2, 3}}})), cusp::GenusError);
}

TEST(Superisolated, Examples) {
  const auto s3 = cusp::superisolated_invariants(3);
  EXPECT_EQ(s3.p_g, 1);
  EXPECT_EQ(s3.k2_plus_sharp, -2);
  EXPECT_EQ(s3.sigma_f, -6);
  const auto s5 = cusp::superisolated_invariants(5);
  EXPECT_EQ(s5.p_g, 10);
  EXPECT_EQ(s5.k2_plus_sharp, -44);
  EXPECT_EQ(s5.sigma_f, -36);
  EXPECT_EQ(cusp::superisolated_invariants(17).p_g, 680);
  for (std::int64_t d = 3; d <= 100; ++d) {
    const auto s = cusp::superisolated_invariants(d);
    EXPECT_EQ(8 * s.p_g + s.sigma_f + s.k2_plus_sharp, 0);
    EXPECT_EQ(s.p_g, Int(d) * (d - 1) * (d - 2) / 6);
  }
  EXPECT_THROW(cusp::superisolated_invariants(2), std::invalid_argument);
}

TEST(GlobalIdentities, RandomMultiCuspCurves) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const std::int64_t d = std::uniform_int_distribution<std::int64_t>(3, 12)(rng);
    CurveSpec c;
    c.degree = d;
    c.cusps = oracle::random_cusp_combination(rng, d, 4);
    c.stab_dim = std::uniform_int_distribution<int>(0, 2)(rng);
    ASSERT_TRUE(cusp::genus_check(c));
    const auto r = cusp::dimensions_report(c);
    EXPECT_TRUE(r.identities_ok);
    EXPECT_EQ(r.virtdim, r.virtdim_from_expdim);
    EXPECT_EQ(r.virtdim, r.virtdim_from_multiplicities);
    EXPECT_EQ(r.virtdim, r.virtdim_from_cbar);
    EXPECT_EQ(r.chi_theta, -r.virtdim + r.stab_dim);
    if (r.stab_dim == 0) EXPECT_EQ(r.orevkov_ok, r.virtdim_ok);

    const auto a = cusp::conjectureA_check(c);
    ASSERT_EQ(a.n.size(), static_cast<std::size_t>(d - 2));
    EXPECT_EQ(a.n.front(), 0);
    for (std::size_t l = 0; l < a.n.size(); ++l) EXPECT_EQ(a.n[l], a.n[a.n.size() - 1 - l]);
  }
}
