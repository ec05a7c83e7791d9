#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of them call into the routine they are checking.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/gradedroots.hpp"
#include "cusp/numerics.hpp"

namespace oracle {

/// Characteristic exponents from the Puiseux expansion:
/// beta_k / n = q_1/p_1 + q_2/(p_1 p_2) + ... + q_k/(p_1...p_k).
std::vector<std::int64_t> puiseux_characteristic(const std::vector<cusp::NewtonPair>& pairs);

/// Zariski's recursion: bbar_0 = n, bbar_1 = beta_1,
/// bbar_{k+1} = (e_{k-1}/e_k) bbar_k + beta_{k+1} - beta_k.
std::vector<std::int64_t> zariski_generators(const std::vector<std::int64_t>& beta);

/// Membership in the monoid generated by gens on [0, upto], by closure.
std::vector<bool> monoid_members(const std::vector<std::int64_t>& gens, std::int64_t upto);

/// Gaps of the monoid, scanning until min(gens) consecutive members appear.
std::vector<std::int64_t> monoid_gaps(const std::vector<std::int64_t>& gens);

/// Multiplicity sequence by simulating blow-ups on characteristic exponents,
/// swapping coordinates (Halphen-Zariski inversion) when the multiplicity drops.
std::vector<std::int64_t> blowup_multiplicities(std::vector<std::int64_t> beta);

/// Satellite points from proximity: the points proximate to p_i form a run
/// p_{i+1}, p_{i+2}, ... whose multiplicities add up to m_i.
std::int64_t satellite_count(const std::vector<std::int64_t>& m);

/// Spectrum numbers of x^a + y^b in (0,1): i/a + j/b with 1 <= i < a, 1 <= j < b.
std::vector<cusp::Rat> brieskorn_pham_spectrum(std::int64_t a, std::int64_t b);

/// Alexander polynomial by the cabling formula
/// Delta_{K'}(t) = Delta_K(t^p) * Delta_{T(p, a)}(t), torus knot factor in closed form.
cusp::IntPoly cabling_alexander(const std::vector<cusp::NewtonPair>& pairs);

/// (1/d) sum_{xi^d=1, xi != 1} Delta(xi)/(xi - 1)^2 in 50-digit complex floats;
/// returns |value - expected|.
double torsion_float_error(const cusp::IntPoly& delta, std::int64_t d, const cusp::Rat& expected);
/// |sum 1/(xi-1) - e1| + |sum 1/(xi-1)^2 - e2| over nontrivial d-th roots.
double root_sum_float_error(std::int64_t d, const cusp::Rat& e1, const cusp::Rat& e2);

/// Rank of the degree-h part of H(R, chi) by solving the U-compatibility
/// constraints with exact Gaussian elimination; the stem above stem_top is
/// materialized up to level h/2.
std::int64_t hplus_rank_by_linear_algebra(const cusp::GradedRoot& r, std::int64_t h);

/// Every plane branch with Milnor number mu, enumerated over characteristic
/// exponents with mu = sum (e_{k-1} - e_k)(beta_k - 1); sorted by Newton pairs.
std::vector<cusp::BranchType> branches_with_mu(std::int64_t mu);

/// Random plane branch with at most max_pairs Newton pairs and mu <= mu_max.
std::vector<cusp::NewtonPair> random_branch(std::mt19937_64& rng, int max_pairs, std::int64_t mu_max);

/// Cusps with total Milnor number (d-1)(d-2): a random split into even parts,
/// each realized by a random branch type of that Milnor number.
std::vector<cusp::BranchType> random_cusp_combination(std::mt19937_64& rng, std::int64_t d, int max_cusps);

}  // namespace oracle
