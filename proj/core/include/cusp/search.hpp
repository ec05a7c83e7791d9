#pragma once

// Candidate unicuspidal curves: every necessary condition applied to one
// (degree, cusp type) pair, the bounded one-Puiseux-pair enumeration, and the
// arithmetic classifier for the known realizable list.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/curvecheck.hpp"
#include "cusp/localinv.hpp"
#include "cusp/numerics.hpp"

namespace cusp {

/// Realizable one-pair families: "a" (d-1, d), "b" (d/2, 2d-1), "c" and "d"
/// (Fibonacci families), "e" (3, 22; d = 8), "f" (6, 43; d = 16).
/// Returns "unlisted" when no pattern matches exactly.
std::string classify_one_pair(std::int64_t d, std::int64_t a, std::int64_t b);

/// Fibonacci number phi_j with phi_0 = 0, phi_1 = 1.
std::int64_t fibonacci(int j);

struct CandidateVerdict {
  std::int64_t degree = 0;
  std::vector<NewtonPair> newton_pairs;
  std::vector<std::int64_t> generators;

  bool genus = false;
  bool dp = false;
  IntPoly d_poly;
  bool semicontinuity = false;
  std::vector<std::int64_t> semicontinuity_failing_l;
  SemicontinuityReport semicontinuity_report;
  bool virtdim_nonneg = false;
  std::int64_t virtdim = 0;
  int stab_dim = 0;
  StabSource stab_source = StabSource::assumed;
  bool conj_a = false;
  std::string tag = "unlisted";
  std::vector<std::string> notes;

  /// Some necessary condition failed, so no such curve exists.
  bool refuted() const { return !genus || !dp || !semicontinuity || !virtdim_nonneg || !conj_a; }
};

/// Runs every filter on a unicuspidal spec. When the stabilizer dimension is
/// neither declared nor implied, it is fixed by the positive-stabilizer
/// classification: only the pencil y^d + lambda z^a x^(d-a) has dim Stab > 0,
/// and its unicuspidal members carry the single pair (d-1, d). So that type
/// gets dim Stab = 1 and every other type 0. Throws std::invalid_argument
/// unless the curve has exactly one cusp.
CandidateVerdict candidate_pipeline(const CurveSpec& c);

/// All (d, a, b) with 3 <= d <= d_max, 1 < a < b, gcd(a, b) = 1 and
/// (a-1)(b-1) = (d-1)(d-2), each run through candidate_pipeline. Ordered by
/// (d, a) regardless of `workers` (0 means hardware concurrency).
std::vector<CandidateVerdict> enumerate_one_pair(std::int64_t d_max, unsigned workers = 1);

/// Every plane branch type (any number of Newton pairs) with Milnor number
/// mu, in lexicographic order of the pair lists. Throws std::invalid_argument
/// unless mu is even and at least 2.
std::vector<BranchType> enumerate_branches(std::int64_t mu);

}  // namespace cusp
