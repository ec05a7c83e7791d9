#pragma once

// Per-cusp invariants: Alexander polynomial with its P/Q decomposition and
// c_l profile, the equisingular codimensions tau^es and Mbar, the spectrum in
// (0,1) and Varchenko's semicontinuity test against x^d + y^d.

#include <cstdint>
#include <span>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/numerics.hpp"

namespace cusp {

/// Delta(t) = 1 + (t-1) delta + (t-1)^2 Q(t) and Delta(t) = 1 + (t-1) P(t).
struct AlexanderData {
  IntPoly delta_poly;  // Delta
  IntPoly gap_poly;    // P
  IntPoly q_poly;      // Q
  std::int64_t delta = 0;
};

/// From the semigroup: Delta = (1-t) sum_{k in G, k < c} t^k + t^c,
/// P = sum over gaps, Q = (P - delta)/(t - 1).
AlexanderData alexander_poly(const Semigroup& sg);

/// Decomposition of an arbitrary product of branch Alexander polynomials
/// (several cusps). P and Q are recovered by exact division.
AlexanderData alexander_from_delta(const IntPoly& delta_poly);

/// Alexander data of the product over several branches.
AlexanderData alexander_of_product(std::span<const Semigroup> semigroups);

/// c_l for l = 0..d-3 in both forms:
///   counting:  #{k in G : k <= l d}
///   from Q:    coefficient of t^{(d-3-l) d} in Q.
/// The two agree for a single branch with 2 delta = (d-1)(d-2); the Q form
/// is the definition used everywhere else.
struct CProfile {
  std::vector<std::int64_t> counting;
  std::vector<Int> from_q;
  bool genus_valid = false;
};

/// Throws std::invalid_argument for d < 3 and ConsistencyError when the two
/// forms disagree on a genus-valid input.
CProfile c_profile(const Semigroup& sg, std::int64_t d);

/// Q-coefficient c_l for l = 0..d-3 from any Alexander data (multi-cusp).
std::vector<Int> c_from_q(const AlexanderData& ad, std::int64_t d);

/// tau^es = sum m(m+1)/2 - L, cross-checked against
/// sum (m-1)(m+2)/2 + omega - 1.
std::int64_t tau_es(const MultiplicityData& md);

/// Mbar = sum m - L, cross-checked against sum (m-1) + omega - 1.
std::int64_t mbar(const MultiplicityData& md);

struct LocalInvariants {
  std::int64_t tau_es = 0;
  std::int64_t mbar = 0;
  std::int64_t delta = 0;
  std::int64_t mu = 0;
};

/// All codimensions of one branch; asserts Mbar = tau^es - delta with delta
/// taken from the semigroup gaps.
LocalInvariants local_invariants(const BranchType& b);

/// Spectral numbers in (0,1), sorted ascending with multiplicity.
struct Spectrum {
  std::vector<Rat> values;
  /// #{alpha : alpha < bound}.
  std::size_t count_below(const Rat& bound) const;
};

Spectrum spectrum(const BranchType& b);

struct SemicontinuityRow {
  std::int64_t l = 0;
  std::int64_t count = 0;  // #{alpha < l/d}
  std::int64_t bound = 0;  // (l-2)(l-1)/2
  bool pass = true;
};

struct SemicontinuityReport {
  std::int64_t degree = 0;
  std::vector<SemicontinuityRow> rows;  // l = 2..d-1
  bool pass = true;
  std::vector<std::int64_t> failing_l() const;
};

SemicontinuityReport semicontinuity_check(const Spectrum& sp, std::int64_t d);
SemicontinuityReport semicontinuity_check(const BranchType& b, std::int64_t d);

}  // namespace cusp
