#pragma once

// Seiberg-Witten invariant (canonical spin^c structure) of M = S^3_{-d}(K),
// the link of the superisolated singularity attached to a unicuspidal curve,
// computed two independent ways:
//   surgery route: sw = T_M - lambda(M)/|H_1(M)|, |H_1(M)| = d,
//   root route:    sw = (K^2 + #)/8 + sum_l c_l.

#include <cstdint>

#include "cusp/branchdata.hpp"
#include "cusp/localinv.hpp"
#include "cusp/numerics.hpp"

namespace cusp {

struct SWReport {
  Rat torsion;
  Rat casson_walker;
  Rat sw_surgery;
  Rat sw_root;
  std::int64_t h1_order = 0;
  bool genus_valid = false;
  bool agree = false;
};

/// Sum over the nontrivial d-th roots of unity of 1/(xi - 1): -(d-1)/2.
Rat root_sum_inverse(std::int64_t d);
/// Sum over the nontrivial d-th roots of unity of 1/(xi - 1)^2: (d-1)(5-d)/12.
Rat root_sum_inverse_square(std::int64_t d);

/// T_M = (1/d) sum_{xi^d = 1, xi != 1} Delta(xi)/(xi - 1)^2, evaluated
/// exactly through Delta = 1 + (t-1) delta + (t-1)^2 Q.
Rat torsion(const AlexanderData& ad, std::int64_t d);
Rat torsion(const Semigroup& sg, std::int64_t d);

/// lambda(M) = -Dbar''(1)/2 + (d-1)(d-2)/24 with Dbar(t) = t^{-delta} Delta(t).
Rat casson_walker(const AlexanderData& ad, std::int64_t d);
Rat casson_walker(const Semigroup& sg, std::int64_t d);

/// Both routes. Throws ConsistencyError if they disagree on an input with
/// 2 delta = (d-1)(d-2); otherwise reports agreement.
SWReport sw_both_ways(const Semigroup& sg, std::int64_t d);

}  // namespace cusp
