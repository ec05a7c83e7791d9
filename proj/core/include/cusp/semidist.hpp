#pragma once

// Semigroup distribution property of a unicuspidal curve of degree d: every
// interval ((l-1)d, ld] holds exactly min(l+1, d) semigroup elements.
// Encoded by D(t); the equivalent forms N(t) (c_l defects) and R(t)
// (root-of-unity average tied to the Seiberg-Witten invariant) are computed
// independently so their identities are genuine cross-checks.

#include <cstdint>
#include <string>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/numerics.hpp"
#include "cusp/swtorsion.hpp"

namespace cusp {

struct IntervalRow {
  std::int64_t l = 0;
  std::int64_t count = 0;     // #(G intersect ((l-1)d, ld]); l = 0 counts {0}
  std::int64_t expected = 0;  // min(l+1, d)
};

struct DPolyResult {
  IntPoly poly;
  std::vector<IntervalRow> table;
};

/// Scans l = 0..max(d, ceil(conductor/d) + 1); past that both counts are d.
DPolyResult d_poly(const Semigroup& sg, std::int64_t d);

/// N(t) = sum_{l=0}^{d-3} (c_l - (l+1)(l+2)/2) t^{d-3-l}.
IntPoly n_poly(const Semigroup& sg, std::int64_t d);

/// R(t) = (1/d) sum_{xi^d=1} Delta(xi t)/(1 - xi t)^2 - (1 - t^{d^2})/(1 - t^d)^3.
/// The average keeps exactly the exponents divisible by d of the series
/// Delta(t)/(1-t)^2, so no roots of unity are needed. Throws
/// ConsistencyError if R is not a polynomial of degree <= (d-3)d, which
/// happens exactly when 2 delta != (d-1)(d-2).
IntPoly r_poly(const Semigroup& sg, std::int64_t d);

struct IdentityCheck {
  bool r_chain_ok = false;  // R(t) = D(t^d)/(1 - t^d) = N(t^d)
  bool r_at_one_ok = false;  // R(1) = sw - (K^2+#)/8 - p_g
  std::vector<std::string> notes;
};

IdentityCheck verify_identities(const Semigroup& sg, std::int64_t d, const SWReport& sw);

struct DistributionReport {
  std::int64_t degree = 0;
  IntPoly d_poly;
  IntPoly n_poly;
  IntPoly r_poly;
  Int r_at_one;
  bool genus_valid = false;
  bool dp_holds = false;
  bool r_chain_ok = false;
  bool r_at_one_ok = false;
  std::vector<IntervalRow> interval_table;
  std::vector<std::string> notes;
};

/// Full report. On inputs failing the genus formula the D(t) part is still
/// computed (with a note) while N, R and the identities are skipped.
DistributionReport distribution_report(const Semigroup& sg, std::int64_t d);

}  // namespace cusp
