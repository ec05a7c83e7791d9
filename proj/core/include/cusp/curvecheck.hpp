#pragma once

// Global invariants of a rational cuspidal plane curve of degree d and the
// conjecture gates built from them.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/numerics.hpp"

namespace cusp {

class GenusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The stabilizer dimension could not be resolved and no default was allowed.
class StabUnknown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Logarithmic Kodaira dimension of the complement.
enum class KappaBar { minus_infinity, zero, one, two, unknown };

std::string to_string(KappaBar k);
/// Accepts "-inf", "-infinity", "0", "1", "2", "unknown".
KappaBar parse_kappa_bar(const std::string& text);

/// Member of the pencil y^d + lambda z^a x^(d-a).
struct PencilType {
  std::int64_t degree = 0;
  std::int64_t a = 0;
};

struct CurveSpec {
  std::int64_t degree = 0;
  std::vector<BranchType> cusps;
  std::optional<int> stab_dim;
  std::optional<KappaBar> kappa_bar;
  std::optional<PencilType> pencil;
};

/// Throws std::invalid_argument for d < 3, no cusps, or stab_dim outside 0..6.
void validate(const CurveSpec& c);

struct GenusDetails {
  std::int64_t target = 0;             // (d-1)(d-2)
  std::int64_t from_semigroups = 0;    // sum 2 delta_i
  std::int64_t from_multiplicities = 0;  // sum sum m(m-1)
  bool ok = false;
};

GenusDetails genus_details(const CurveSpec& c);
bool genus_check(const CurveSpec& c);

struct KappaStabHints {
  KappaBar kappa_bar = KappaBar::unknown;
  std::optional<int> stab_dim;
  std::vector<std::string> notes;
};

/// Implication rules only; kappa-bar is never computed from scratch.
///   three or more cusps  => kappa-bar = 2
///   kappa-bar = 2        => dim Stab = 0
///   two cusps            => kappa-bar in {1, 2}
///   declared pencil (d,a), gcd(d,a) = 1 => dim Stab = 1
KappaStabHints kappa_stab_hints(const CurveSpec& c);

enum class StabSource { declared, derived, assumed };
std::string to_string(StabSource s);

struct GlobalReport {
  std::int64_t degree = 0;
  std::int64_t tau_es_total = 0;
  std::int64_t sum_mbar = 0;
  std::int64_t sum_free_points = 0;  // sum L_p
  std::int64_t sum_m = 0;
  std::int64_t sum_m_squared = 0;

  int stab_dim = 0;
  StabSource stab_source = StabSource::assumed;
  KappaBar kappa_bar = KappaBar::unknown;

  std::int64_t expdim = 0;
  std::int64_t virtdim = 0;  // from Mbar
  std::int64_t virtdim_from_expdim = 0;
  std::int64_t virtdim_from_multiplicities = 0;
  std::int64_t virtdim_from_cbar = 0;
  std::int64_t cbar_sq = 0;
  std::int64_t chi_theta = 0;

  bool genus_ok = false;
  bool identities_ok = false;
  bool orevkov_ok = false;
  bool virtdim_ok = false;
  std::vector<std::string> notes;

  bool stab_assumed() const { return stab_source == StabSource::assumed; }
};

/// Resolves the stabilizer (declared, then hints, then 0 if allowed) and
/// evaluates every dimension formula. Throws StabUnknown when unresolved and
/// `allow_assumed_stab` is false.
GlobalReport dimensions_report(const CurveSpec& c, bool allow_assumed_stab = false);

struct ConjectureAReport {
  std::int64_t degree = 0;
  std::vector<Int> c;  // c_l, l = 0..d-3
  std::vector<Int> n;  // c_l - (l+1)(l+2)/2
  bool pass = false;
};

/// n_l from the product Alexander polynomial. Throws GenusError when the
/// genus formula fails and ConsistencyError if symmetry n_l = n_{d-3-l} or
/// n_0 = 0 is violated.
ConjectureAReport conjectureA_check(const CurveSpec& c);

struct SuperisolatedInvariants {
  Int p_g;
  Int k2_plus_sharp;
  Int sigma_f;
};

/// Invariants of f_d + l^{d+1}; they depend on d alone.
SuperisolatedInvariants superisolated_invariants(std::int64_t d);

}  // namespace cusp
