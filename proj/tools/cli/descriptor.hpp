#pragma once

// Curve descriptor wire format:
//   {"degree": 17,
//    "cusps": [{"newton_pairs": [[2, 7], [4, 17]]} | {"semigroup_generators": [8, 28, 73]}],
//    "stab_dim": 0, "kappa_bar": "-inf" | 0 | 1 | 2, "pencil": [d, a]}
// Errors carry a JSON pointer to the offending field.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/curvecheck.hpp"

namespace cuspcli {

class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(std::string pointer, const std::string& message)
      : std::invalid_argument(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct CuspDescriptor {
  std::optional<std::vector<cusp::NewtonPair>> newton_pairs;
  std::optional<std::vector<std::int64_t>> generators;
};

struct CurveDescriptor {
  std::int64_t degree = 0;
  std::vector<CuspDescriptor> cusps;
  std::optional<int> stab_dim;
  std::optional<cusp::KappaBar> kappa_bar;
  std::optional<cusp::PencilType> pencil;
};

/// Parses and validates the JSON text; every cusp is checked to be a genuine
/// plane branch.
CurveDescriptor parse_descriptor(std::string_view text);

cusp::Semigroup cusp_semigroup(const CuspDescriptor& c);

/// Newton-pair form of cusp `index`. Generator-only cusps are rejected with
/// a DescriptorError naming the equivalent Newton pairs.
cusp::BranchType cusp_branch(const CurveDescriptor& d, std::size_t index, std::string_view command);

/// Requires Newton pairs on every cusp.
cusp::CurveSpec to_curve_spec(const CurveDescriptor& d, std::string_view command);

std::string format_pairs(const std::vector<cusp::NewtonPair>& pairs);

}  // namespace cuspcli
