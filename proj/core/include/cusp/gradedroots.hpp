#pragma once

// Graded roots built from a function tau: {0..r} -> Z (the merge tree of its
// sublevel sets on the path 0 - 1 - ... - r), their isomorphism test, and the
// graded ranks of the associated Z[U]-module.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cusp/branchdata.hpp"
#include "cusp/numerics.hpp"

namespace cusp {

struct TauFunction {
  std::vector<std::int64_t> values;
  friend bool operator==(const TauFunction&, const TauFunction&) = default;
};

/// Finite normal form of a graded root. Vertices are stored from the lowest
/// grading up to `stem_top`, the lowest level from which the root is a single
/// infinite chain; the chain above stem_top is implicit.
class GradedRoot {
 public:
  struct Vertex {
    std::int64_t chi = 0;
    std::int64_t parent = -1;  // vertex at chi + 1; -1 for the stem vertex
  };

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::int64_t stem_top() const { return stem_top_; }
  std::int64_t min_chi() const { return min_chi_; }
  std::size_t top_index() const { return top_; }

  /// Vertex indices at grading n (the stem vertex for n >= stem_top, empty
  /// below min_chi). Above stem_top the implicit chain vertex is reported as
  /// top_index().
  std::vector<std::size_t> level(std::int64_t n) const;
  /// Number of vertices at grading n, counting the implicit stem.
  std::size_t level_size(std::int64_t n) const;
  std::vector<std::size_t> children(std::size_t v) const;

 private:
  friend GradedRoot root_from_tau(const TauFunction& tau);
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> children_;
  std::map<std::int64_t, std::vector<std::size_t>> by_level_;
  std::int64_t stem_top_ = 0;
  std::int64_t min_chi_ = 0;
  std::size_t top_ = 0;
};

/// Vertices at level n are the connected components of {i : tau(i) <= n};
/// edges join a component to the one containing it at level n + 1.
GradedRoot root_from_tau(const TauFunction& tau);

/// Checks the graded-root axioms on the stored part: adjacent gradings differ
/// by one, no vertex sits below two of its neighbours, finite levels, a
/// single stem vertex at stem_top.
bool satisfies_root_axioms(const GradedRoot& r);

/// tau(2l) = l(l-1)d/2 - l(delta-1), tau(2l+1) = tau(2l+2) + c_{d-3-l}
/// on {0, ..., 2d-4}; c_l from the Alexander polynomial of the semigroup.
TauFunction tau_for_surgery(const Semigroup& sg, std::int64_t d);
/// Same recipe with c_l = (l+1)(l+2)/2 and 2 delta = (d-1)(d-2):
/// the Brieskorn sphere Sigma(d, d, d+1).
TauFunction tau_for_brieskorn(std::int64_t d);

/// Chi-preserving tree isomorphism via canonical bottom-up labels.
bool roots_isomorphic(const GradedRoot& a, const GradedRoot& b);

struct HFRanks {
  /// rank of the degree-h part of H(R, chi), unshifted; only even h appear
  /// with nonzero rank.
  std::map<std::int64_t, std::int64_t> ranks;
};

/// For each h in [h_min, h_max]: components of {v : chi(v) <= h/2} for even
/// h, zero for odd h.
HFRanks hplus_ranks(const GradedRoot& r, std::int64_t h_min, std::int64_t h_max);

/// Ranks re-indexed by h - (K^2 + #)/4: the Heegaard-Floer grading.
std::vector<std::pair<Rat, std::int64_t>> shifted_ranks(const HFRanks& ranks, const Int& k2_plus_sharp);

/// sw - (K^2+#)/8 = sum_l (tau(2l+1) - tau(2l+2)).
Rat sw_from_root(const TauFunction& tau, const Int& k2_plus_sharp);

/// K^2 + # of the Brieskorn link Sigma(d, d, d+1): -d(d-1)(d-3).
Int brieskorn_k2_plus_sharp(std::int64_t d);

}  // namespace cusp
