#pragma once

// Topological type of a single cusp (locally irreducible plane curve germ):
// Newton pairs, the semigroup of values, and the multiplicity sequence of the
// minimal embedded resolution.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cusp {

class InvalidBranch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NewtonPair {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const NewtonPair&, const NewtonPair&) = default;
};

/// Newton pairs (p_k, q_k) together with the splice-diagram decorations
///   a_1 = q_1,  a_{k+1} = q_{k+1} + p_{k+1} p_k a_k.
/// Instances are only produced by branch_from_newton_pairs, so every
/// BranchType in circulation satisfies the validity conditions.
class BranchType {
 public:
  const std::vector<NewtonPair>& newton_pairs() const { return pairs_; }
  const std::vector<std::int64_t>& splice_decorations() const { return a_; }
  std::size_t pair_count() const { return pairs_.size(); }
  /// p_{k+1} ... p_g for the 0-based pair index k (1 for the last pair).
  std::int64_t tail_product(std::size_t k) const;
  /// p_1 ... p_g, the multiplicity of the branch.
  std::int64_t multiplicity() const { return tail_product(0) * pairs_.front().p; }

  friend bool operator==(const BranchType&, const BranchType&) = default;

 private:
  friend BranchType branch_from_newton_pairs(std::span<const NewtonPair>);
  std::vector<NewtonPair> pairs_;
  std::vector<std::int64_t> a_;
};

/// Throws InvalidBranch unless g >= 1, every gcd(p_k, q_k) = 1, p_k >= 2,
/// q_k >= 1 and q_1 > p_1. A single Puiseux pair (a, b) is the pair (a, b).
BranchType branch_from_newton_pairs(std::span<const NewtonPair> pairs);

/// Numerical semigroup of a plane branch. Membership is stored explicitly on
/// [0, conductor]; everything at or above the conductor is a member.
class Semigroup {
 public:
  /// Builds the semigroup generated by `generators`. Throws InvalidBranch if
  /// the generators have a common factor or the result is not symmetric
  /// (symmetry is necessary for the semigroup of a plane branch).
  static Semigroup from_generators(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return generators_; }
  std::int64_t delta() const { return static_cast<std::int64_t>(gaps_.size()); }
  std::int64_t mu() const { return 2 * delta(); }
  std::int64_t conductor() const { return conductor_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }

  bool contains(std::int64_t k) const;
  /// #{g in semigroup : g <= n}.
  std::int64_t count_up_to(std::int64_t n) const;
  /// Members strictly below the conductor, ascending.
  std::vector<std::int64_t> small_elements() const;

  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.conductor_ == b.conductor_ && a.member_ == b.member_;
  }

 private:
  std::vector<std::int64_t> generators_;
  std::vector<bool> member_;  // index 0..conductor
  std::vector<std::int64_t> prefix_;  // prefix_[k] = members in [0, k)
  std::vector<std::int64_t> gaps_;
  std::int64_t conductor_ = 0;
};

/// Minimal generators b_0 = p_1...p_g, b_k = a_k p_{k+1}...p_g.
std::vector<std::int64_t> semigroup_generators(const BranchType& b);

Semigroup semigroup_of(const BranchType& b);

struct MultiplicityRun {
  std::int64_t m = 0;
  std::int64_t count = 0;
  friend bool operator==(const MultiplicityRun&, const MultiplicityRun&) = default;
};

/// Multiplicity sequence of the minimal embedded resolution (trailing 1's
/// kept) with the satellite/free classification of the blow-up centres.
/// The first centre is neither inner nor outer and counts twice among the
/// free points, so free_points = 2 + outer.
struct MultiplicityData {
  std::vector<MultiplicityRun> runs;
  std::int64_t length = 0;  // k: number of centres
  std::int64_t inner = 0;   // omega: satellite blow-ups
  std::int64_t outer = 0;   // rho: free blow-ups after the first
  std::int64_t free_points = 0;  // L

  std::vector<std::int64_t> expanded() const;
  std::int64_t sum_m() const;
  std::int64_t sum_m_squared() const;
  /// sum m_i (m_i - 1); equals 2 delta.
  std::int64_t sum_m_m_minus_1() const;
};

MultiplicityData multiplicity_data(const BranchType& b);

/// Characteristic exponents beta_0 = n, beta_1 < ... < beta_g of the branch.
std::vector<std::int64_t> characteristic_exponents(const BranchType& b);

/// Inverse of semigroup_generators on minimal plane-branch generator
/// systems. Throws InvalidBranch when the generators are not of that form.
BranchType branch_from_generators(std::span<const std::int64_t> generators);

}  // namespace cusp
