#include "cusp/branchdata.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cusp {

namespace {

// Keeps semigroup tables at a size a desktop handles comfortably.
constexpr std::int64_t kMaxConductor = 200'000'000;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidBranch("branch data overflows 64-bit integers");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidBranch("branch data overflows 64-bit integers");
  return r;
}

std::string pair_str(const NewtonPair& np) {
  return "(" + std::to_string(np.p) + "," + std::to_string(np.q) + ")";
}

}  // namespace

// --- BranchType ------------------------------------------------------------

std::int64_t BranchType::tail_product(std::size_t k) const {
  std::int64_t prod = 1;
  for (std::size_t j = k + 1; j < pairs_.size(); ++j) prod *= pairs_[j].p;
  return prod;
}

BranchType branch_from_newton_pairs(std::span<const NewtonPair> pairs) {
  if (pairs.empty()) throw InvalidBranch("a branch needs at least one Newton pair");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& np = pairs[k];
    const std::string where = "Newton pair " + std::to_string(k + 1) + " " + pair_str(np);
    if (np.p < 2) throw InvalidBranch(where + ": p must be >= 2");
    if (np.q < 1) throw InvalidBranch(where + ": q must be >= 1");
    if (std::gcd(np.p, np.q) != 1) throw InvalidBranch(where + ": gcd(p,q) must be 1");
  }
  if (pairs[0].q <= pairs[0].p) throw InvalidBranch("first Newton pair needs q_1 > p_1");

  BranchType b;
  b.pairs_.assign(pairs.begin(), pairs.end());
  b.a_.reserve(pairs.size());
  b.a_.push_back(pairs[0].q);
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const std::int64_t prev = b.a_.back();
    b.a_.push_back(checked_add(pairs[k].q, checked_mul(checked_mul(pairs[k].p, pairs[k - 1].p), prev)));
  }
  // The multiplicity and the largest generator must fit as well.
  std::int64_t n = 1;
  for (const auto& np : pairs) n = checked_mul(n, np.p);
  (void)checked_mul(b.a_.back(), n);
  return b;
}

// --- Semigroup -------------------------------------------------------------

Semigroup Semigroup::from_generators(std::vector<std::int64_t> generators) {
  std::erase_if(generators, [](std::int64_t g) { return g == 0; });
  if (generators.empty()) throw InvalidBranch("semigroup needs at least one positive generator");
  if (std::any_of(generators.begin(), generators.end(), [](std::int64_t g) { return g < 0; }))
    throw InvalidBranch("semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::int64_t g = 0;
  for (auto x : generators) g = std::gcd(g, x);
  if (g != 1) throw InvalidBranch("semigroup generators must have gcd 1");

  const std::int64_t smallest = generators.front();
  Semigroup s;
  std::vector<bool> member;
  std::vector<std::int64_t> minimal;
  std::size_t next_gen = 0;
  std::int64_t run = 0;
  std::int64_t conductor = -1;
  for (std::int64_t n = 0;; ++n) {
    if (n > kMaxConductor) throw InvalidBranch("semigroup conductor too large");
    bool in = (n == 0);
    for (auto m : minimal) {
      if (m > n) break;
      if (member[static_cast<std::size_t>(n - m)]) { in = true; break; }
    }
    if (next_gen < generators.size() && generators[next_gen] == n) {
      if (!in) minimal.push_back(n);
      in = true;
      ++next_gen;
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
    if (run == smallest) {
      conductor = n - smallest + 1;
      break;
    }
  }
  member.resize(static_cast<std::size_t>(conductor) + 1);
  // Generators past the conductor are redundant unless nothing smaller
  // reaches them; those cannot exist once `smallest` consecutive members seen.
  s.generators_ = std::move(minimal);
  s.member_ = std::move(member);
  s.conductor_ = conductor;
  s.prefix_.assign(s.member_.size() + 1, 0);
  for (std::size_t k = 0; k < s.member_.size(); ++k) {
    s.prefix_[k + 1] = s.prefix_[k] + (s.member_[k] ? 1 : 0);
    if (!s.member_[k]) s.gaps_.push_back(static_cast<std::int64_t>(k));
  }
  if (s.conductor_ != 2 * s.delta())
    throw InvalidBranch("semigroup is not symmetric (conductor " + std::to_string(s.conductor_) +
                        " != 2*delta " + std::to_string(2 * s.delta()) +
                        "), so it is not the semigroup of a plane branch");
  return s;
}

bool Semigroup::contains(std::int64_t k) const {
  if (k < 0) return false;
  if (k >= conductor_) return true;
  return member_[static_cast<std::size_t>(k)];
}

std::int64_t Semigroup::count_up_to(std::int64_t n) const {
  if (n < 0) return 0;
  if (n >= conductor_) return prefix_[static_cast<std::size_t>(conductor_)] + (n - conductor_ + 1);
  return prefix_[static_cast<std::size_t>(n) + 1];
}

std::vector<std::int64_t> Semigroup::small_elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < conductor_; ++k)
    if (member_[static_cast<std::size_t>(k)]) out.push_back(k);
  return out;
}

std::vector<std::int64_t> semigroup_generators(const BranchType& b) {
  std::vector<std::int64_t> gens;
  gens.push_back(b.multiplicity());
  for (std::size_t k = 0; k < b.pair_count(); ++k)
    gens.push_back(b.splice_decorations()[k] * b.tail_product(k));
  return gens;
}

Semigroup semigroup_of(const BranchType& b) {
  // delta = sum_k (a_k - 1)(p_k - 1)/2 * p_{k+1}...p_g bounds the table size.
  std::int64_t delta = 0;
  for (std::size_t k = 0; k < b.pair_count(); ++k) {
    const auto a = b.splice_decorations()[k];
    const auto p = b.newton_pairs()[k].p;
    delta = checked_add(delta, checked_mul(checked_mul(a - 1, p - 1) / 2, b.tail_product(k)));
  }
  if (2 * delta > kMaxConductor) throw InvalidBranch("branch too large: Milnor number " + std::to_string(2 * delta));
  return Semigroup::from_generators(semigroup_generators(b));
}

// --- multiplicity sequence ---------------------------------------------------

std::vector<std::int64_t> characteristic_exponents(const BranchType& b) {
  std::vector<std::int64_t> beta;
  beta.push_back(b.multiplicity());
  for (std::size_t k = 0; k < b.pair_count(); ++k) {
    const std::int64_t step = b.newton_pairs()[k].q * b.tail_product(k);
    beta.push_back(k == 0 ? step : beta.back() + step);
  }
  return beta;
}

std::vector<std::int64_t> MultiplicityData::expanded() const {
  std::vector<std::int64_t> out;
  for (const auto& r : runs) out.insert(out.end(), static_cast<std::size_t>(r.count), r.m);
  return out;
}

std::int64_t MultiplicityData::sum_m() const {
  std::int64_t s = 0;
  for (const auto& r : runs) s += r.m * r.count;
  return s;
}

std::int64_t MultiplicityData::sum_m_squared() const {
  std::int64_t s = 0;
  for (const auto& r : runs) s += r.m * r.m * r.count;
  return s;
}

std::int64_t MultiplicityData::sum_m_m_minus_1() const {
  std::int64_t s = 0;
  for (const auto& r : runs) s += r.m * (r.m - 1) * r.count;
  return s;
}

MultiplicityData multiplicity_data(const BranchType& b) {
  // Enriques: each characteristic exponent contributes the rows of the
  // Euclidean algorithm on (beta_k - beta_{k-1}, e_{k-1}); a row with
  // remainder r and quotient h gives h centres of multiplicity r.
  //
  // Free centres per block: the first row and the first centre of the second
  // row. In the first block the first centre is the origin itself, which
  // is neither inner nor outer.
  const auto beta = characteristic_exponents(b);
  MultiplicityData md;
  auto push = [&md](std::int64_t m, std::int64_t count) {
    if (count == 0) return;
    if (!md.runs.empty() && md.runs.back().m == m)
      md.runs.back().count += count;
    else
      md.runs.push_back({m, count});
    md.length += count;
  };

  std::int64_t e = beta[0];
  for (std::size_t k = 1; k < beta.size(); ++k) {
    std::int64_t num = (k == 1) ? beta[1] : beta[k] - beta[k - 1];
    std::int64_t den = e;
    const std::int64_t first_quotient = num / den;
    md.outer += (k == 1) ? first_quotient : first_quotient + 1;
    while (den != 0) {
      push(den, num / den);
      const std::int64_t r = num % den;
      num = den;
      den = r;
    }
    e = num;  // gcd of beta_0 .. beta_k
  }
  md.inner = md.length - 1 - md.outer;
  md.free_points = 2 + md.outer;
  return md;
}

// --- generators -> Newton pairs ------------------------------------------------

BranchType branch_from_generators(std::span<const std::int64_t> generators) {
  if (generators.size() < 2) throw InvalidBranch("a plane branch semigroup needs at least two generators");
  std::vector<NewtonPair> pairs;
  std::int64_t e_prev = generators[0];
  std::int64_t a_prev = 0;
  std::int64_t p_prev = 0;
  for (std::size_t k = 1; k < generators.size(); ++k) {
    const std::int64_t e = std::gcd(e_prev, generators[k]);
    if (e == e_prev) throw InvalidBranch("generators are not a minimal plane-branch system");
    const std::int64_t p = e_prev / e;
    const std::int64_t a = generators[k] / e;
    const std::int64_t q = (k == 1) ? a : a - p * p_prev * a_prev;
    pairs.push_back({p, q});
    e_prev = e;
    a_prev = a;
    p_prev = p;
  }
  if (e_prev != 1) throw InvalidBranch("generators must have gcd 1");
  auto b = branch_from_newton_pairs(pairs);
  if (semigroup_generators(b) != std::vector<std::int64_t>(generators.begin(), generators.end()))
    throw InvalidBranch("generators are not a minimal plane-branch system");
  return b;
}

}  // namespace cusp
