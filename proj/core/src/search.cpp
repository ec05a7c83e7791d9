#include "cusp/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cusp/semidist.hpp"

namespace cusp {

std::int64_t fibonacci(int j) {
  if (j < 0) throw std::invalid_argument("fibonacci: negative index");
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < j; ++i) {
    const std::int64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::string classify_one_pair(std::int64_t d, std::int64_t a, std::int64_t b) {
  if (a == d - 1 && b == d) return "a";
  if (d % 2 == 0 && a == d / 2 && b == 2 * d - 1) return "b";
  // phi grows past any int64 degree of interest long before j = 90.
  for (int j = 5; j < 80; j += 2) {
    const std::int64_t pm2 = fibonacci(j - 2), pm1 = fibonacci(j - 1), pj = fibonacci(j);
    if (pm1 > d + 1) break;
    if (a == pm2 * pm2 && b == pj * pj && d == pm1 * pm1 + 1) return "c";
  }
  for (int j = 5; j < 80; j += 2) {
    const std::int64_t pj = fibonacci(j);
    if (pj > d) break;
    if (d == pj && a == fibonacci(j - 2) && b == fibonacci(j + 2)) return "d";
  }
  if (d == fibonacci(6) && a == fibonacci(4) && b == fibonacci(8) + 1) return "e";
  if (d == 2 * fibonacci(6) && a == 2 * fibonacci(4) && b == 2 * fibonacci(8) + 1) return "f";
  return "unlisted";
}

CandidateVerdict candidate_pipeline(const CurveSpec& c) {
  validate(c);
  if (c.cusps.size() != 1) throw std::invalid_argument("candidate_pipeline needs exactly one cusp");
  const BranchType& branch = c.cusps.front();
  const std::int64_t d = c.degree;

  CandidateVerdict v;
  v.degree = d;
  v.newton_pairs = branch.newton_pairs();
  v.generators = semigroup_generators(branch);
  if (branch.pair_count() == 1)
    v.tag = classify_one_pair(d, branch.newton_pairs()[0].p, branch.newton_pairs()[0].q);

  const Semigroup sg = semigroup_of(branch);
  v.genus = genus_check(c);
  if (!v.genus) v.notes.push_back("genus formula fails: mu = " + std::to_string(sg.mu()));

  auto dp = d_poly(sg, d);
  v.d_poly = std::move(dp.poly);
  v.dp = v.d_poly.is_zero();

  v.semicontinuity_report = semicontinuity_check(branch, d);
  v.semicontinuity = v.semicontinuity_report.pass;
  v.semicontinuity_failing_l = v.semicontinuity_report.failing_l();

  CurveSpec resolved = c;
  bool by_rule = false;
  if (!c.stab_dim && !kappa_stab_hints(c).stab_dim) {
    by_rule = true;
    const auto& pairs = branch.newton_pairs();
    if (pairs.size() == 1 && pairs[0].p == d - 1 && pairs[0].q == d)
      resolved.pencil = PencilType{d, 1};
    else
      resolved.stab_dim = 0;
  }
  const auto g = dimensions_report(resolved, false);
  v.virtdim = g.virtdim;
  v.virtdim_nonneg = g.virtdim >= 0;
  v.stab_dim = g.stab_dim;
  v.stab_source = by_rule ? StabSource::derived : g.stab_source;
  if (by_rule)
    v.notes.push_back(v.stab_dim == 1 ? "dim Stab = 1: type (d-1, d) is the unicuspidal pencil member"
                                      : "dim Stab = 0: not a unicuspidal pencil type");

  if (v.genus) {
    v.conj_a = conjectureA_check(c).pass;
  } else {
    v.notes.push_back("n_l defects skipped: genus formula fails");
  }
  return v;
}

namespace {

std::vector<CandidateVerdict> one_pair_for_degree(std::int64_t d) {
  std::vector<CandidateVerdict> out;
  const std::int64_t target = (d - 1) * (d - 2);
  for (std::int64_t x = 1; x * x < target; ++x) {
    if (target % x != 0) continue;
    const std::int64_t a = x + 1, b = target / x + 1;
    if (a < 2 || std::gcd(a, b) != 1) continue;
    CurveSpec spec;
    spec.degree = d;
    const NewtonPair pair{a, b};
    spec.cusps.push_back(branch_from_newton_pairs(std::span<const NewtonPair>(&pair, 1)));
    out.push_back(candidate_pipeline(spec));
  }
  return out;
}

}  // namespace

std::vector<CandidateVerdict> enumerate_one_pair(std::int64_t d_max, unsigned workers) {
  if (d_max < 3) throw std::invalid_argument("enumerate_one_pair needs d_max >= 3");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const auto count = static_cast<std::size_t>(d_max - 2);
  std::vector<std::vector<CandidateVerdict>> per_degree(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
      try {
        per_degree[i] = one_pair_for_degree(static_cast<std::int64_t>(i) + 3);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::min<std::size_t>(workers, count); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<CandidateVerdict> all;
  for (auto& chunk : per_degree)
    for (auto& v : chunk) all.push_back(std::move(v));
  return all;
}

namespace {

// mu of the cable: mu' = p' mu + (p' - 1)(a' - 1) with a' = q' + p' p a.
void extend(std::vector<NewtonPair>& pairs, std::int64_t mu, std::int64_t a, std::int64_t target,
            std::vector<BranchType>& out) {
  if (mu == target) out.push_back(branch_from_newton_pairs(pairs));
  const std::int64_t p_prev = pairs.back().p;
  for (std::int64_t p = 2;; ++p) {
    const std::int64_t a_min = 1 + p * p_prev * a;
    if (p * mu + (p - 1) * (a_min - 1) > target) break;
    for (std::int64_t q = 1;; ++q) {
      const std::int64_t a_next = q + p * p_prev * a;
      const std::int64_t mu_next = p * mu + (p - 1) * (a_next - 1);
      if (mu_next > target) break;
      if (std::gcd(p, q) != 1) continue;
      pairs.push_back({p, q});
      extend(pairs, mu_next, a_next, target, out);
      pairs.pop_back();
    }
  }
}

}  // namespace

std::vector<BranchType> enumerate_branches(std::int64_t mu) {
  if (mu < 2 || mu % 2 != 0) throw std::invalid_argument("enumerate_branches: mu must be even and >= 2");
  std::vector<BranchType> out;
  std::vector<NewtonPair> pairs;
  for (std::int64_t p = 2; (p - 1) * p <= mu; ++p) {
    for (std::int64_t q = p + 1; (p - 1) * (q - 1) <= mu; ++q) {
      if (std::gcd(p, q) != 1) continue;
      pairs.assign(1, {p, q});
      extend(pairs, (p - 1) * (q - 1), q, mu, out);
    }
  }
  return out;
}

}  // namespace cusp
