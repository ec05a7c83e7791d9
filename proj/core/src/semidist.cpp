#include "cusp/semidist.hpp"

#include <algorithm>
#include <stdexcept>

#include "cusp/curvecheck.hpp"
#include "cusp/localinv.hpp"

namespace cusp {

DPolyResult d_poly(const Semigroup& sg, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("d_poly needs d >= 3");
  const std::int64_t c = sg.conductor();
  const std::int64_t l_max = std::max(d, (c + d - 1) / d + 1);
  DPolyResult res;
  std::vector<Int> coeffs(static_cast<std::size_t>(l_max) + 1);
  for (std::int64_t l = 0; l <= l_max; ++l) {
    IntervalRow row;
    row.l = l;
    row.count = (l == 0) ? 1 : sg.count_up_to(l * d) - sg.count_up_to((l - 1) * d);
    row.expected = std::min(l + 1, d);
    coeffs[static_cast<std::size_t>(l)] = row.count - row.expected;
    res.table.push_back(row);
  }
  res.poly = IntPoly(std::move(coeffs));
  return res;
}

IntPoly n_poly(const Semigroup& sg, std::int64_t d) {
  const auto c = c_from_q(alexander_poly(sg), d);
  std::vector<Int> coeffs(c.size());
  for (std::size_t l = 0; l < c.size(); ++l) {
    const auto ll = static_cast<long>(l);
    coeffs[c.size() - 1 - l] = c[l] - (ll + 1) * (ll + 2) / 2;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly r_poly(const Semigroup& sg, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("r_poly needs d >= 3");
  const auto ad = alexander_poly(sg);
  const std::int64_t l_top = 2 * d;
  const auto ud = static_cast<std::size_t>(d);

  // b_k = sum_{j<=k} (k-j+1) Delta_j, the series Delta(t)/(1-t)^2.
  const IntPoly one_minus_t{1, -1};
  const auto b = series_quotient_coeffs(ad.delta_poly, one_minus_t * one_minus_t,
                                        static_cast<std::size_t>(l_top) * ud);
  // u_l: series (1 - s^d)/(1 - s)^3.
  const auto u = series_quotient_coeffs(one_minus_t_pow(ud), one_minus_t * one_minus_t * one_minus_t,
                                        static_cast<std::size_t>(l_top));

  std::vector<Int> coeffs;
  for (std::int64_t l = 0; l <= l_top; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    Int v = b[ul * ud] - u[ul];
    if (l > d - 3) {
      if (v != 0)
        throw ConsistencyError("r_poly: R(t) has a nonzero coefficient at t^" + std::to_string(l * d) +
                               " (genus formula fails)");
      continue;
    }
    coeffs.resize(ul * ud + 1);
    coeffs[ul * ud] = std::move(v);
  }
  return IntPoly(std::move(coeffs));
}

IdentityCheck verify_identities(const Semigroup& sg, std::int64_t d, const SWReport& sw) {
  IdentityCheck chk;
  const auto ud = static_cast<std::size_t>(d);
  IntPoly r;
  try {
    r = r_poly(sg, d);
  } catch (const ConsistencyError& e) {
    chk.notes.emplace_back(e.what());
    return chk;
  }
  const IntPoly n_of_td = n_poly(sg, d).substitute_power(ud);
  const IntPoly d_of_td = d_poly(sg, d).poly.substitute_power(ud);

  bool ok = true;
  if (n_of_td != r) {
    ok = false;
    chk.notes.push_back("R(t) != N(t^d)");
  }
  try {
    if (exact_div(d_of_td, one_minus_t_pow(ud)) != r) {
      ok = false;
      chk.notes.push_back("R(t) != D(t^d)/(1-t^d)");
    }
  } catch (const DivisionError&) {
    ok = false;
    chk.notes.push_back("D(t^d) is not divisible by 1-t^d");
  }
  chk.r_chain_ok = ok;

  const auto si = superisolated_invariants(d);
  const Rat rhs = sw.sw_surgery - Rat(si.k2_plus_sharp, Int(8)) - Rat(si.p_g);
  chk.r_at_one_ok = Rat(r.evaluate(1)) == rhs;
  if (!chk.r_at_one_ok)
    chk.notes.push_back("R(1) = " + r.evaluate(1).get_str() + " but sw - (K^2+#)/8 - p_g = " + rhs.str());
  return chk;
}

DistributionReport distribution_report(const Semigroup& sg, std::int64_t d) {
  DistributionReport rep;
  rep.degree = d;
  auto dp = d_poly(sg, d);
  rep.d_poly = std::move(dp.poly);
  rep.interval_table = std::move(dp.table);
  rep.dp_holds = rep.d_poly.is_zero();
  rep.genus_valid = sg.mu() == (d - 1) * (d - 2);
  if (!rep.genus_valid) {
    rep.notes.push_back("genus formula fails: mu = " + std::to_string(sg.mu()) +
                        " but (d-1)(d-2) = " + std::to_string((d - 1) * (d - 2)));
    return rep;
  }
  rep.n_poly = n_poly(sg, d);
  rep.r_poly = r_poly(sg, d);
  rep.r_at_one = rep.r_poly.evaluate(1);
  const auto chk = verify_identities(sg, d, sw_both_ways(sg, d));
  rep.r_chain_ok = chk.r_chain_ok;
  rep.r_at_one_ok = chk.r_at_one_ok;
  rep.notes.insert(rep.notes.end(), chk.notes.begin(), chk.notes.end());
  return rep;
}

}  // namespace cusp
