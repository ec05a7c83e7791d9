#include "cusp/localinv.hpp"

#include <algorithm>
#include <string>

namespace cusp {

namespace {

const IntPoly& t_minus_one() {
  static const IntPoly p{-1, 1};
  return p;
}

}  // namespace

AlexanderData alexander_poly(const Semigroup& sg) {
  const auto c = static_cast<std::size_t>(sg.conductor());
  std::vector<Int> delta(c + 1);
  for (std::size_t k = 0; k < c; ++k) {
    if (!sg.contains(static_cast<std::int64_t>(k))) continue;
    delta[k] += 1;
    delta[k + 1] -= 1;
  }
  delta[c] += 1;

  std::vector<Int> gaps(c);
  for (auto g : sg.gaps()) gaps[static_cast<std::size_t>(g)] = 1;

  AlexanderData ad;
  ad.delta_poly = IntPoly(std::move(delta));
  ad.gap_poly = IntPoly(std::move(gaps));
  ad.delta = sg.delta();
  try {
    ad.q_poly = exact_div(ad.gap_poly - IntPoly::constant(ad.delta), t_minus_one());
  } catch (const DivisionError&) {
    throw ConsistencyError("alexander_poly: P(1) != delta; semigroup table is inconsistent");
  }
  return ad;
}

AlexanderData alexander_from_delta(const IntPoly& delta_poly) {
  if (delta_poly.is_zero() || delta_poly.degree() % 2 != 0)
    throw ConsistencyError("alexander_from_delta: Alexander polynomial must have even degree");
  AlexanderData ad;
  ad.delta_poly = delta_poly;
  ad.delta = delta_poly.degree() / 2;
  try {
    ad.gap_poly = exact_div(delta_poly - IntPoly::constant(1), t_minus_one());
    ad.q_poly = exact_div(ad.gap_poly - IntPoly::constant(ad.delta), t_minus_one());
  } catch (const DivisionError&) {
    throw ConsistencyError("alexander_from_delta: polynomial is not of the form 1+(t-1)delta+(t-1)^2 Q");
  }
  return ad;
}

AlexanderData alexander_of_product(std::span<const Semigroup> semigroups) {
  IntPoly prod = IntPoly::constant(1);
  for (const auto& sg : semigroups) prod *= alexander_poly(sg).delta_poly;
  return alexander_from_delta(prod);
}

std::vector<Int> c_from_q(const AlexanderData& ad, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("c_l profile needs degree d >= 3");
  std::vector<Int> c;
  c.reserve(static_cast<std::size_t>(d - 2));
  for (std::int64_t l = 0; l <= d - 3; ++l)
    c.push_back(ad.q_poly.coeff(static_cast<std::size_t>((d - 3 - l) * d)));
  return c;
}

CProfile c_profile(const Semigroup& sg, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("c_l profile needs degree d >= 3");
  CProfile cp;
  cp.from_q = c_from_q(alexander_poly(sg), d);
  for (std::int64_t l = 0; l <= d - 3; ++l) cp.counting.push_back(sg.count_up_to(l * d));
  cp.genus_valid = (sg.mu() == (d - 1) * (d - 2));
  if (cp.genus_valid) {
    for (std::size_t l = 0; l < cp.counting.size(); ++l)
      if (cp.from_q[l] != cp.counting[l])
        throw ConsistencyError("c_profile: counting and Q-coefficient forms differ at l=" +
                               std::to_string(l));
  }
  return cp;
}

std::int64_t tau_es(const MultiplicityData& md) {
  std::int64_t wall = 0;
  std::int64_t free_form = 0;
  for (const auto& r : md.runs) {
    wall += r.count * ((r.m - 1) * (r.m + 2) / 2);
    free_form += r.count * (r.m * (r.m + 1) / 2);
  }
  wall += md.inner - 1;
  free_form -= md.free_points;
  if (wall != free_form) throw ConsistencyError("tau_es: the two closed forms disagree");
  return free_form;
}

std::int64_t mbar(const MultiplicityData& md) {
  std::int64_t via_inner = md.inner - 1;
  for (const auto& r : md.runs) via_inner += r.count * (r.m - 1);
  const std::int64_t via_free = md.sum_m() - md.free_points;
  if (via_inner != via_free) throw ConsistencyError("mbar: the two closed forms disagree");
  return via_free;
}

LocalInvariants local_invariants(const BranchType& b) {
  const auto sg = semigroup_of(b);
  const auto md = multiplicity_data(b);
  LocalInvariants li;
  li.tau_es = tau_es(md);
  li.mbar = mbar(md);
  li.delta = sg.delta();
  li.mu = sg.mu();
  if (md.sum_m_m_minus_1() != 2 * li.delta)
    throw ConsistencyError("local_invariants: sum m(m-1) != 2 delta");
  if (li.mbar != li.tau_es - li.delta || li.mbar < 0)
    throw ConsistencyError("local_invariants: Mbar != tau_es - delta");
  return li;
}

// --- spectrum ----------------------------------------------------------------

std::size_t Spectrum::count_below(const Rat& bound) const {
  return static_cast<std::size_t>(
      std::lower_bound(values.begin(), values.end(), bound) - values.begin());
}

Spectrum spectrum(const BranchType& b) {
  // S_k = sum (i/a_k + j/p_k + t) / (p_{k+1}...p_g) over 0 < i < a_k,
  // 0 < j < p_k, i/a_k + j/p_k < 1, 0 <= t < p_{k+1}...p_g.
  Spectrum sp;
  for (std::size_t k = 0; k < b.pair_count(); ++k) {
    const std::int64_t a = b.splice_decorations()[k];
    const std::int64_t p = b.newton_pairs()[k].p;
    const std::int64_t tail = b.tail_product(k);
    const Int den = Int(a) * p * tail;
    for (std::int64_t j = 1; j < p; ++j) {
      for (std::int64_t i = 1; i * p + j * a < a * p; ++i) {
        const std::int64_t base = i * p + j * a;
        for (std::int64_t t = 0; t < tail; ++t)
          sp.values.emplace_back(Int(Int(base) + Int(t) * a * p), den);
      }
    }
  }
  std::sort(sp.values.begin(), sp.values.end());
  const auto sg_delta = semigroup_of(b).delta();
  if (static_cast<std::int64_t>(sp.values.size()) != sg_delta)
    throw ConsistencyError("spectrum: cardinality differs from delta");
  return sp;
}

std::vector<std::int64_t> SemicontinuityReport::failing_l() const {
  std::vector<std::int64_t> out;
  for (const auto& r : rows)
    if (!r.pass) out.push_back(r.l);
  return out;
}

SemicontinuityReport semicontinuity_check(const Spectrum& sp, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("semicontinuity check needs degree d >= 3");
  SemicontinuityReport rep;
  rep.degree = d;
  for (std::int64_t l = 2; l <= d - 1; ++l) {
    SemicontinuityRow row;
    row.l = l;
    row.count = static_cast<std::int64_t>(sp.count_below(Rat(Int(l), Int(d))));
    row.bound = (l - 2) * (l - 1) / 2;
    row.pass = row.count <= row.bound;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

SemicontinuityReport semicontinuity_check(const BranchType& b, std::int64_t d) {
  return semicontinuity_check(spectrum(b), d);
}

}  // namespace cusp
