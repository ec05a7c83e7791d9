#include "cusp/curvecheck.hpp"

#include <numeric>

#include "cusp/localinv.hpp"

namespace cusp {

std::string to_string(KappaBar k) {
  switch (k) {
    case KappaBar::minus_infinity: return "-inf";
    case KappaBar::zero: return "0";
    case KappaBar::one: return "1";
    case KappaBar::two: return "2";
    case KappaBar::unknown: return "unknown";
  }
  return "unknown";
}

KappaBar parse_kappa_bar(const std::string& text) {
  if (text == "-inf" || text == "-infinity" || text == "-oo") return KappaBar::minus_infinity;
  if (text == "0") return KappaBar::zero;
  if (text == "1") return KappaBar::one;
  if (text == "2") return KappaBar::two;
  if (text == "unknown") return KappaBar::unknown;
  throw std::invalid_argument("kappa_bar must be one of -inf, 0, 1, 2, unknown; got '" + text + "'");
}

std::string to_string(StabSource s) {
  switch (s) {
    case StabSource::declared: return "declared";
    case StabSource::derived: return "derived";
    case StabSource::assumed: return "assumed";
  }
  return "assumed";
}

void validate(const CurveSpec& c) {
  if (c.degree < 3) throw std::invalid_argument("degree must be >= 3");
  if (c.cusps.empty()) throw std::invalid_argument("a cuspidal curve needs at least one cusp");
  if (c.stab_dim && (*c.stab_dim < 0 || *c.stab_dim > 6))
    throw std::invalid_argument("stab_dim must lie in 0..6");
}

GenusDetails genus_details(const CurveSpec& c) {
  GenusDetails g;
  g.target = (c.degree - 1) * (c.degree - 2);
  for (const auto& b : c.cusps) {
    g.from_semigroups += semigroup_of(b).mu();
    g.from_multiplicities += multiplicity_data(b).sum_m_m_minus_1();
  }
  if (g.from_semigroups != g.from_multiplicities)
    throw ConsistencyError("genus_check: semigroup and multiplicity forms of 2 delta differ");
  g.ok = g.from_semigroups == g.target;
  return g;
}

bool genus_check(const CurveSpec& c) { return genus_details(c).ok; }

KappaStabHints kappa_stab_hints(const CurveSpec& c) {
  KappaStabHints h;
  const auto nu = c.cusps.size();

  if (c.kappa_bar && *c.kappa_bar != KappaBar::unknown) {
    h.kappa_bar = *c.kappa_bar;
    h.notes.push_back("kappa-bar declared as " + to_string(*c.kappa_bar));
    if (*c.kappa_bar == KappaBar::zero)
      h.notes.push_back("kappa-bar = 0 does not occur for rational cuspidal curves");
  }

  if (nu >= 3) {
    if (h.kappa_bar != KappaBar::unknown && h.kappa_bar != KappaBar::two)
      h.notes.push_back("declared kappa-bar conflicts with >= 3 cusps (which forces kappa-bar = 2)");
    h.kappa_bar = KappaBar::two;
    h.notes.push_back("three or more cusps force kappa-bar = 2");
  } else if (nu == 2 && h.kappa_bar == KappaBar::unknown) {
    h.notes.push_back("two cusps: kappa-bar is 1 or 2");
  }

  if (c.pencil) {
    const auto [pd, a] = *c.pencil;
    const bool well_formed = pd == c.degree && pd >= 3 && a > 0 && a < pd && std::gcd(pd, a) == 1;
    const bool unicuspidal_member = (a == 1 || a == pd - 1);
    const std::size_t expected_nu = unicuspidal_member ? 1 : 2;
    if (!well_formed) {
      h.notes.push_back("pencil declaration ignored: need (d,a) with d = degree, 0 < a < d, gcd(d,a) = 1");
    } else if (expected_nu != nu) {
      h.notes.push_back("pencil declaration ignored: its generic member has " +
                        std::to_string(expected_nu) + " cusp(s)");
    } else if (h.kappa_bar == KappaBar::two) {
      h.notes.push_back("pencil declaration ignored: incompatible with kappa-bar = 2");
    } else {
      h.stab_dim = 1;
      h.kappa_bar = unicuspidal_member ? KappaBar::minus_infinity : KappaBar::one;
      h.notes.push_back("pencil member y^d + z^a x^(d-a): dim Stab = 1");
    }
  }

  if (!h.stab_dim && h.kappa_bar == KappaBar::two) {
    h.stab_dim = 0;
    h.notes.push_back("kappa-bar = 2 forces dim Stab = 0");
  }
  return h;
}

GlobalReport dimensions_report(const CurveSpec& c, bool allow_assumed_stab) {
  validate(c);
  GlobalReport r;
  r.degree = c.degree;
  const std::int64_t d = c.degree;

  const auto hints = kappa_stab_hints(c);
  r.kappa_bar = hints.kappa_bar;
  r.notes = hints.notes;
  if (c.stab_dim) {
    r.stab_dim = *c.stab_dim;
    r.stab_source = StabSource::declared;
    if (hints.stab_dim && *hints.stab_dim != *c.stab_dim)
      r.notes.push_back("declared stab_dim differs from the value implied by the hints");
  } else if (hints.stab_dim) {
    r.stab_dim = *hints.stab_dim;
    r.stab_source = StabSource::derived;
  } else if (allow_assumed_stab) {
    r.stab_dim = 0;
    r.stab_source = StabSource::assumed;
    r.notes.push_back("dim Stab not determined; assumed 0");
  } else {
    throw StabUnknown("stabilizer dimension unresolved: declare stab_dim, kappa_bar or pencil, or allow the default 0");
  }

  for (const auto& b : c.cusps) {
    const auto md = multiplicity_data(b);
    const auto li = local_invariants(b);
    r.tau_es_total += li.tau_es;
    r.sum_mbar += li.mbar;
    r.sum_free_points += md.free_points;
    r.sum_m += md.sum_m();
    r.sum_m_squared += md.sum_m_squared();
  }
  r.genus_ok = genus_check(c);

  const std::int64_t s = r.stab_dim;
  r.expdim = d * (d + 3) / 2 - r.tau_es_total;
  r.virtdim_from_expdim = r.expdim - (8 - s);
  r.virtdim_from_multiplicities = 3 * d - 9 - r.sum_m + r.sum_free_points + s;
  r.virtdim = 3 * d - 9 - r.sum_mbar + s;
  r.cbar_sq = d * d - r.sum_m_squared;
  r.virtdim_from_cbar = r.cbar_sq - 7 + r.sum_free_points + s;
  r.chi_theta = -3 * (d - 3) + r.sum_mbar;

  r.identities_ok = r.virtdim == r.virtdim_from_expdim &&
                    r.virtdim == r.virtdim_from_multiplicities &&
                    r.virtdim == r.virtdim_from_cbar && r.chi_theta == -r.virtdim + s;
  if (!r.identities_ok)
    r.notes.push_back(r.genus_ok ? "virtual dimension formulas disagree"
                                 : "virtual dimension formulas disagree: input fails the genus formula");
  r.orevkov_ok = r.sum_mbar <= 3 * d - 9;
  r.virtdim_ok = r.virtdim >= 0;
  if (r.chi_theta == 0 && r.kappa_bar == KappaBar::two)
    r.notes.push_back("chi(Theta_V<D>) = 0 with kappa-bar = 2: Cremona-equivalent to a line");
  return r;
}

ConjectureAReport conjectureA_check(const CurveSpec& c) {
  validate(c);
  const auto g = genus_details(c);
  if (!g.ok)
    throw GenusError("genus formula fails: sum 2 delta = " + std::to_string(g.from_semigroups) +
                     " but (d-1)(d-2) = " + std::to_string(g.target));
  std::vector<Semigroup> sgs;
  for (const auto& b : c.cusps) sgs.push_back(semigroup_of(b));
  const auto ad = alexander_of_product(sgs);

  ConjectureAReport rep;
  rep.degree = c.degree;
  rep.c = c_from_q(ad, c.degree);
  rep.pass = true;
  for (std::size_t l = 0; l < rep.c.size(); ++l) {
    const auto ll = static_cast<long>(l);
    rep.n.push_back(Int(rep.c[l] - (ll + 1) * (ll + 2) / 2));
    if (rep.n.back() > 0) rep.pass = false;
  }
  const std::size_t len = rep.n.size();
  for (std::size_t l = 0; l < len; ++l)
    if (rep.n[l] != rep.n[len - 1 - l]) throw ConsistencyError("conjectureA_check: n_l not symmetric");
  if (rep.n.front() != 0) throw ConsistencyError("conjectureA_check: n_0 != 0");
  return rep;
}

SuperisolatedInvariants superisolated_invariants(std::int64_t d) {
  if (d < 3) throw std::invalid_argument("superisolated invariants need d >= 3");
  const Int D(d);
  SuperisolatedInvariants s;
  s.p_g = D * (D - 1) * (D - 2) / 6;
  s.k2_plus_sharp = 1 - D * (D - 2) * (D - 2);
  s.sigma_f = -8 * s.p_g - s.k2_plus_sharp;
  return s;
}

}  // namespace cusp
