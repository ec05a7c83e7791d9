#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cli/render.hpp"
#include "cusp/curvecheck.hpp"
#include "cusp/gradedroots.hpp"
#include "cusp/localinv.hpp"
#include "cusp/search.hpp"
#include "cusp/semidist.hpp"
#include "cusp/swtorsion.hpp"

namespace cuspcli {

using nlohmann::json;

namespace {

// --- small helpers -------------------------------------------------------------

json int_json(const cusp::Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json ints_json(const std::vector<cusp::Int>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(int_json(v));
  return a;
}

json poly_json(const cusp::IntPoly& p) {
  return {{"coefficients", ints_json(p.coefficients())}, {"text", p.str()}};
}

json pairs_json(const std::vector<cusp::NewtonPair>& pairs) {
  json a = json::array();
  for (const auto& np : pairs) a.push_back({np.p, np.q});
  return a;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts, sep);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Printer {
 public:
  explicit Printer(std::ostream& os) : os_(os) {}
  void title(const std::string& t) { os_ << t << '\n'; }
  void kv(const std::string& key, const std::string& value) {
    os_ << "  " << std::left << std::setw(30) << key << value << '\n';
  }
  void line(const std::string& text) { os_ << text << '\n'; }
  void notes(const std::vector<std::string>& ns) {
    for (const auto& n : ns) os_ << "  note: " << n << '\n';
  }

 private:
  std::ostream& os_;
};

struct Context {
  bool machine = false;
  std::istream& in;
  std::ostream& out;
};

void emit(const Context& ctx, json rec) { ctx.out << rec.dump() << '\n'; }

std::string read_input(const std::string& arg, std::istream& in) {
  if (arg.empty() || arg == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (arg.front() == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw DescriptorError("", "cannot read descriptor file " + arg.substr(1));
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }
  return arg;
}

CurveDescriptor load(const std::string& arg, std::istream& in) { return parse_descriptor(read_input(arg, in)); }

const CuspDescriptor& single_cusp(const CurveDescriptor& d, const std::string& command) {
  if (d.cusps.size() != 1) throw DescriptorError("/cusps", command + " needs exactly one cusp");
  return d.cusps.front();
}

// --- branch-invariants -----------------------------------------------------------

int cmd_branch_invariants(const Context& ctx, const std::string& arg) {
  const auto d = load(arg, ctx.in);
  std::vector<BranchRecord> recs;
  for (const auto& c : d.cusps) recs.push_back(branch_record(c));
  if (ctx.machine) {
    json cusps = json::array();
    for (const auto& r : recs) cusps.push_back(to_json(r));
    emit(ctx, {{"report", "branch-invariants"}, {"degree", d.degree}, {"cusps", cusps}});
    return exit_ok;
  }
  Printer p(ctx.out);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    p.title("cusp " + std::to_string(i));
    p.kv("newton pairs", r.newton_pairs ? format_pairs(*r.newton_pairs) : "(not given)");
    if (!r.splice_decorations.empty()) p.kv("splice decorations", join_ints(r.splice_decorations));
    p.kv("semigroup generators", "<" + join_ints(r.generators) + ">");
    p.kv("delta / mu / conductor",
         std::to_string(r.delta) + " / " + std::to_string(r.mu) + " / " + std::to_string(r.conductor));
    if (r.multiplicities) {
      std::vector<std::string> runs;
      for (const auto& run : *r.multiplicities)
        runs.push_back(std::to_string(run.m) + "x" + std::to_string(run.count));
      p.kv("multiplicity sequence", "[" + join(runs) + "]");
      p.kv("satellite / free (omega, rho)", std::to_string(*r.inner) + " / " + std::to_string(*r.outer));
      p.kv("free points L", std::to_string(*r.free_points));
      p.kv("tau^es / Mbar", std::to_string(*r.tau_es) + " / " + std::to_string(*r.mbar));
      p.kv("spectrum size", std::to_string(r.spectrum->size()));
    } else {
      p.line("  multiplicity data and spectrum need Newton pairs; equivalent pairs: " +
             format_pairs(cusp::branch_from_generators(r.generators).newton_pairs()));
    }
  }
  return exit_ok;
}

// --- curve-check -------------------------------------------------------------------

int cmd_curve_check(const Context& ctx, const std::string& arg, bool assume_stab0) {
  const auto d = load(arg, ctx.in);
  const auto spec = to_curve_spec(d, "curve-check");
  const auto gd = cusp::genus_details(spec);
  const auto g = cusp::dimensions_report(spec, assume_stab0);
  std::optional<cusp::ConjectureAReport> ca;
  if (gd.ok) ca = cusp::conjectureA_check(spec);
  const bool gate = gd.ok && g.virtdim_ok && (ca && ca->pass);

  if (ctx.machine) {
    json rec = {{"report", "curve-check"},
                {"degree", d.degree},
                {"genus", {{"target", gd.target}, {"from_semigroups", gd.from_semigroups},
                           {"from_multiplicities", gd.from_multiplicities}, {"ok", gd.ok}}},
                {"stab_dim", g.stab_dim},
                {"stab_source", cusp::to_string(g.stab_source)},
                {"stab_assumed", g.stab_assumed()},
                {"kappa_bar", cusp::to_string(g.kappa_bar)},
                {"tau_es_total", g.tau_es_total},
                {"sum_mbar", g.sum_mbar},
                {"expdim", g.expdim},
                {"virtdim", g.virtdim},
                {"virtdim_from_expdim", g.virtdim_from_expdim},
                {"virtdim_from_multiplicities", g.virtdim_from_multiplicities},
                {"virtdim_from_cbar", g.virtdim_from_cbar},
                {"cbar_squared", g.cbar_sq},
                {"chi_theta", g.chi_theta},
                {"identities_ok", g.identities_ok},
                {"orevkov_ok", g.orevkov_ok},
                {"virtdim_nonneg", g.virtdim_ok},
                {"notes", g.notes},
                {"gate_passed", gate}};
    if (ca)
      rec["conjecture_a"] = {{"c", ints_json(ca->c)}, {"n", ints_json(ca->n)}, {"pass", ca->pass}};
    else
      rec["conjecture_a"] = nullptr;
    emit(ctx, rec);
    return gate ? exit_ok : exit_gate_failed;
  }
  Printer p(ctx.out);
  p.title("curve of degree " + std::to_string(d.degree) + " with " + std::to_string(d.cusps.size()) + " cusp(s)");
  p.kv("genus formula", std::to_string(gd.from_semigroups) + " vs (d-1)(d-2) = " + std::to_string(gd.target) +
                            (gd.ok ? "  ok" : "  FAILS"));
  p.kv("dim Stab", std::to_string(g.stab_dim) + " (" + cusp::to_string(g.stab_source) + ")");
  p.kv("kappa-bar", cusp::to_string(g.kappa_bar));
  p.kv("sum tau^es / sum Mbar", std::to_string(g.tau_es_total) + " / " + std::to_string(g.sum_mbar));
  p.kv("expdim", std::to_string(g.expdim));
  p.kv("virtdim", std::to_string(g.virtdim) + (g.virtdim_ok ? "" : "  NEGATIVE"));
  p.kv("virtdim (other forms)", std::to_string(g.virtdim_from_expdim) + ", " +
                                    std::to_string(g.virtdim_from_multiplicities) + ", " +
                                    std::to_string(g.virtdim_from_cbar));
  p.kv("Cbar^2", std::to_string(g.cbar_sq));
  p.kv("chi(Theta)", std::to_string(g.chi_theta));
  p.kv("identities agree", yes_no(g.identities_ok));
  p.kv("sum Mbar <= 3d - 9", yes_no(g.orevkov_ok));
  if (ca) {
    p.kv("c_l", join_ints(ca->c));
    p.kv("n_l", join_ints(ca->n));
    p.kv("n_l <= 0", yes_no(ca->pass));
  }
  p.notes(g.notes);
  p.kv("gate", gate ? "passed" : "FAILED");
  return gate ? exit_ok : exit_gate_failed;
}

// --- dp-check ------------------------------------------------------------------------

int cmd_dp_check(const Context& ctx, const std::string& arg) {
  const auto d = load(arg, ctx.in);
  const auto sg = cusp_semigroup(single_cusp(d, "dp-check"));
  const auto rep = cusp::distribution_report(sg, d.degree);
  if (ctx.machine) {
    json table = json::array();
    for (const auto& row : rep.interval_table)
      table.push_back({{"l", row.l}, {"count", row.count}, {"expected", row.expected}});
    json rec = {{"report", "dp-check"},
                {"degree", d.degree},
                {"generators", sg.generators()},
                {"genus_valid", rep.genus_valid},
                {"dp_holds", rep.dp_holds},
                {"d_poly", poly_json(rep.d_poly)},
                {"intervals", table},
                {"notes", rep.notes}};
    if (rep.genus_valid) {
      rec["n_poly"] = poly_json(rep.n_poly);
      rec["r_poly"] = poly_json(rep.r_poly);
      rec["r_at_one"] = int_json(rep.r_at_one);
      rec["r_chain_ok"] = rep.r_chain_ok;
      rec["r_at_one_ok"] = rep.r_at_one_ok;
    }
    emit(ctx, rec);
    return rep.dp_holds ? exit_ok : exit_gate_failed;
  }
  Printer p(ctx.out);
  p.title("distribution property, degree " + std::to_string(d.degree) + ", semigroup <" +
          join_ints(sg.generators()) + ">");
  p.line("      l  count  min(l+1,d)");
  for (const auto& row : rep.interval_table) {
    std::ostringstream os;
    os << std::setw(7) << row.l << std::setw(7) << row.count << std::setw(12) << row.expected
       << (row.count == row.expected ? "" : "   <-");
    p.line(os.str());
  }
  p.kv("D(t)", rep.d_poly.str());
  if (rep.genus_valid) {
    p.kv("N(t)", rep.n_poly.str());
    p.kv("R(t)", rep.r_poly.str());
    p.kv("R(1)", rep.r_at_one.get_str());
    p.kv("R = N(t^d) = D(t^d)/(1-t^d)", yes_no(rep.r_chain_ok));
    p.kv("R(1) = sw - (K^2+#)/8 - p_g", yes_no(rep.r_at_one_ok));
  }
  p.notes(rep.notes);
  p.kv("DP", rep.dp_holds ? "holds" : "FAILS");
  return rep.dp_holds ? exit_ok : exit_gate_failed;
}

// --- sw ----------------------------------------------------------------------------------

int cmd_sw(const Context& ctx, const std::string& arg) {
  const auto d = load(arg, ctx.in);
  const auto sg = cusp_semigroup(single_cusp(d, "sw"));
  const auto r = cusp::sw_both_ways(sg, d.degree);
  const auto si = cusp::superisolated_invariants(d.degree);
  std::optional<cusp::Rat> from_tau;
  if (r.genus_valid) from_tau = cusp::sw_from_root(cusp::tau_for_surgery(sg, d.degree), si.k2_plus_sharp);
  if (ctx.machine) {
    emit(ctx, {{"report", "sw"},
               {"degree", d.degree},
               {"generators", sg.generators()},
               {"h1_order", r.h1_order},
               {"torsion", r.torsion.str()},
               {"casson_walker", r.casson_walker.str()},
               {"sw_surgery", r.sw_surgery.str()},
               {"sw_root", r.sw_root.str()},
               {"sw_from_tau", from_tau ? json(from_tau->str()) : json(nullptr)},
               {"k2_plus_sharp", int_json(si.k2_plus_sharp)},
               {"p_g", int_json(si.p_g)},
               {"genus_valid", r.genus_valid},
               {"agree", r.agree}});
    return exit_ok;
  }
  Printer p(ctx.out);
  p.title("Seiberg-Witten invariant of S^3_{-" + std::to_string(d.degree) + "}(K), semigroup <" +
          join_ints(sg.generators()) + ">");
  p.kv("|H_1|", std::to_string(r.h1_order));
  p.kv("torsion", r.torsion.str());
  p.kv("Casson-Walker", r.casson_walker.str());
  p.kv("sw (torsion - lambda/|H_1|)", r.sw_surgery.str());
  p.kv("sw ((K^2+#)/8 + sum c_l)", r.sw_root.str());
  if (from_tau) p.kv("sw (graded root)", from_tau->str());
  p.kv("K^2 + #", si.k2_plus_sharp.get_str());
  p.kv("p_g", si.p_g.get_str());
  p.kv("routes agree", yes_no(r.agree));
  if (!r.genus_valid) p.line("  note: genus formula fails; the two routes need not agree");
  return exit_ok;
}

// --- spectrum-check -------------------------------------------------------------------------

int cmd_spectrum_check(const Context& ctx, const std::string& arg) {
  const auto d = load(arg, ctx.in);
  cusp::Spectrum merged;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < d.cusps.size(); ++i) {
    const auto sp = cusp::spectrum(cusp_branch(d, i, "spectrum-check"));
    sizes.push_back(sp.values.size());
    merged.values.insert(merged.values.end(), sp.values.begin(), sp.values.end());
  }
  std::sort(merged.values.begin(), merged.values.end());
  const auto rep = cusp::semicontinuity_check(merged, d.degree);
  if (ctx.machine) {
    json rows = json::array();
    for (const auto& row : rep.rows)
      rows.push_back({{"l", row.l}, {"count", row.count}, {"bound", row.bound}, {"pass", row.pass}});
    emit(ctx, {{"report", "spectrum-check"},
               {"degree", d.degree},
               {"spectrum_sizes", sizes},
               {"rows", rows},
               {"failing_l", rep.failing_l()},
               {"pass", rep.pass}});
    return rep.pass ? exit_ok : exit_gate_failed;
  }
  Printer p(ctx.out);
  p.title("spectrum semicontinuity against x^d + y^d, d = " + std::to_string(d.degree));
  p.kv("spectrum sizes (= delta)", join_ints(sizes));
  p.line("      l  #{a < l/d}  (l-2)(l-1)/2");
  for (const auto& row : rep.rows) {
    std::ostringstream os;
    os << std::setw(7) << row.l << std::setw(12) << row.count << std::setw(14) << row.bound
       << (row.pass ? "" : "   VIOLATED");
    p.line(os.str());
  }
  p.kv("semicontinuity", rep.pass ? "holds" : "FAILS at l = " + join_ints(rep.failing_l()));
  return rep.pass ? exit_ok : exit_gate_failed;
}

// --- graded roots ---------------------------------------------------------------------------

struct RootSource {
  std::string label;
  cusp::TauFunction tau;
  std::optional<cusp::Int> k2_plus_sharp;
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

RootSource surgery_source(const std::string& text, bool generators) {
  const auto s = parse_surgery_spec(text);
  cusp::Semigroup sg = [&] {
    if (generators) return cusp::semigroup_of(cusp::branch_from_generators(s.numbers));
    if (s.numbers.size() % 2 != 0) throw std::invalid_argument("--surgery " + text + ": odd number of pair entries");
    std::vector<cusp::NewtonPair> pairs;
    for (std::size_t k = 0; k < s.numbers.size(); k += 2) pairs.push_back({s.numbers[k], s.numbers[k + 1]});
    return cusp::semigroup_of(cusp::branch_from_newton_pairs(pairs));
  }();
  return {"surgery " + text, cusp::tau_for_surgery(sg, s.degree),
          cusp::superisolated_invariants(s.degree).k2_plus_sharp};
}

RootSource brieskorn_source(std::int64_t d) {
  return {"brieskorn " + std::to_string(d), cusp::tau_for_brieskorn(d), cusp::brieskorn_k2_plus_sharp(d)};
}

RootSource tau_source(const std::string& text) {
  return {"tau " + text, cusp::TauFunction{parse_int_list(text, "--tau")}, std::nullopt};
}

struct RootOptions {
  std::vector<std::string> surgery;
  std::vector<std::string> surgery_gens;
  std::vector<std::int64_t> brieskorn;
  std::vector<std::string> tau;
  std::string descriptor;
  std::string render = "both";
};

std::vector<RootSource> collect_sources(const Context& ctx, const RootOptions& o) {
  std::vector<RootSource> out;
  if (!o.descriptor.empty()) {
    const auto d = load(o.descriptor, ctx.in);
    const auto sg = cusp_semigroup(single_cusp(d, "graded-root"));
    out.push_back({"surgery (descriptor)", cusp::tau_for_surgery(sg, d.degree),
                   cusp::superisolated_invariants(d.degree).k2_plus_sharp});
  }
  for (const auto& s : o.surgery) out.push_back(surgery_source(s, false));
  for (const auto& s : o.surgery_gens) out.push_back(surgery_source(s, true));
  for (auto d : o.brieskorn) out.push_back(brieskorn_source(d));
  for (const auto& t : o.tau) out.push_back(tau_source(t));
  return out;
}

json ranks_json(const cusp::GradedRoot& r, const std::optional<cusp::Int>& k2) {
  const auto ranks = cusp::hplus_ranks(r, 2 * r.min_chi(), 2 * r.stem_top() + 2);
  json unshifted = json::array();
  for (const auto& [h, rank] : ranks.ranks)
    if (rank) unshifted.push_back({h, rank});
  json rec = {{"unshifted", unshifted}};
  if (k2) {
    json shifted = json::array();
    for (const auto& [h, rank] : cusp::shifted_ranks(ranks, *k2)) shifted.push_back({h.str(), rank});
    rec["shifted"] = shifted;
    rec["k2_plus_sharp"] = int_json(*k2);
  }
  return rec;
}

int cmd_graded_root(const Context& ctx, const RootOptions& o) {
  const auto sources = collect_sources(ctx, o);
  if (sources.size() != 1)
    throw std::invalid_argument("graded-root needs exactly one of a descriptor, --surgery, --surgery-gens, "
                                "--brieskorn or --tau");
  const auto& src = sources.front();
  const auto root = cusp::root_from_tau(src.tau);
  const bool axioms = cusp::satisfies_root_axioms(root);
  if (ctx.machine) {
    json vertices = json::array();
    for (std::size_t v = 0; v < root.vertices().size(); ++v)
      vertices.push_back({{"id", v}, {"chi", root.vertices()[v].chi}, {"parent", root.vertices()[v].parent}});
    emit(ctx, {{"report", "graded-root"},
               {"source", src.label},
               {"tau", src.tau.values},
               {"min_chi", root.min_chi()},
               {"stem_top", root.stem_top()},
               {"vertices", vertices},
               {"axioms_ok", axioms},
               {"ranks", ranks_json(root, src.k2_plus_sharp)},
               {"dot", render_dot(root)}});
    return axioms ? exit_ok : exit_internal_error;
  }
  Printer p(ctx.out);
  p.title("graded root of " + src.label);
  p.kv("tau", "[" + join_ints(src.tau.values) + "]");
  p.kv("axioms", axioms ? "ok" : "VIOLATED");
  if (o.render == "ascii" || o.render == "both") ctx.out << render_ascii(root);
  if (o.render == "dot" || o.render == "both") ctx.out << render_dot(root);
  return axioms ? exit_ok : exit_internal_error;
}

int cmd_compare_roots(const Context& ctx, const RootOptions& o) {
  const auto sources = collect_sources(ctx, o);
  if (sources.size() != 2)
    throw std::invalid_argument("compare-roots needs exactly two roots (from --surgery, --surgery-gens, "
                                "--brieskorn, --tau), got " + std::to_string(sources.size()));
  const auto a = cusp::root_from_tau(sources[0].tau);
  const auto b = cusp::root_from_tau(sources[1].tau);
  const bool iso = cusp::roots_isomorphic(a, b);
  const std::int64_t lo = 2 * std::min(a.min_chi(), b.min_chi());
  const std::int64_t hi = 2 * std::max(a.stem_top(), b.stem_top()) + 2;
  const bool ranks_equal = cusp::hplus_ranks(a, lo, hi).ranks == cusp::hplus_ranks(b, lo, hi).ranks;
  if (ctx.machine) {
    json roots = json::array();
    for (const auto& s : sources) roots.push_back({{"source", s.label}, {"tau", s.tau.values}});
    emit(ctx, {{"report", "compare-roots"}, {"roots", roots}, {"isomorphic", iso}, {"ranks_equal", ranks_equal}});
    return iso ? exit_ok : exit_gate_failed;
  }
  Printer p(ctx.out);
  p.title("comparing graded roots");
  for (const auto& s : sources) p.kv(s.label, "[" + join_ints(s.tau.values) + "]");
  p.kv("unshifted ranks equal", yes_no(ranks_equal));
  p.kv("isomorphic", yes_no(iso));
  return iso ? exit_ok : exit_gate_failed;
}

// --- search and pipeline --------------------------------------------------------------------

json verdict_json(const cusp::CandidateVerdict& v) {
  return {{"degree", v.degree},
          {"newton_pairs", pairs_json(v.newton_pairs)},
          {"generators", v.generators},
          {"tag", v.tag},
          {"genus", v.genus},
          {"dp", v.dp},
          {"d_poly", poly_json(v.d_poly)},
          {"semicontinuity", v.semicontinuity},
          {"semicontinuity_failing_l", v.semicontinuity_failing_l},
          {"virtdim", v.virtdim},
          {"virtdim_nonneg", v.virtdim_nonneg},
          {"stab_dim", v.stab_dim},
          {"stab_source", cusp::to_string(v.stab_source)},
          {"conjecture_a", v.conj_a},
          {"refuted", v.refuted()},
          {"notes", v.notes}};
}

std::string verdict_row(const cusp::CandidateVerdict& v) {
  std::ostringstream os;
  const auto& np = v.newton_pairs.front();
  os << std::setw(4) << v.degree << std::setw(6) << np.p << std::setw(6) << np.q << std::setw(10) << v.tag
     << std::setw(7) << (v.genus ? "ok" : "x") << std::setw(5) << (v.dp ? "ok" : "x") << std::setw(7)
     << (v.semicontinuity ? "ok" : "x") << std::setw(9) << v.virtdim << std::setw(7) << (v.conj_a ? "ok" : "x");
  return os.str();
}

int cmd_search(const Context& ctx, std::int64_t d_max, unsigned workers, bool all) {
  if (d_max < 3) throw std::invalid_argument("--d-max must be at least 3");
  const auto verdicts = cusp::enumerate_one_pair(d_max, workers);
  std::vector<const cusp::CandidateVerdict*> unlisted, listed_failing;
  std::size_t dp_pass = 0;
  for (const auto& v : verdicts) {
    if (v.dp) ++dp_pass;
    if (v.dp && v.tag == "unlisted") unlisted.push_back(&v);
    if (v.tag != "unlisted" && v.refuted()) listed_failing.push_back(&v);
  }
  if (ctx.machine) {
    json vs = json::array();
    for (const auto& v : verdicts)
      if (all || v.dp) vs.push_back(verdict_json(v));
    json flagged = json::array();
    for (auto* v : unlisted) flagged.push_back({v->degree, v->newton_pairs[0].p, v->newton_pairs[0].q});
    emit(ctx, {{"report", "search"},
               {"d_max", d_max},
               {"candidates", verdicts.size()},
               {"dp_passing", dp_pass},
               {"unlisted_dp_passing", flagged},
               {"listed_refuted", listed_failing.size()},
               {"verdicts", vs}});
    return exit_ok;
  }
  Printer p(ctx.out);
  p.title("one-Puiseux-pair candidates (a-1)(b-1) = (d-1)(d-2), 3 <= d <= " + std::to_string(d_max));
  p.line("   d     a     b       tag  genus   DP  semic  virtdim  n<=0");
  for (const auto& v : verdicts)
    if (all || v.dp) p.line(verdict_row(v));
  p.kv("candidates", std::to_string(verdicts.size()));
  p.kv("passing DP", std::to_string(dp_pass));
  for (auto* v : unlisted)
    p.line("  WARNING: DP-passing triple outside the realizable list: (" + std::to_string(v->degree) + ", " +
           std::to_string(v->newton_pairs[0].p) + ", " + std::to_string(v->newton_pairs[0].q) + ")");
  for (auto* v : listed_failing)
    p.line("  WARNING: listed triple refuted by a filter: (" + std::to_string(v->degree) + ", " +
           std::to_string(v->newton_pairs[0].p) + ", " + std::to_string(v->newton_pairs[0].q) + ")");
  if (unlisted.empty()) p.line("  every DP-passing triple is on the realizable list");
  return exit_ok;
}

int cmd_pipeline(const Context& ctx, const std::string& arg) {
  const auto d = load(arg, ctx.in);
  single_cusp(d, "pipeline");
  const auto spec = to_curve_spec(d, "pipeline");
  const auto v = cusp::candidate_pipeline(spec);
  const int code = v.refuted() ? exit_gate_failed : exit_ok;
  if (ctx.machine) {
    auto rec = verdict_json(v);
    rec["report"] = "pipeline";
    json rows = json::array();
    for (const auto& row : v.semicontinuity_report.rows)
      rows.push_back({{"l", row.l}, {"count", row.count}, {"bound", row.bound}, {"pass", row.pass}});
    rec["semicontinuity_rows"] = rows;
    emit(ctx, rec);
    return code;
  }
  Printer p(ctx.out);
  p.title("candidate: degree " + std::to_string(v.degree) + ", Newton pairs " + format_pairs(v.newton_pairs) +
          ", semigroup <" + join_ints(v.generators) + ">");
  p.kv("classification", v.tag);
  p.kv("genus formula", v.genus ? "ok" : "FAILS");
  p.kv("distribution property", v.dp ? "holds" : "FAILS, D = " + v.d_poly.str());
  std::string semi = "holds";
  if (!v.semicontinuity) {
    semi = "FAILS at l =";
    for (const auto& row : v.semicontinuity_report.rows)
      if (!row.pass)
        semi += " " + std::to_string(row.l) + " (" + std::to_string(row.count) + " > " + std::to_string(row.bound) +
                ")";
  }
  p.kv("spectrum semicontinuity", semi);
  p.kv("virtdim", std::to_string(v.virtdim) + " with dim Stab = " + std::to_string(v.stab_dim) + " (" +
                      cusp::to_string(v.stab_source) + ")");
  p.kv("n_l <= 0", yes_no(v.conj_a));
  p.notes(v.notes);
  p.kv("verdict", v.refuted() ? "REFUTED: no such curve" : "not excluded by any filter");
  return code;
}

}  // namespace

// --- records -----------------------------------------------------------------------------

BranchRecord branch_record(const CuspDescriptor& c) {
  BranchRecord r;
  const auto sg = cusp_semigroup(c);
  r.generators = sg.generators();
  r.delta = sg.delta();
  r.mu = sg.mu();
  r.conductor = sg.conductor();
  if (c.newton_pairs) {
    const auto b = cusp::branch_from_newton_pairs(*c.newton_pairs);
    r.newton_pairs = b.newton_pairs();
    r.splice_decorations = b.splice_decorations();
    const auto md = cusp::multiplicity_data(b);
    const auto li = cusp::local_invariants(b);
    r.multiplicities = md.runs;
    r.inner = md.inner;
    r.outer = md.outer;
    r.free_points = md.free_points;
    r.tau_es = li.tau_es;
    r.mbar = li.mbar;
    std::vector<std::string> sp;
    for (const auto& a : cusp::spectrum(b).values) sp.push_back(a.str());
    r.spectrum = std::move(sp);
  }
  return r;
}

json to_json(const BranchRecord& r) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  json runs = nullptr;
  if (r.multiplicities) {
    runs = json::array();
    for (const auto& run : *r.multiplicities) runs.push_back({run.m, run.count});
  }
  return {{"newton_pairs", r.newton_pairs ? pairs_json(*r.newton_pairs) : json(nullptr)},
          {"splice_decorations", r.splice_decorations},
          {"generators", r.generators},
          {"delta", r.delta},
          {"mu", r.mu},
          {"conductor", r.conductor},
          {"multiplicities", runs},
          {"inner", opt(r.inner)},
          {"outer", opt(r.outer)},
          {"free_points", opt(r.free_points)},
          {"tau_es", opt(r.tau_es)},
          {"mbar", opt(r.mbar)},
          {"spectrum", opt(r.spectrum)}};
}

BranchRecord branch_record_from_json(const json& j) {
  auto opt_int = [&j](const char* key) -> std::optional<std::int64_t> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
  };
  BranchRecord r;
  if (!j.at("newton_pairs").is_null()) {
    std::vector<cusp::NewtonPair> pairs;
    for (const auto& np : j.at("newton_pairs")) pairs.push_back({np.at(0).get<std::int64_t>(), np.at(1).get<std::int64_t>()});
    r.newton_pairs = std::move(pairs);
  }
  r.splice_decorations = j.at("splice_decorations").get<std::vector<std::int64_t>>();
  r.generators = j.at("generators").get<std::vector<std::int64_t>>();
  r.delta = j.at("delta").get<std::int64_t>();
  r.mu = j.at("mu").get<std::int64_t>();
  r.conductor = j.at("conductor").get<std::int64_t>();
  if (!j.at("multiplicities").is_null()) {
    std::vector<cusp::MultiplicityRun> runs;
    for (const auto& run : j.at("multiplicities")) runs.push_back({run.at(0).get<std::int64_t>(), run.at(1).get<std::int64_t>()});
    r.multiplicities = std::move(runs);
  }
  r.inner = opt_int("inner");
  r.outer = opt_int("outer");
  r.free_points = opt_int("free_points");
  r.tau_es = opt_int("tau_es");
  r.mbar = opt_int("mbar");
  if (!j.at("spectrum").is_null()) r.spectrum = j.at("spectrum").get<std::vector<std::string>>();
  return r;
}

SurgerySpec parse_surgery_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected d:n1,n2,... but got '" + text + "'");
  SurgerySpec s;
  const auto head = parse_int_list(text.substr(0, colon), "degree");
  if (head.size() != 1) throw std::invalid_argument("expected a single degree before ':' in '" + text + "'");
  s.degree = head.front();
  s.numbers = parse_int_list(text.substr(colon + 1), "'" + text + "'");
  return s;
}

// --- entry point -----------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and obstructions for rational unicuspidal plane curves", "cuspcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "human (default) or machine (one JSON object per report)")
      ->check(CLI::IsMember({"human", "machine"}));

  const std::string desc_help = "curve descriptor: JSON text, @file, or - / omitted for stdin";
  std::string descriptor;
  bool assume_stab0 = false;
  std::int64_t d_max = 20;
  unsigned workers = 1;
  bool all = false;
  RootOptions roots;

  auto* bi = app.add_subcommand("branch-invariants", "semigroup, multiplicities, codimensions, spectrum per cusp");
  auto* cc = app.add_subcommand("curve-check", "genus formula, dimension identities, n_l <= 0 (gate)");
  auto* dp = app.add_subcommand("dp-check", "semigroup distribution property with D, N, R polynomials (gate)");
  auto* sw = app.add_subcommand("sw", "Seiberg-Witten invariant of the link, computed two ways");
  auto* sc = app.add_subcommand("spectrum-check", "spectrum semicontinuity against x^d + y^d (gate)");
  auto* gr = app.add_subcommand("graded-root", "graded root: ASCII levels and DOT");
  auto* cr = app.add_subcommand("compare-roots", "isomorphism of two graded roots (gate)");
  auto* se = app.add_subcommand("search", "one-Puiseux-pair enumeration with every filter");
  auto* pl = app.add_subcommand("pipeline", "all filters on one candidate curve (gate)");

  for (auto* sub : {bi, cc, dp, sw, sc, pl}) sub->add_option("descriptor", descriptor, desc_help);
  cc->add_flag("--assume-stab0", assume_stab0, "take dim Stab = 0 when nothing else determines it");
  gr->add_option("descriptor", roots.descriptor, desc_help + " (unicuspidal)");
  for (auto* sub : {gr, cr}) {
    sub->add_option("--surgery", roots.surgery, "S^3_{-d}(K) as d:p1,q1[,p2,q2...] (Newton pairs)")
        ->allow_extra_args(false);
    sub->add_option("--surgery-gens", roots.surgery_gens, "S^3_{-d}(K) as d:g0,g1,... (semigroup generators)")
        ->allow_extra_args(false);
    sub->add_option("--brieskorn", roots.brieskorn, "Sigma(d, d, d+1)")->allow_extra_args(false);
    sub->add_option("--tau", roots.tau, "explicit tau values, comma separated (use --tau=-1,0 for a leading minus)")
        ->allow_extra_args(false);
  }
  gr->add_option("--render", roots.render, "ascii, dot or both")->check(CLI::IsMember({"ascii", "dot", "both"}));
  se->add_option("--d-max", d_max, "largest degree to enumerate");
  se->add_option("--workers", workers, "worker threads (0 = hardware concurrency)");
  se->add_flag("--all", all, "list every candidate, not only DP-passing ones");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }

  Context ctx{format == "machine", in, out};
  try {
    if (*bi) return cmd_branch_invariants(ctx, descriptor);
    if (*cc) return cmd_curve_check(ctx, descriptor, assume_stab0);
    if (*dp) return cmd_dp_check(ctx, descriptor);
    if (*sw) return cmd_sw(ctx, descriptor);
    if (*sc) return cmd_spectrum_check(ctx, descriptor);
    if (*gr) return cmd_graded_root(ctx, roots);
    if (*cr) return cmd_compare_roots(ctx, roots);
    if (*se) return cmd_search(ctx, d_max, workers, all);
    if (*pl) return cmd_pipeline(ctx, descriptor);
  } catch (const DescriptorError& e) {
    err << "error: invalid descriptor at " << (e.pointer().empty() ? "/" : e.pointer()) << ": "
        << std::string(e.what()).substr(e.pointer().size() + 2) << '\n';
    return exit_invalid_input;
  } catch (const cusp::StabUnknown& e) {
    err << "error: " << e.what() << " (pass --assume-stab0)\n";
    return exit_invalid_input;
  } catch (const cusp::ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal_error;
  }
  return exit_invalid_input;
}

}  // namespace cuspcli
