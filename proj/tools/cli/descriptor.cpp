#include "cli/descriptor.hpp"

#include <json.hpp>

namespace cuspcli {

using nlohmann::json;

namespace {

std::int64_t as_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw DescriptorError(ptr, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw DescriptorError(ptr, "expected an array, got " + j.dump());
  return j;
}

CuspDescriptor parse_cusp(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw DescriptorError(ptr, "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "newton_pairs" && key != "semigroup_generators")
      throw DescriptorError(ptr + "/" + key, "unknown field");
  const bool has_pairs = j.contains("newton_pairs");
  const bool has_gens = j.contains("semigroup_generators");
  if (has_pairs == has_gens)
    throw DescriptorError(ptr, "give exactly one of newton_pairs or semigroup_generators");

  CuspDescriptor c;
  if (has_pairs) {
    const std::string pp = ptr + "/newton_pairs";
    const auto& arr = as_array(j["newton_pairs"], pp);
    if (arr.empty()) throw DescriptorError(pp, "needs at least one pair");
    std::vector<cusp::NewtonPair> pairs;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string ep = pp + "/" + std::to_string(k);
      if (!arr[k].is_array() || arr[k].size() != 2)
        throw DescriptorError(ep, "expected a [p, q] pair, got " + arr[k].dump());
      pairs.push_back({as_int(arr[k][0], ep + "/0"), as_int(arr[k][1], ep + "/1")});
    }
    try {
      (void)cusp::branch_from_newton_pairs(pairs);
    } catch (const cusp::InvalidBranch& e) {
      throw DescriptorError(pp, e.what());
    }
    c.newton_pairs = std::move(pairs);
  } else {
    const std::string gp = ptr + "/semigroup_generators";
    const auto& arr = as_array(j["semigroup_generators"], gp);
    std::vector<std::int64_t> gens;
    for (std::size_t k = 0; k < arr.size(); ++k) gens.push_back(as_int(arr[k], gp + "/" + std::to_string(k)));
    try {
      (void)cusp::branch_from_generators(gens);
    } catch (const cusp::InvalidBranch& e) {
      throw DescriptorError(gp, e.what());
    }
    c.generators = std::move(gens);
  }
  return c;
}

}  // namespace

CurveDescriptor parse_descriptor(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DescriptorError("", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DescriptorError("", "expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "degree" && key != "cusps" && key != "stab_dim" && key != "kappa_bar" && key != "pencil")
      throw DescriptorError("/" + key, "unknown field");

  CurveDescriptor d;
  if (!j.contains("degree")) throw DescriptorError("/degree", "missing");
  d.degree = as_int(j["degree"], "/degree");
  if (d.degree < 3) throw DescriptorError("/degree", "degree must be at least 3");

  if (!j.contains("cusps")) throw DescriptorError("/cusps", "missing");
  const auto& cusps = as_array(j["cusps"], "/cusps");
  if (cusps.empty()) throw DescriptorError("/cusps", "needs at least one cusp");
  for (std::size_t i = 0; i < cusps.size(); ++i)
    d.cusps.push_back(parse_cusp(cusps[i], "/cusps/" + std::to_string(i)));

  if (j.contains("stab_dim") && !j["stab_dim"].is_null()) {
    const auto s = as_int(j["stab_dim"], "/stab_dim");
    if (s < 0 || s > 6) throw DescriptorError("/stab_dim", "must lie in 0..6");
    d.stab_dim = static_cast<int>(s);
  }
  if (j.contains("kappa_bar") && !j["kappa_bar"].is_null()) {
    const auto& k = j["kappa_bar"];
    const std::string text_value = k.is_string() ? k.get<std::string>() : k.dump();
    try {
      d.kappa_bar = cusp::parse_kappa_bar(text_value);
    } catch (const std::invalid_argument& e) {
      throw DescriptorError("/kappa_bar", e.what());
    }
  }
  if (j.contains("pencil") && !j["pencil"].is_null()) {
    const auto& p = j["pencil"];
    if (!p.is_array() || p.size() != 2) throw DescriptorError("/pencil", "expected [d, a]");
    d.pencil = cusp::PencilType{as_int(p[0], "/pencil/0"), as_int(p[1], "/pencil/1")};
  }
  return d;
}

cusp::Semigroup cusp_semigroup(const CuspDescriptor& c) {
  if (c.newton_pairs) return cusp::semigroup_of(cusp::branch_from_newton_pairs(*c.newton_pairs));
  return cusp::Semigroup::from_generators(*c.generators);
}

std::string format_pairs(const std::vector<cusp::NewtonPair>& pairs) {
  std::string s = "[";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s += ",";
    s += "[" + std::to_string(pairs[k].p) + "," + std::to_string(pairs[k].q) + "]";
  }
  return s + "]";
}

cusp::BranchType cusp_branch(const CurveDescriptor& d, std::size_t index, std::string_view command) {
  const auto& c = d.cusps.at(index);
  if (c.newton_pairs) return cusp::branch_from_newton_pairs(*c.newton_pairs);
  const auto equivalent = cusp::branch_from_generators(*c.generators);
  throw DescriptorError("/cusps/" + std::to_string(index) + "/semigroup_generators",
                        std::string(command) + " needs Newton pairs (multiplicities and spectrum are not " +
                            "read off generators); the equivalent cusp is {\"newton_pairs\": " +
                            format_pairs(equivalent.newton_pairs()) + "}");
}

cusp::CurveSpec to_curve_spec(const CurveDescriptor& d, std::string_view command) {
  cusp::CurveSpec spec;
  spec.degree = d.degree;
  for (std::size_t i = 0; i < d.cusps.size(); ++i) spec.cusps.push_back(cusp_branch(d, i, command));
  spec.stab_dim = d.stab_dim;
  spec.kappa_bar = d.kappa_bar;
  spec.pencil = d.pencil;
  return spec;
}

}  // namespace cuspcli
