#include "cusp/gradedroots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cusp/curvecheck.hpp"
#include "cusp/localinv.hpp"

namespace cusp {

namespace {

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

std::vector<Interval> sublevel_components(const std::vector<std::int64_t>& tau, std::int64_t n) {
  std::vector<Interval> out;
  std::size_t i = 0;
  while (i < tau.size()) {
    if (tau[i] > n) { ++i; continue; }
    std::size_t j = i;
    while (j + 1 < tau.size() && tau[j + 1] <= n) ++j;
    out.push_back({i, j});
    i = j + 1;
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// --- GradedRoot --------------------------------------------------------------

std::vector<std::size_t> GradedRoot::level(std::int64_t n) const {
  if (n >= stem_top_) return {top_};
  auto it = by_level_.find(n);
  return it == by_level_.end() ? std::vector<std::size_t>{} : it->second;
}

std::size_t GradedRoot::level_size(std::int64_t n) const {
  if (n >= stem_top_) return 1;
  auto it = by_level_.find(n);
  return it == by_level_.end() ? 0 : it->second.size();
}

std::vector<std::size_t> GradedRoot::children(std::size_t v) const { return children_.at(v); }

GradedRoot root_from_tau(const TauFunction& tau) {
  if (tau.values.empty()) throw std::invalid_argument("root_from_tau: empty tau");
  const auto& t = tau.values;
  const auto [lo_it, hi_it] = std::minmax_element(t.begin(), t.end());
  GradedRoot r;
  r.min_chi_ = *lo_it;

  // New components can appear after a merge, so scan up to max tau and then
  // keep levels up to the lowest one above which every level is connected.
  std::vector<std::vector<Interval>> levels;
  for (std::int64_t n = *lo_it; n <= *hi_it; ++n) levels.push_back(sublevel_components(t, n));
  while (levels.size() > 1 && levels[levels.size() - 2].size() == 1) levels.pop_back();
  r.stem_top_ = r.min_chi_ + static_cast<std::int64_t>(levels.size()) - 1;

  std::vector<std::size_t> first_id(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    first_id[li] = r.vertices_.size();
    auto& ids = r.by_level_[r.min_chi_ + static_cast<std::int64_t>(li)];
    for (std::size_t k = 0; k < levels[li].size(); ++k) {
      ids.push_back(r.vertices_.size());
      r.vertices_.push_back({r.min_chi_ + static_cast<std::int64_t>(li), -1});
    }
  }
  r.children_.assign(r.vertices_.size(), {});
  for (std::size_t li = 0; li + 1 < levels.size(); ++li) {
    const auto& above = levels[li + 1];
    for (std::size_t k = 0; k < levels[li].size(); ++k) {
      const auto lo = levels[li][k].lo;
      const auto it = std::find_if(above.begin(), above.end(),
                                   [lo](const Interval& iv) { return iv.lo <= lo && lo <= iv.hi; });
      const std::size_t parent = first_id[li + 1] + static_cast<std::size_t>(it - above.begin());
      const std::size_t self = first_id[li] + k;
      r.vertices_[self].parent = static_cast<std::int64_t>(parent);
      r.children_[parent].push_back(self);
    }
  }
  r.top_ = r.vertices_.size() - 1;
  return r;
}

bool satisfies_root_axioms(const GradedRoot& r) {
  const auto& vs = r.vertices();
  if (vs.empty()) return false;
  std::size_t tops = 0;
  std::vector<std::vector<std::int64_t>> neighbour_chi(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (vs[v].chi < r.min_chi() || vs[v].chi > r.stem_top()) return false;
    if (vs[v].parent < 0) {
      ++tops;
      if (vs[v].chi != r.stem_top()) return false;
      // The implicit chain continues upward from the stem vertex.
      neighbour_chi[v].push_back(vs[v].chi + 1);
      continue;
    }
    const auto p = static_cast<std::size_t>(vs[v].parent);
    if (p >= vs.size()) return false;
    if (vs[p].chi - vs[v].chi != 1) return false;  // (a)
    neighbour_chi[v].push_back(vs[p].chi);
    neighbour_chi[p].push_back(vs[v].chi);
  }
  if (tops != 1 || r.level_size(r.stem_top()) != 1) return false;  // (c)
  for (std::size_t v = 0; v < vs.size(); ++v) {  // (b)
    const auto& nc = neighbour_chi[v];
    const auto above = std::count_if(nc.begin(), nc.end(), [&](std::int64_t c) { return c > vs[v].chi; });
    if (above > 1) return false;
  }
  return true;
}

// --- tau constructions ---------------------------------------------------------

namespace {

TauFunction tau_from_profile(std::int64_t d, std::int64_t delta, const std::vector<std::int64_t>& c) {
  TauFunction tau;
  tau.values.assign(static_cast<std::size_t>(2 * d - 3), 0);
  for (std::int64_t l = 0; 2 * l <= 2 * d - 4; ++l)
    tau.values[static_cast<std::size_t>(2 * l)] = l * (l - 1) / 2 * d - l * (delta - 1);
  for (std::int64_t l = 0; l <= d - 3; ++l)
    tau.values[static_cast<std::size_t>(2 * l + 1)] =
        tau.values[static_cast<std::size_t>(2 * l + 2)] + c[static_cast<std::size_t>(d - 3 - l)];
  return tau;
}

}  // namespace

TauFunction tau_for_surgery(const Semigroup& sg, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("tau_for_surgery needs d >= 3");
  if (sg.mu() != (d - 1) * (d - 2))
    throw GenusError("tau_for_surgery: mu = " + std::to_string(sg.mu()) + " but (d-1)(d-2) = " +
                     std::to_string((d - 1) * (d - 2)));
  std::vector<std::int64_t> c;
  for (const auto& v : c_from_q(alexander_poly(sg), d)) c.push_back(v.get_si());
  return tau_from_profile(d, sg.delta(), c);
}

TauFunction tau_for_brieskorn(std::int64_t d) {
  if (d < 3) throw std::invalid_argument("tau_for_brieskorn needs d >= 3");
  std::vector<std::int64_t> c;
  for (std::int64_t l = 0; l <= d - 3; ++l) c.push_back((l + 1) * (l + 2) / 2);
  return tau_from_profile(d, (d - 1) * (d - 2) / 2, c);
}

// --- isomorphism -------------------------------------------------------------

bool roots_isomorphic(const GradedRoot& a, const GradedRoot& b) {
  if (a.stem_top() != b.stem_top() || a.min_chi() != b.min_chi() ||
      a.vertices().size() != b.vertices().size())
    return false;
  // Vertices are stored level by level from the bottom, so children are
  // labelled before their parents.
  std::map<std::vector<std::int64_t>, std::int64_t> dictionary;
  auto label_all = [&dictionary](const GradedRoot& r) {
    std::vector<std::int64_t> label(r.vertices().size());
    for (std::size_t v = 0; v < r.vertices().size(); ++v) {
      std::vector<std::int64_t> key;
      key.push_back(r.vertices()[v].chi);
      for (auto ch : r.children(v)) key.push_back(label[ch]);
      std::sort(key.begin() + 1, key.end());
      auto [it, inserted] = dictionary.try_emplace(std::move(key), static_cast<std::int64_t>(dictionary.size()));
      label[v] = it->second;
    }
    return label[r.top_index()];
  };
  const auto la = label_all(a);
  const auto lb = label_all(b);
  return la == lb;
}

// --- Z[U]-module ranks ---------------------------------------------------------

HFRanks hplus_ranks(const GradedRoot& r, std::int64_t h_min, std::int64_t h_max) {
  HFRanks out;
  if (h_min > h_max) return out;
  // Components of {chi <= n}, grown one level at a time.
  std::map<std::int64_t, std::int64_t> components;
  DisjointSets ds(r.vertices().size());
  std::int64_t count = 0;
  for (std::int64_t n = r.min_chi(); n <= r.stem_top(); ++n) {
    for (auto v : r.level(n)) {
      ++count;
      for (auto ch : r.children(v))
        if (ds.unite(ch, v)) --count;
    }
    components[n] = count;
  }
  for (std::int64_t h = h_min; h <= h_max; ++h) {
    std::int64_t rank = 0;
    if (h % 2 == 0) {
      const std::int64_t n = h / 2;
      if (n >= r.stem_top())
        rank = 1;
      else if (n >= r.min_chi())
        rank = components.at(n);
    }
    out.ranks[h] = rank;
  }
  return out;
}

std::vector<std::pair<Rat, std::int64_t>> shifted_ranks(const HFRanks& ranks, const Int& k2_plus_sharp) {
  const Rat shift = -Rat(k2_plus_sharp, Int(4));
  std::vector<std::pair<Rat, std::int64_t>> out;
  for (const auto& [h, rank] : ranks.ranks)
    if (rank != 0) out.emplace_back(Rat(h) + shift, rank);
  return out;
}

Rat sw_from_root(const TauFunction& tau, const Int& k2_plus_sharp) {
  Int sum = 0;
  const auto& t = tau.values;
  for (std::size_t l = 0; 2 * l + 2 < t.size(); ++l) sum += t[2 * l + 1] - t[2 * l + 2];
  return Rat(k2_plus_sharp, Int(8)) + Rat(sum);
}

Int brieskorn_k2_plus_sharp(std::int64_t d) {
  const Int D(d);
  return -D * (D - 1) * (D - 3);
}

}  // namespace cusp
