#include "cli/render.hpp"

#include <iomanip>
#include <sstream>

namespace cuspcli {

std::string render_ascii(const cusp::GradedRoot& r) {
  std::ostringstream os;
  os << "  chi | vertices (vN^parent)\n";
  os << std::setw(5) << r.stem_top() + 1 << " | :   (stem continues)\n";
  for (std::int64_t n = r.stem_top(); n >= r.min_chi(); --n) {
    os << std::setw(5) << n << " |";
    for (auto v : r.level(n)) {
      os << " v" << v;
      const auto p = r.vertices()[v].parent;
      if (p >= 0) os << '^' << p;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_dot(const cusp::GradedRoot& r, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t v = 0; v < r.vertices().size(); ++v)
    os << "  v" << v << " [chi=" << r.vertices()[v].chi << ", label=\"" << r.vertices()[v].chi << "\"];\n";
  os << "  stem [shape=none, label=\"...\"];\n";
  for (std::int64_t n = r.min_chi(); n <= r.stem_top(); ++n) {
    os << "  { rank=same;";
    for (auto v : r.level(n)) os << " v" << v << ';';
    os << " }\n";
  }
  for (std::size_t v = 0; v < r.vertices().size(); ++v) {
    const auto p = r.vertices()[v].parent;
    os << "  v" << v << " -> " << (p >= 0 ? "v" + std::to_string(p) : std::string("stem")) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cuspcli
