#pragma once

#include <string>

#include "cusp/gradedroots.hpp"

namespace cuspcli {

/// One line per grading from stem_top down to min_chi; each vertex is shown
/// as `vN` with its parent after `^`.
std::string render_ascii(const cusp::GradedRoot& r);

/// Graphviz digraph, one node per vertex carrying its chi level, children
/// pointing up to parents, same-level nodes ranked together.
std::string render_dot(const cusp::GradedRoot& r, const std::string& name = "graded_root");

}  // namespace cuspcli
