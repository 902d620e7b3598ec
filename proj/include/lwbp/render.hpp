#pragma once

#include <string>

#include "lwbp/json_io.hpp"

namespace lwbp {

/// SVG drawing of a forest using the folding layout. Each component is laid
/// out separately, left to right; a component without both marks gets the
/// root edge at its smallest black vertex as marks.
std::string render_forest_svg(const PlaneForest& forest, const Marks& marks = std::nullopt);

/// Graphviz `graph` with one `"a" -- "b" [label=w]` line per edge.
std::string render_forest_dot(const PlaneForest& forest);

/// Columns as filled rectangles and horizontal cuts as lines, drawn to scale.
std::string render_region_svg(const ParsedRegion& region);

/// Column positions as nodes and horizontal rectangles as weighted edges.
std::string render_region_dot(const ParsedRegion& region);

}  // namespace lwbp
