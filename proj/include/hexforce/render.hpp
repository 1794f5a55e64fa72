// SVG drawing of a hexagonal system and DOT output of its dual graph.

#ifndef HEXFORCE_RENDER_HPP_
#define HEXFORCE_RENDER_HPP_

#include <optional>
#include <string>

#include "edge_set.hpp"
#include "hexgrid.hpp"

namespace hexforce {

// Hexagons, black/white vertices and, when given, highlighted edges.
std::string render_svg(const HexSystem& hs, const std::optional<EdgeSet>& highlight = {},
                       double scale = 24.0);

std::string render_dot(const HexSystem& hs);

} // namespace hexforce

#endif
