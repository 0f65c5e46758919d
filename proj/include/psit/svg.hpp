#pragma once

// Deterministic SVG rendering of plane graphs: points as circles, edges as
// lines, pointed interior vertices and removed edges visually marked.
// Byte-stable for a fixed input.

#include <string>

#include "psit/plane_graph.hpp"

namespace psit {

struct SvgOptions {
    bool mark_pointed = false;  // fill pointed interior vertices differently
    EdgeList removed;           // drawn dashed (edges of a host triangulation
                                // that the graph dropped)
};

std::string emit_svg(const PlaneGraph& g, const SvgOptions& opts = {});

} // namespace psit
