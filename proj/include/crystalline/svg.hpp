#pragma once

#include <string>
#include <vector>

#include "crystalline/polygon.hpp"

namespace crystalline {

// Deterministic SVG rendering of polygons on an integer lattice grid:
// one polyline per polygon, vertices marked, byte-stable for equal input.
// Missing labels are filled in as "nu_1", "nu_2", ...
std::string polygon_svg(const std::vector<Polygon>& polygons,
                        std::vector<std::string> labels = {});

}  // namespace crystalline
