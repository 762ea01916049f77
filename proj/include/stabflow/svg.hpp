#pragma once

#include <string>

#include "stabflow/flow.hpp"

namespace stabflow {

/// SVG rendering of a flow: polygon snapshots along the trajectory, the
/// terminal polygon's diagonals colored by direction, and a gldim-vs-step
/// inset.  Output is deterministic for a given trace.
std::string render_flow_svg(const FlowTrace& trace);

/// Single polygon with its diagonals.
std::string render_polygon_svg(const Polygon& polygon);

} // namespace stabflow
