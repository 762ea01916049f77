#pragma once

// The convex-polygon chart for totally stable stability conditions on
// D^b(A_n): labeled (n+1)-gons with V_0 = 0, V_1 = 1, anticlockwise.
// Edge vectors are the simple charges; oriented diagonals V_{i-1} -> V_j
// are the charges of the M_[i,j].  The closed-form global dimension reads
// off pairs of diagonals directly, so it extends to every convex polygon,
// including those outside the standard-heart chart.

#include <utility>
#include <vector>

#include "stabflow/stability.hpp"

namespace stabflow {

struct Polygon {
    std::vector<Complex> vertices; // V_0 .. V_n

    int rank() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Validating factory for externally supplied vertex lists: checks the
/// normalization V_0 = 0, V_1 = 1 (tolerance 1e-12), pairwise distinct
/// vertices, simplicity and anticlockwise labeling.
Polygon make_polygon(std::vector<Complex> vertices);

double signed_area(const Polygon& p);

bool is_simple(const Polygon& p);

/// Strict convexity: all consecutive cross products positive.  Collinear
/// triples count as non-convex.  Throws malformed_polygon_error on a
/// non-simple polygon.
bool is_convex(const Polygon& p);

/// Edge vectors V_i - V_{i-1} as a chart.  Throws chart_out_of_range_error
/// if the polygon is not convex or an edge leaves the upper half plane
/// (e.g. the unit square, whose third edge has phase exactly 1).
Chart polygon_to_chart(const Polygon& p);

/// Partial sums of a normalized chart with gldim < 1.
/// Throws unnormalized_chart_error unless Z(S_1) = 1, and
/// not_in_chart_error when gldim >= 1.
Polygon chart_to_polygon(const Chart& chart);

struct PolygonGldim {
    double value = 0.0;                          // in units of pi
    std::vector<std::pair<int, int>> argmax;     // index pairs 0 <= i < j <= n
};

/// Bracket of the index pair (i,j): the angle from V_{j+1} - V_{i+1} to
/// V_i - V_j, branch pinned to (0, 2], in units of pi.  On the chart this
/// equals 1 + phase(M_[i+1,j]) - phase(M_[i+2,j+1]) for j < n and the
/// degree-0 gap phase(M_[i+1,n]) - phase(M_[1,i+1]) for j = n.
double bracket_angle(const Polygon& p, int i, int j);

/// Closed-form global dimension of a convex polygon with argmax pairs
/// (ties within tie_tol).  Throws on non-convex input.
PolygonGldim gldim_polygon(const Polygon& p, double tie_tol = 1e-9);

/// The regular (n+1)-gon with unit first edge: the Gepner polygon.
Polygon regular_polygon(int n);

} // namespace stabflow
