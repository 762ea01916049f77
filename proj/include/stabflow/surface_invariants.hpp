#pragma once

// Numerical invariants of graded marked surfaces: rank, the winding
// constraint, the set of critical values, and the explicit annulus
// certificate realizing the global dimension 1 + w/m.  Everything here is
// exact rational arithmetic; the claims are exact identities.

#include <boost/rational.hpp>

#include <vector>

#include "stabflow/errors.hpp"

namespace stabflow {

using Rational = boost::rational<long long>;

struct Boundary {
    long long marked_points = 1; // m_i >= 1
    long long winding = 0;       // w_i, clockwise winding of the line field
};

struct SurfaceData {
    long long genus = 0;
    std::vector<Boundary> boundaries;
};

/// Validates genus >= 0, every m_i >= 1, the winding constraint
/// sum w_i = 4g - 4 + 2b, and rank >= 2.
SurfaceData make_surface(long long genus, std::vector<Boundary> boundaries);

/// n = 2g + b + aleph - 2 where aleph is the total marked-point count.
long long surface_rank(const SurfaceData& s);

/// {1 + w_i/m_i : w_i >= 0} together with 1; the flag additionally admits
/// boundaries with negative winding (the disk then lists (n-1)/(n+1)).
/// Sorted ascending, duplicates removed.
std::vector<Rational> critical_values(const SurfaceData& s,
                                      bool include_negative_windings = false);

/// Balanced distribution of m+w intersection indices over the m minimal
/// arcs of the m-marked boundary: floor differences of j(m+w)/m by
/// default, ceiling differences behind the flag (which restores the first
/// index being at least 2 for 0 < w < m).
std::vector<long long> annulus_indices(long long m, long long r, long long w,
                                       bool ceiling_variant = false);

/// Exact witness for the annulus global dimension 1 + w/m: graded minimal
/// arcs with indices summing to m+w and phases whose consecutive
/// differences, index shifts folded in, all equal (m+w)/m exactly.
struct AnnulusCertificate {
    long long m = 1;
    long long r = 1;
    long long w = 0;
    std::vector<long long> indices;
    std::vector<Rational> phases; // phase of the j-th minimal arc object
    Rational gap{1};              // common shifted phase difference
    Rational gd{1};               // 1 + w/m
};

AnnulusCertificate annulus_certificate(long long m, long long r, long long w,
                                       bool ceiling_variant = false);

/// Value forced when the maximum is achieved along a full cycle of
/// minimal arcs on a boundary: 1 + w/m.
Rational cycle_value(long long marked_points, long long winding);

} // namespace stabflow
