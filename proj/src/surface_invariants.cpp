#include "stabflow/surface_invariants.hpp"

#include <algorithm>
#include <string>

namespace stabflow {

namespace {

long long floor_div(long long num, long long den)
{
    // den > 0 throughout this module
    long long q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

long long ceil_div(long long num, long long den)
{
    return -floor_div(-num, den);
}

Rational frac(const Rational& x)
{
    return x - Rational(floor_div(x.numerator(), x.denominator()));
}

} // namespace

SurfaceData make_surface(long long genus, std::vector<Boundary> boundaries)
{
    if (genus < 0)
        throw invalid_surface_error("genus must be nonnegative");
    if (boundaries.empty())
        throw invalid_surface_error("surface needs at least one boundary component");
    long long winding_sum = 0, aleph = 0;
    for (const auto& b : boundaries) {
        if (b.marked_points < 1)
            throw invalid_surface_error("every boundary needs at least one marked point");
        winding_sum += b.winding;
        aleph += b.marked_points;
    }
    const long long b = static_cast<long long>(boundaries.size());
    if (winding_sum != 4 * genus - 4 + 2 * b)
        throw invalid_surface_error("winding numbers sum to " + std::to_string(winding_sum) +
                                    ", expected 4g-4+2b = " +
                                    std::to_string(4 * genus - 4 + 2 * b));
    if (2 * genus + b + aleph - 2 < 2)
        throw invalid_surface_error("surface rank must be at least 2");
    return SurfaceData{genus, std::move(boundaries)};
}

long long surface_rank(const SurfaceData& s)
{
    long long aleph = 0;
    for (const auto& b : s.boundaries)
        aleph += b.marked_points;
    return 2 * s.genus + static_cast<long long>(s.boundaries.size()) + aleph - 2;
}

std::vector<Rational> critical_values(const SurfaceData& s, bool include_negative_windings)
{
    std::vector<Rational> vals{Rational(1)};
    for (const auto& b : s.boundaries)
        if (b.winding >= 0 || include_negative_windings)
            vals.push_back(Rational(1) + Rational(b.winding, b.marked_points));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<long long> annulus_indices(long long m, long long r, long long w, bool ceiling_variant)
{
    if (m < 1 || r < 1)
        throw invalid_surface_error("annulus needs m, r >= 1");
    if (w < 0)
        throw unsupported_winding_error("annulus indices need w >= 0 (normal form)");
    std::vector<long long> idx;
    idx.reserve(static_cast<size_t>(m));
    for (long long j = 1; j <= m; ++j) {
        const long long hi = ceiling_variant ? ceil_div(j * (m + w), m) : floor_div(j * (m + w), m);
        const long long lo = ceiling_variant ? ceil_div((j - 1) * (m + w), m)
                                             : floor_div((j - 1) * (m + w), m);
        idx.push_back(hi - lo);
    }
    return idx;
}

AnnulusCertificate annulus_certificate(long long m, long long r, long long w, bool ceiling_variant)
{
    AnnulusCertificate cert;
    cert.m = m;
    cert.r = r;
    cert.w = w;
    cert.indices = annulus_indices(m, r, w, ceiling_variant);
    cert.gap = Rational(m + w, m);
    cert.gd = cert.gap;

    // Graded arcs sit on the exact ladder psi_j = (j-1)(m+w)/m; the stored
    // phase is psi reduced into [0,1) (floor variant) or (0,1] (ceiling
    // variant), the dropped integer part being the accumulated index shift.
    cert.phases.reserve(static_cast<size_t>(m));
    for (long long j = 0; j < m; ++j) {
        const Rational psi(j * (m + w), m);
        if (ceiling_variant) {
            const Rational f = frac(psi);
            cert.phases.push_back(f == Rational(0) ? Rational(1) : f);
        } else {
            cert.phases.push_back(frac(psi));
        }
    }

    long long sum = 0;
    for (long long i : cert.indices)
        sum += i;
    if (sum != m + w)
        throw error("annulus certificate: index sum is off");
    for (long long j = 0; j < m; ++j) {
        const Rational next = cert.phases[static_cast<size_t>((j + 1) % m)];
        const Rational step = next - cert.phases[static_cast<size_t>(j)] +
                              Rational(cert.indices[static_cast<size_t>(j)]);
        if (step != cert.gap)
            throw error("annulus certificate: shifted phase difference is off at arc " +
                        std::to_string(j + 1));
    }
    return cert;
}

Rational cycle_value(long long marked_points, long long winding)
{
    if (marked_points < 1)
        throw invalid_surface_error("cycle value needs at least one marked point");
    return Rational(1) + Rational(winding, marked_points);
}

} // namespace stabflow
