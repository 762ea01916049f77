#include "stabflow/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace stabflow {

namespace {

constexpr double kPi = std::numbers::pi;

double phase_of(Complex z)
{
    return std::atan2(z.imag(), z.real()) / kPi;
}

std::string charge_str(Complex z)
{
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

} // namespace

bool in_upper_half_plane(Complex z)
{
    return z.imag() > 0.0 || (z.imag() == 0.0 && z.real() > 0.0);
}

Chart::Chart(std::vector<Complex> charges) : z_(std::move(charges))
{
    if (z_.empty())
        throw invalid_rank_error("chart needs at least one charge");
    for (size_t i = 0; i < z_.size(); ++i)
        if (!in_upper_half_plane(z_[i]))
            throw degenerate_charge_error("Z(S_" + std::to_string(i + 1) + ") = " +
                                          charge_str(z_[i]) +
                                          " is outside the upper half plane");
}

Complex Chart::charge(const Interval& a) const
{
    check_interval(a, rank());
    Complex total{0.0, 0.0};
    for (int i = a.lo; i <= a.hi; ++i)
        total += z_[static_cast<size_t>(i) - 1];
    // Z(X[k]) = (-1)^k Z(X)
    return (a.shift % 2 == 0) ? total : -total;
}

double phase_of_heart_object(const Chart& chart, const Interval& a)
{
    const Complex total = chart.charge(a);
    if (!in_upper_half_plane(total))
        throw degenerate_charge_error("charge of [" + std::to_string(a.lo) + "," +
                                      std::to_string(a.hi) + "] = " + charge_str(total) +
                                      " left the chart");
    return phase_of(total);
}

double HNFiltration::mass(const Chart& chart) const
{
    double m = 0.0;
    for (const auto& f : factors)
        m += std::abs(chart.charge(f.object));
    return m;
}

namespace {

// Phases of all prefix charges Z([lo, t]) for t = lo..hi.
std::vector<double> prefix_phases(const Chart& chart, int lo, int hi)
{
    std::vector<double> out;
    out.reserve(static_cast<size_t>(hi - lo + 1));
    Complex sum{0.0, 0.0};
    for (int t = lo; t <= hi; ++t) {
        sum += chart.charge_of_simple(t);
        if (!in_upper_half_plane(sum))
            throw degenerate_charge_error("prefix charge left the chart");
        out.push_back(phase_of(sum));
    }
    return out;
}

} // namespace

HNFiltration hn_filtration(const Chart& chart, const Interval& a)
{
    check_interval(a, chart.rank());
    if (a.shift != 0)
        throw error("hn_filtration expects an unshifted interval");

    // Greedy pieces: smallest prefix of maximal phase is semistable, since
    // any earlier prefix with equal phase would have been picked instead.
    std::vector<HNFactor> pieces;
    int cur = a.lo;
    while (cur <= a.hi) {
        const auto phases = prefix_phases(chart, cur, a.hi);
        int best = 0;
        for (int t = 1; t < static_cast<int>(phases.size()); ++t)
            if (phases[t] > phases[best])
                best = t;
        pieces.push_back({{cur, cur + best, 0}, phases[best]});
        cur += best + 1;
    }

    // Adjacent pieces of exactly equal phase belong to one strictly
    // semistable factor; fold each run into its interval.
    HNFiltration hn;
    size_t i = 0;
    while (i < pieces.size()) {
        size_t j = i;
        while (j + 1 < pieces.size() && pieces[j + 1].phase == pieces[i].phase)
            ++j;
        if (j == i) {
            hn.factors.push_back(pieces[i]);
        } else {
            Interval merged{pieces[i].object.lo, pieces[j].object.hi, 0};
            hn.factors.push_back({merged, phase_of_heart_object(chart, merged)});
        }
        i = j + 1;
    }
    return hn;
}

HNFiltration hn_filtration_brute_force(const Chart& chart, const Interval& a)
{
    check_interval(a, chart.rank());
    if (a.shift != 0)
        throw error("hn_filtration_brute_force expects an unshifted interval");

    const int len = a.hi - a.lo + 1;
    const unsigned chains = 1u << (len - 1); // subsets of interior split points

    auto factor_phase = [&](int lo, int hi) { return phase_of_heart_object(chart, {lo, hi, 0}); };
    auto semistable = [&](int lo, int hi) {
        const auto phases = prefix_phases(chart, lo, hi);
        for (double p : phases)
            if (p > phases.back())
                return false;
        return true;
    };

    std::vector<HNFiltration> valid;
    for (unsigned mask = 0; mask < chains; ++mask) {
        HNFiltration cand;
        int lo = a.lo;
        bool ok = true;
        for (int t = a.lo; t <= a.hi; ++t) {
            const bool split = t == a.hi || (mask >> (t - a.lo)) & 1u;
            if (!split)
                continue;
            if (!semistable(lo, t)) {
                ok = false;
                break;
            }
            const double phase = factor_phase(lo, t);
            if (!cand.factors.empty() && cand.factors.back().phase <= phase) {
                ok = false;
                break;
            }
            cand.factors.push_back({{lo, t, 0}, phase});
            lo = t + 1;
        }
        if (ok)
            valid.push_back(std::move(cand));
    }
    if (valid.size() != 1)
        throw error("HN enumeration found " + std::to_string(valid.size()) +
                    " valid chains for [" + std::to_string(a.lo) + "," +
                    std::to_string(a.hi) + "]; expected exactly one");
    return valid.front();
}

std::vector<Semistable> semistable_indecomposables(const Chart& chart)
{
    std::vector<Semistable> out;
    for (const auto& obj : all_indecomposables(chart.rank())) {
        const auto phases = prefix_phases(chart, obj.lo, obj.hi);
        const double own = phases.back();
        bool semi = true, stable = true;
        for (size_t t = 0; t + 1 < phases.size(); ++t) {
            if (phases[t] > own)
                semi = false;
            if (phases[t] >= own)
                stable = false;
        }
        if (semi)
            out.push_back({obj, own, stable});
    }
    return out;
}

double gldim(const Chart& chart)
{
    const auto ss = semistable_indecomposables(chart);
    const int n = chart.rank();
    double best = 0.0; // identity pairs give a zero gap
    for (const auto& a : ss)
        for (const auto& b : ss)
            for (int d = 0; d <= 1; ++d)
                if (hom_dim(a.object, b.object, d, n) != 0)
                    best = std::max(best, b.phase + d - a.phase);
    return best;
}

CPPairSet cp_pairs(const Chart& chart, double tol)
{
    if (tol < 0)
        throw error("cp_pairs needs tol >= 0");
    const auto ss = semistable_indecomposables(chart);
    const int n = chart.rank();
    CPPairSet out;
    out.gldim_value = gldim(chart);
    for (const auto& a : ss) {
        for (const auto& b : ss) {
            if (a.object.same_orbit(b.object))
                continue;
            if (!a.stable || !b.stable)
                continue;
            for (int d = 0; d <= 1; ++d) {
                if (hom_dim(a.object, b.object, d, n) == 0)
                    continue;
                const double gap = b.phase + d - a.phase;
                if (gap >= out.gldim_value - tol)
                    out.pairs.push_back({a.object, b.object, d, gap});
            }
        }
    }
    // Degree already normalizes the simultaneous shift, so distinct
    // (source, target, degree) triples are distinct orbits.
    out.orbit_count = static_cast<int>(out.pairs.size());
    return out;
}

double metric_distance(const Chart& z1, const Chart& z2)
{
    if (z1.rank() != z2.rank())
        throw rank_mismatch_error("charts have ranks " + std::to_string(z1.rank()) +
                                  " and " + std::to_string(z2.rank()));
    double sup = 0.0;
    for (const auto& e : all_indecomposables(z1.rank())) {
        const auto f1 = hn_filtration(z1, e);
        const auto f2 = hn_filtration(z2, e);
        sup = std::max(sup, std::abs(f1.top_phase() - f2.top_phase()));
        sup = std::max(sup, std::abs(f1.bottom_phase() - f2.bottom_phase()));
        sup = std::max(sup, std::abs(std::log(f1.mass(z1) / f2.mass(z2))));
    }
    return sup;
}

} // namespace stabflow
