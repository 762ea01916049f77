#pragma once

// Stability conditions on D^b(A_n) in the standard-heart chart: a central
// charge is determined by its values on the simples, one point of the
// upper half plane H = { r e^{i pi t} : r > 0, t in [0,1) } per vertex.
// Phases, Harder-Narasimhan filtrations, semistables, the global
// dimension function, extremal pairs and the background metric all live
// here.

#include <complex>
#include <vector>

#include "stabflow/an_category.hpp"

namespace stabflow {

using Complex = std::complex<double>;

/// z = r e^{i pi t} with r > 0 and t in [0,1).
bool in_upper_half_plane(Complex z);

/// A stability condition in the standard-heart chart: charges[i] = Z(S_{i+1}).
class Chart {
public:
    explicit Chart(std::vector<Complex> charges); // validates every charge in H

    int rank() const { return static_cast<int>(z_.size()); }
    const std::vector<Complex>& charges() const { return z_; }
    Complex charge_of_simple(int i) const { return z_.at(static_cast<size_t>(i) - 1); }

    /// Charge of the (possibly shifted) interval object: shifts flip sign.
    Complex charge(const Interval& a) const;

private:
    std::vector<Complex> z_;
};

/// Phase in [0,1) of an unshifted interval's charge.
/// Throws degenerate_charge_error if the total charge leaves H.
double phase_of_heart_object(const Chart& chart, const Interval& a);

struct HNFactor {
    Interval object;
    double phase = 0.0;
};

/// Harder-Narasimhan filtration: semistable factors of strictly
/// decreasing phase whose charges sum to the object's charge.
struct HNFiltration {
    std::vector<HNFactor> factors;

    double top_phase() const { return factors.front().phase; }
    double bottom_phase() const { return factors.back().phase; }
    double mass(const Chart& chart) const;
};

/// Greedy filtration: repeatedly take the smallest prefix submodule
/// M_[a,t] of maximal phase, then merge adjacent equal-phase pieces.
HNFiltration hn_filtration(const Chart& chart, const Interval& a);

/// Enumeration oracle: checks every chain filtration by sub-intervals and
/// returns the unique one with semistable factors and strictly
/// decreasing phases.
HNFiltration hn_filtration_brute_force(const Chart& chart, const Interval& a);

struct Semistable {
    Interval object;
    double phase = 0.0;
    bool stable = false; // every proper prefix has strictly smaller phase
};

/// All unshifted intervals whose filtration is a single factor.
std::vector<Semistable> semistable_indecomposables(const Chart& chart);

/// max over pairs (A,B) of semistables and degrees d in {0,1} with
/// Hom(A, B[d]) != 0 of phase(B) + d - phase(A).  Nonnegative (identity
/// pairs contribute zero); invariant under rescaling the chart.
double gldim(const Chart& chart);

/// An extremal Hom-pair: stable source and target in distinct shift
/// orbits with gap = phase(target) + degree - phase(source).
struct CPPair {
    Interval source;
    Interval target;
    int degree = 0;
    double gap = 0.0;
};

struct CPPairSet {
    std::vector<CPPair> pairs;
    int orbit_count = 0; // s: pairs up to simultaneous shift
    double gldim_value = 0.0;
};

/// All pairs within tol of the maximum, both members stable.
CPPairSet cp_pairs(const Chart& chart, double tol = 1e-9);

/// Background metric: sup over intervals E of the top/bottom phase
/// discrepancies and |log m_1(E)/m_2(E)|, the mass being the sum of the
/// factor charge moduli.
double metric_distance(const Chart& z1, const Chart& z2);

} // namespace stabflow
