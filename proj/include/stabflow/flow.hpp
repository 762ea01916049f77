#pragma once

// Subgradient descent of the global dimension in polygon coordinates.
// The objective is a max of smooth bracket angles; on the nonsmooth locus
// the step direction is the negated minimum-norm element of the convex
// hull of the active-pair gradients.  V_0 and V_1 stay pinned, so the
// free coordinates are V_2..V_n.

#include <optional>
#include <utility>
#include <vector>

#include "stabflow/polygon_chart.hpp"

namespace stabflow {

using PairIndex = std::pair<int, int>;

struct FlowConfig {
    double initial_step = 0.25;
    double shrink = 0.5;
    int max_steps = 20000;
    double stop_tol = 1e-12;   // gldim improvement threshold
    double active_tol = 1e-7;  // pair activation threshold
    std::optional<double> target;
    int max_backtracks = 60;
    double stationarity_tol = 1e-10; // min-norm subgradient threshold
    int stall_window = 10;

    void validate() const;
};

/// Gradient of the bracket angle of `pair` with respect to the free
/// coordinates (x2, y2, ..., xn, yn), length 2(n-1).
/// Throws singular_configuration_error on coincident diagonal endpoints.
std::vector<double> gldim_gradient(const Polygon& p, PairIndex pair);

struct DescentResult {
    bool stationary = false;
    double min_norm = 0.0;
    std::vector<double> direction; // negated min-norm hull element; empty when stationary
    std::vector<double> weights;   // convex coefficients of the hull element
};

/// Minimum-norm element of the convex hull of the active gradients,
/// negated.  Reports a stationarity certificate when the hull (nearly)
/// contains the origin.
DescentResult descent_direction(const Polygon& p, const std::vector<PairIndex>& active,
                                double stationarity_tol = 1e-10);

struct StepRecord {
    int step = 0;
    double gldim = 0.0;
    std::vector<PairIndex> active; // stratum pairs within active_tol of the max
    int s = 0;
    int rank = 0;
    double accepted_step = 0.0;
    double min_norm = 0.0;
    std::vector<Complex> vertices;
};

enum class StopReason {
    running,
    stationary,            // min-norm subgradient below threshold
    line_search_exhausted, // no strictly decreasing feasible step
    stalled,               // improvement below stop_tol over stall_window steps
    target_reached,
    max_steps,
};

const char* to_string(StopReason r);

struct StepOutcome {
    Polygon polygon;        // result (unchanged when halted)
    StepRecord record;
    bool halted = false;
    StopReason reason = StopReason::running;
    std::vector<PairIndex> working_set; // hysteresis state to carry forward
};

/// One backtracking line-search step along the descent direction.  The
/// candidate must stay simple, convex and inside the chart and must
/// strictly decrease the global dimension.  `carried` is the previous
/// working set for hysteresis (pairs stay active until their gap exceeds
/// ten times the activation tolerance).
StepOutcome flow_step(const Polygon& p, const FlowConfig& cfg,
                      const std::vector<PairIndex>& carried = {});

struct FlowTrace {
    std::vector<StepRecord> steps;
    StopReason reason = StopReason::running;

    bool converged() const
    {
        return reason == StopReason::stationary || reason == StopReason::line_search_exhausted ||
               reason == StopReason::stalled || reason == StopReason::target_reached;
    }
    const Polygon terminal() const
    {
        return Polygon{steps.back().vertices};
    }
};

/// Iterate flow_step until stationarity, target or max_steps, recording
/// per-step stratum data.  The gldim column is strictly decreasing over
/// accepted steps by construction.
FlowTrace run_flow(const Polygon& start, const FlowConfig& cfg);

struct StratumInfo {
    int s = 0;    // active pairs within active_tol of the max
    int rank = 0; // numerical rank of the active-constraint Jacobian
    std::vector<PairIndex> active;
};

/// Active pairs and the rank of the Jacobian of the s-1 bracket
/// differences in free coordinates (singular values above 1e-8 of the
/// largest).  Independent active constraints give rank s-1.
StratumInfo stratum_rank(const Polygon& p, double active_tol);

} // namespace stabflow
