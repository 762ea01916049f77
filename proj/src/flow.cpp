#include "stabflow/flow.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace stabflow {

namespace {

constexpr double kPi = std::numbers::pi;

// d arg(w) = (x dy - y dx) / |w|^2
void add_arg_gradient(std::vector<double>& grad, int n, int vertex, Complex w, double sign)
{
    if (vertex < 2 || vertex > n)
        return; // V_0, V_1 pinned
    const double r2 = std::norm(w);
    const size_t base = 2 * static_cast<size_t>(vertex - 2);
    grad[base] += sign * (-w.imag() / r2) / kPi;
    grad[base + 1] += sign * (w.real() / r2) / kPi;
}

Polygon displaced(const Polygon& p, const std::vector<double>& dir, double t)
{
    Polygon q = p;
    const int n = p.rank();
    for (int v = 2; v <= n; ++v) {
        const size_t base = 2 * static_cast<size_t>(v - 2);
        q.vertices[static_cast<size_t>(v)] += Complex{t * dir[base], t * dir[base + 1]};
    }
    return q;
}

// The flow lives in the convex-polygon chart: every simple convex
// normalized polygon is a stability condition with gldim < 1, whether or
// not its edges stay inside the standard heart's half plane.
bool feasible(const Polygon& p)
{
    return is_simple(p) && is_convex(p);
}

} // namespace

void FlowConfig::validate() const
{
    if (initial_step <= 0 || shrink <= 0 || shrink >= 1 || max_steps <= 0 || stop_tol <= 0 ||
        active_tol <= 0 || max_backtracks <= 0 || stationarity_tol <= 0 || stall_window <= 0)
        throw error("flow config fields must be positive with shrink in (0,1)");
}

std::vector<double> gldim_gradient(const Polygon& p, PairIndex pair)
{
    const int n = p.rank();
    const auto [i, j] = pair;
    if (!(0 <= i && i < j && j <= n))
        throw error("pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not an index pair of rank " + std::to_string(n));
    const int m = n + 1;
    const Complex u = p.vertices[static_cast<size_t>(i)] - p.vertices[static_cast<size_t>(j)];
    const Complex w = p.vertices[static_cast<size_t>((j + 1) % m)] - p.vertices[static_cast<size_t>(i + 1)];
    if (std::abs(u) == 0.0 || std::abs(w) == 0.0)
        throw singular_configuration_error("coincident vertices in pair (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");

    std::vector<double> grad(2 * static_cast<size_t>(n - 1), 0.0);
    // theta = (arg u - arg w) / pi with u = V_i - V_j, w = V_{j+1} - V_{i+1}
    add_arg_gradient(grad, n, i, u, +1.0);
    add_arg_gradient(grad, n, j, u, -1.0);
    add_arg_gradient(grad, n, (j + 1) % m, w, -1.0);
    add_arg_gradient(grad, n, i + 1, w, +1.0);
    return grad;
}

namespace {

// Wolfe's minimum-norm-point algorithm over the convex hull of the
// columns of G.  Small problems only; terminates exactly up to the
// numerical tolerances below.
Eigen::VectorXd min_norm_point(const Eigen::MatrixXd& points, Eigen::VectorXd& weights_out)
{
    const int m = static_cast<int>(points.cols());
    const double eps = 1e-14;

    int start = 0;
    for (int k = 1; k < m; ++k)
        if (points.col(k).squaredNorm() < points.col(start).squaredNorm())
            start = k;

    std::vector<int> corral{start};
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd x = points.col(start);

    const double scale2 = std::max(1.0, points.colwise().squaredNorm().maxCoeff());

    for (int iter = 0; iter < 16 * (m + 2); ++iter) {
        // Most improving vertex.
        int best = -1;
        double best_dot = x.squaredNorm() - eps * scale2;
        for (int k = 0; k < m; ++k) {
            const double d = x.dot(points.col(k));
            if (d < best_dot - eps * scale2) {
                best_dot = d;
                best = k;
            }
        }
        if (best < 0)
            break; // optimal: no hull vertex improves
        if (std::find(corral.begin(), corral.end(), best) == corral.end()) {
            corral.push_back(best);
            lambda.conservativeResize(corral.size());
            lambda(lambda.size() - 1) = 0.0;
        }

        // Minor cycle: affine minimizer over the corral, stepping back to
        // the feasible segment when coefficients go negative.
        for (;;) {
            const int c = static_cast<int>(corral.size());
            Eigen::MatrixXd sub(points.rows(), c);
            for (int k = 0; k < c; ++k)
                sub.col(k) = points.col(corral[static_cast<size_t>(k)]);

            Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(c + 1, c + 1);
            kkt.topLeftCorner(c, c) = sub.transpose() * sub;
            kkt.topRightCorner(c, 1).setOnes();
            kkt.bottomLeftCorner(1, c).setOnes();
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(c + 1);
            rhs(c) = 1.0;
            const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
            Eigen::VectorXd alpha = sol.head(c);

            if ((alpha.array() > eps).all()) {
                lambda = alpha;
                x = sub * lambda;
                break;
            }
            double t = 1.0;
            for (int k = 0; k < c; ++k)
                if (alpha(k) < eps)
                    t = std::min(t, lambda(k) / (lambda(k) - alpha(k)));
            lambda = lambda + t * (alpha - lambda);

            std::vector<int> keep_idx;
            for (int k = 0; k < c; ++k)
                if (lambda(k) > eps)
                    keep_idx.push_back(k);
            if (keep_idx.empty())
                keep_idx.push_back(0);
            Eigen::VectorXd nl(keep_idx.size());
            std::vector<int> nc;
            for (size_t k = 0; k < keep_idx.size(); ++k) {
                nl(static_cast<int>(k)) = lambda(keep_idx[k]);
                nc.push_back(corral[static_cast<size_t>(keep_idx[k])]);
            }
            nl /= nl.sum();
            lambda = nl;
            corral = nc;
            Eigen::MatrixXd sub2(points.rows(), static_cast<int>(corral.size()));
            for (size_t k = 0; k < corral.size(); ++k)
                sub2.col(static_cast<int>(k)) = points.col(corral[k]);
            x = sub2 * lambda;
            if (corral.size() == 1)
                break;
        }
    }

    weights_out = Eigen::VectorXd::Zero(m);
    for (size_t k = 0; k < corral.size(); ++k)
        weights_out(corral[k]) = lambda(static_cast<int>(k));
    return x;
}

} // namespace

DescentResult descent_direction(const Polygon& p, const std::vector<PairIndex>& active,
                                double stationarity_tol)
{
    if (active.empty())
        throw error("descent_direction needs a nonempty active set");
    const int dim = 2 * (p.rank() - 1);
    Eigen::MatrixXd g(dim, static_cast<int>(active.size()));
    for (size_t k = 0; k < active.size(); ++k) {
        const auto grad = gldim_gradient(p, active[k]);
        for (int r = 0; r < dim; ++r)
            g(r, static_cast<int>(k)) = grad[static_cast<size_t>(r)];
    }

    Eigen::VectorXd weights;
    const Eigen::VectorXd x = min_norm_point(g, weights);

    DescentResult out;
    out.min_norm = x.norm();
    out.weights.assign(weights.data(), weights.data() + weights.size());
    if (out.min_norm < stationarity_tol) {
        out.stationary = true;
        return out;
    }
    out.direction.resize(static_cast<size_t>(dim));
    for (int r = 0; r < dim; ++r)
        out.direction[static_cast<size_t>(r)] = -x(r);
    return out;
}

namespace {

// Max bracket of an already-validated convex polygon.
double raw_gldim_value(const Polygon& p)
{
    double best = 0.0;
    for (int i = 0; i < p.rank(); ++i)
        for (int j = i + 1; j <= p.rank(); ++j)
            best = std::max(best, bracket_angle(p, i, j));
    return best;
}

} // namespace

StepOutcome flow_step(const Polygon& p, const FlowConfig& cfg, const std::vector<PairIndex>& carried)
{
    cfg.validate();
    if (!is_convex(p))
        throw nonconvex_polygon_error("flow_step needs a convex polygon");

    std::vector<std::pair<double, PairIndex>> brackets;
    for (int i = 0; i < p.rank(); ++i)
        for (int j = i + 1; j <= p.rank(); ++j)
            brackets.push_back({bracket_angle(p, i, j), {i, j}});
    double current = 0.0;
    for (const auto& b : brackets)
        current = std::max(current, b.first);

    // Base working set: pairs within active_tol of the max, plus carried
    // pairs whose gap has not yet grown past ten times the tolerance.
    std::set<PairIndex> base;
    for (const auto& b : brackets)
        if (b.first >= current - cfg.active_tol)
            base.insert(b.second);
    for (const auto& pr : carried)
        if (bracket_angle(p, pr.first, pr.second) >= current - 10.0 * cfg.active_tol)
            base.insert(pr);

    const auto stratum = stratum_rank(p, cfg.active_tol);

    StepOutcome out;
    out.polygon = p;
    out.working_set.assign(base.begin(), base.end());
    out.record.gldim = current;
    out.record.active = stratum.active;
    out.record.s = stratum.s;
    out.record.rank = stratum.rank;
    out.record.vertices = p.vertices;

    // The subdifferential is the hull of the gradients of pairs within
    // active_tol of the max; stationarity is decided there.  When the
    // resulting step survives only deep backtracking, a wall sits just
    // below the activation window: the window is then escalated and the
    // direction recomputed, so the flow follows the wall into the next
    // stratum instead of crawling along it.
    const double healthy_step = cfg.initial_step * std::pow(cfg.shrink, 6);

    struct Best {
        Polygon polygon;
        double value = 0.0;
        double t = 0.0;
        std::vector<PairIndex> working;
    };
    std::optional<Best> best;

    double eps = cfg.active_tol;
    size_t prev_size = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::set<PairIndex> work = base;
        for (const auto& b : brackets)
            if (b.first >= current - eps)
                work.insert(b.second);

        if (attempt == 0 || work.size() != prev_size) {
            prev_size = work.size();
            std::vector<PairIndex> working(work.begin(), work.end());
            const auto descent = descent_direction(p, working, cfg.stationarity_tol);
            if (attempt == 0) {
                out.record.min_norm = descent.min_norm;
                if (descent.stationary) {
                    out.halted = true;
                    out.reason = StopReason::stationary;
                    return out;
                }
            }
            if (!descent.stationary) {
                const double before = best ? best->value : current;
                // Walk the geometric step grid downward and keep the point
                // of maximal decrease: the value along the ray dips through
                // a valley and rises back toward the current value, so stop
                // once it turns upward again.
                double t = cfg.initial_step;
                double prev_v = std::numeric_limits<double>::infinity();
                bool seen_accept = false;
                for (int k = 0; k < cfg.max_backtracks; ++k, t *= cfg.shrink) {
                    Polygon cand = displaced(p, descent.direction, t);
                    if (!feasible(cand))
                        continue;
                    const double v = raw_gldim_value(cand);
                    if (v < current) {
                        seen_accept = true;
                        if (!best || v < best->value)
                            best = Best{std::move(cand), v, t, working};
                    }
                    if (seen_accept && v > prev_v)
                        break; // past the valley
                    prev_v = v;
                }
                const bool healthy = best && best->t >= healthy_step;
                const bool improved = best && best->value < before;
                if (healthy || (attempt > 0 && !improved))
                    break; // wider windows have stopped paying off
            }
        }
        if (eps > 0.1)
            break;
        eps *= 32.0;
    }

    if (best) {
        out.polygon = std::move(best->polygon);
        out.record.accepted_step = best->t;
        out.working_set = std::move(best->working);
        return out;
    }
    out.halted = true;
    out.reason = StopReason::line_search_exhausted;
    return out;
}

FlowTrace run_flow(const Polygon& start, const FlowConfig& cfg)
{
    cfg.validate();
    FlowTrace trace;
    Polygon p = start;
    std::vector<PairIndex> carried;
    double last = 0.0;
    int stall = 0;

    for (int step = 0; step < cfg.max_steps; ++step) {
        auto outcome = flow_step(p, cfg, carried);
        outcome.record.step = step;
        trace.steps.push_back(outcome.record);

        if (outcome.halted) {
            trace.reason = outcome.reason;
            return trace;
        }
        if (cfg.target && outcome.record.gldim <= *cfg.target) {
            trace.reason = StopReason::target_reached;
            return trace;
        }
        if (step > 0 && last - outcome.record.gldim < cfg.stop_tol) {
            if (++stall >= cfg.stall_window) {
                trace.reason = StopReason::stalled;
                return trace;
            }
        } else {
            stall = 0;
        }
        last = outcome.record.gldim;
        p = std::move(outcome.polygon);
        carried = std::move(outcome.working_set);
    }
    trace.reason = StopReason::max_steps;
    return trace;
}

StratumInfo stratum_rank(const Polygon& p, double active_tol)
{
    if (!is_convex(p))
        throw nonconvex_polygon_error("stratum_rank needs a convex polygon");
    const auto g = gldim_polygon(p, active_tol);

    StratumInfo info;
    info.active = g.argmax;
    info.s = static_cast<int>(g.argmax.size());
    if (info.s <= 1)
        return info; // no constraints

    const int dim = 2 * (p.rank() - 1);
    const auto g0 = gldim_gradient(p, g.argmax.front());
    Eigen::MatrixXd jac(info.s - 1, dim);
    for (int k = 1; k < info.s; ++k) {
        const auto gk = gldim_gradient(p, g.argmax[static_cast<size_t>(k)]);
        for (int c = 0; c < dim; ++c)
            jac(k - 1, c) = gk[static_cast<size_t>(c)] - g0[static_cast<size_t>(c)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0)
        return info;
    const double cutoff = 1e-8 * sv(0);
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff && sv(0) > 0.0)
            ++info.rank;
    return info;
}

const char* to_string(StopReason r)
{
    switch (r) {
    case StopReason::running: return "running";
    case StopReason::stationary: return "stationary";
    case StopReason::line_search_exhausted: return "line-search-exhausted";
    case StopReason::stalled: return "stalled";
    case StopReason::target_reached: return "target-reached";
    case StopReason::max_steps: return "max-steps";
    }
    return "unknown";
}

} // namespace stabflow
