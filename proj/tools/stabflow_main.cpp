// stabflow: stability conditions, global dimension and descent flows for
// linear A_n quivers, plus numerical invariants of graded marked surfaces.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "stabflow/hom_oracle.hpp"
#include "stabflow/io.hpp"
#include "stabflow/sampling.hpp"
#include "stabflow/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace stabflow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNoConvergence = 4;

std::string sig12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string frac_str(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool machine_format(const std::string& fmt)
{
    return fmt == "machine";
}

struct DomainError {}; // sentinel used to funnel exit codes

int run_gldim(const std::string& file, const std::string& fmt)
{
    const Polygon poly = load_polygon(file);
    polygon_to_chart(poly); // reject polygons on or beyond the chart boundary
    const auto g = gldim_polygon(poly);
    if (machine_format(fmt)) {
        json doc;
        doc["gldim"] = g.value;
        json arr = json::array();
        for (const auto& pr : g.argmax)
            arr.push_back({pr.first, pr.second});
        doc["argmax"] = arr;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "gldim = " << sig12(g.value) << "\n";
        std::cout << "argmax pairs (" << g.argmax.size() << "):";
        for (const auto& pr : g.argmax)
            std::cout << " (" << pr.first << "," << pr.second << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int run_distance(const std::string& file1, const std::string& file2, const std::string& fmt)
{
    const Chart z1 = load_chart(file1);
    const Chart z2 = load_chart(file2);
    const double d = metric_distance(z1, z2);
    if (machine_format(fmt))
        std::cout << json{{"distance", d}}.dump() << "\n";
    else
        std::cout << "distance = " << sig12(d) << "\n";
    return kExitOk;
}

int run_hn(const std::string& file, int lo, int hi, const std::string& fmt)
{
    const Chart chart = load_chart(file);
    const auto hn = hn_filtration(chart, {lo, hi, 0});
    if (machine_format(fmt)) {
        json arr = json::array();
        for (const auto& f : hn.factors)
            arr.push_back({{"lo", f.object.lo}, {"hi", f.object.hi}, {"phase", f.phase}});
        std::cout << json{{"factors", arr}}.dump() << "\n";
    } else {
        std::cout << "HN filtration of M[" << lo << "," << hi << "], " << hn.factors.size()
                  << " factor(s):\n";
        for (const auto& f : hn.factors)
            std::cout << "  M[" << f.object.lo << "," << f.object.hi
                      << "]  phase " << sig12(f.phase) << "\n";
    }
    return kExitOk;
}

int run_annulus(long long m, long long r, long long w, bool ceiling, const std::string& fmt)
{
    const auto cert = annulus_certificate(m, r, w, ceiling);
    if (machine_format(fmt)) {
        json doc;
        doc["m"] = m;
        doc["r"] = r;
        doc["w"] = w;
        doc["indices"] = cert.indices;
        json ph = json::array();
        for (const auto& p : cert.phases)
            ph.push_back(frac_str(p));
        doc["phases"] = ph;
        doc["gap"] = frac_str(cert.gap);
        doc["gd"] = frac_str(cert.gd);
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "annulus m=" << m << " r=" << r << " w=" << w
                  << (ceiling ? " (ceiling indices)" : "") << "\n";
        std::cout << "indices =";
        long long sum = 0;
        for (long long i : cert.indices) {
            std::cout << " " << i;
            sum += i;
        }
        std::cout << "   (sum " << sum << " = m+w)\n";
        std::cout << "phases  =";
        for (const auto& p : cert.phases)
            std::cout << " " << frac_str(p);
        std::cout << "\n";
        std::cout << "gap     = " << frac_str(cert.gap) << "\n";
        std::cout << "Gd      = " << frac_str(cert.gd) << "\n";
    }
    return kExitOk;
}

int run_critical_values(const std::string& file, bool negative, const std::string& fmt)
{
    const SurfaceData s = load_surface(file);
    const auto vals = critical_values(s, negative);
    if (machine_format(fmt)) {
        json arr = json::array();
        for (const auto& v : vals)
            arr.push_back(frac_str(v));
        std::cout << json{{"critical_values", arr}}.dump() << "\n";
    } else {
        std::cout << "critical values = {";
        for (size_t k = 0; k < vals.size(); ++k)
            std::cout << (k ? ", " : " ") << frac_str(vals[k]);
        std::cout << " }\n";
    }
    return kExitOk;
}

// Exhaustive cross-checks of the closed-form criteria, the greedy
// filtration and the intersection identity against the exact oracle.
int run_oracle_check(int n, std::uint64_t seed, int charts_per_rank, bool corrupt)
{
    if (n > oracle_bound()) {
        std::cerr << "rank " << n << " exceeds the oracle bound " << oracle_bound() << "\n";
        return kExitBadInput;
    }
    long long hom_checked = 0, hn_checked = 0, int_checked = 0, serre_checked = 0;

    for (int rank = 1; rank <= n; ++rank) {
        const auto objs = all_indecomposables(rank);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                for (int d = -1; d <= 2; ++d) {
                    int closed = hom_dim(a, b, d, rank);
                    if (corrupt && rank == n && a == objs.front() && b == objs.back() && d == 0)
                        closed ^= 1; // negative-control injection
                    const int exact = oracle_hom_dim(a, b, d, rank);
                    ++hom_checked;
                    if (closed != exact) {
                        std::cerr << "hom mismatch: n=" << rank << " [" << a.lo << "," << a.hi
                                  << "] -> [" << b.lo << "," << b.hi << "] degree " << d
                                  << ": criteria " << closed << ", oracle " << exact << "\n";
                        return kExitMismatch;
                    }
                }
                if (!a.same_orbit(b)) {
                    int total = 0;
                    for (int d = 0; d <= 1; ++d)
                        total += oracle_hom_dim(a, b, d, rank) + oracle_hom_dim(b, a, d, rank);
                    ++int_checked;
                    if (total != geometric_int_count(a, b, rank)) {
                        std::cerr << "intersection mismatch at n=" << rank << "\n";
                        return kExitMismatch;
                    }
                }
                if (a.lo >= 2) {
                    const auto tau = ar_translate(a);
                    ++serre_checked;
                    if (oracle_hom_dim(a, b, 1, rank) != oracle_hom_dim(b, *tau, 0, rank)) {
                        std::cerr << "Serre duality mismatch at n=" << rank << "\n";
                        return kExitMismatch;
                    }
                }
            }
        }
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(rank)));
        for (int c = 0; c < charts_per_rank; ++c) {
            const Chart chart = random_chart(rng, rank);
            for (const auto& a : objs) {
                const auto greedy = hn_filtration(chart, a);
                const auto brute = hn_filtration_brute_force(chart, a);
                ++hn_checked;
                if (greedy.factors.size() != brute.factors.size()) {
                    std::cerr << "HN mismatch at n=" << rank << "\n";
                    return kExitMismatch;
                }
                for (size_t k = 0; k < greedy.factors.size(); ++k)
                    if (greedy.factors[k].object != brute.factors[k].object ||
                        greedy.factors[k].phase != brute.factors[k].phase) {
                        std::cerr << "HN mismatch at n=" << rank << "\n";
                        return kExitMismatch;
                    }
            }
        }
    }
    std::cout << "oracle check up to rank " << n << ": " << hom_checked << " hom, "
              << hn_checked << " HN, " << int_checked << " intersection, "
              << serre_checked << " duality comparisons, all consistent\n";
    return kExitOk;
}

struct FlowArgs {
    std::string polygon_file;
    int random_rank = 0;
    std::uint64_t seed = 42;
    int runs = 1;
    int threads = 0;
    std::string trace_path;
    std::string svg_path;
    std::string format = "text";
    FlowConfig cfg;
    double target = 0.0;
    bool has_target = false;
};

fs::path numbered(const fs::path& base, int run, int runs)
{
    if (runs == 1)
        return base;
    fs::path p = base;
    const std::string stem = p.stem().string();
    const std::string ext = p.extension().string();
    return p.parent_path() / (stem + ".run" + std::to_string(run) + ext);
}

int run_flow_cmd(FlowArgs args)
{
    if (args.has_target)
        args.cfg.target = args.target;

    std::vector<Polygon> starts;
    if (!args.polygon_file.empty()) {
        const Polygon p = load_polygon(args.polygon_file);
        if (!is_convex(p))
            throw nonconvex_polygon_error("flow needs a convex starting polygon");
        starts.assign(static_cast<size_t>(args.runs), p);
    } else if (args.random_rank >= 2) {
        for (int r = 0; r < args.runs; ++r) {
            Rng rng(mix_seed(args.seed, static_cast<std::uint64_t>(r)));
            starts.push_back(random_convex_polygon(rng, args.random_rank));
        }
    } else {
        std::cerr << "flow needs a polygon file or --random N (N >= 2)\n";
        return kExitBadInput;
    }

    std::vector<FlowTrace> traces(starts.size());
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int nthreads = args.threads > 0 ? args.threads
                                          : std::max(1, std::min<int>(hw, static_cast<int>(starts.size())));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= starts.size())
                return;
            traces[k] = run_flow(starts[k], args.cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    bool any_max_steps = false;
    for (size_t k = 0; k < traces.size(); ++k) {
        const auto& tr = traces[k];
        if (!args.trace_path.empty())
            save_trace(numbered(args.trace_path, static_cast<int>(k), args.runs), tr);
        if (!args.svg_path.empty()) {
            std::ofstream out(numbered(args.svg_path, static_cast<int>(k), args.runs));
            out << render_flow_svg(tr);
        }
        const auto& last = tr.steps.back();
        if (machine_format(args.format)) {
            json doc;
            doc["run"] = k;
            doc["steps"] = tr.steps.size();
            doc["terminal_gldim"] = last.gldim;
            doc["s"] = last.s;
            doc["rank"] = last.rank;
            doc["reason"] = to_string(tr.reason);
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "run " << k << ": steps=" << tr.steps.size()
                      << " terminal gldim=" << sig12(last.gldim) << " s=" << last.s
                      << " rank=" << last.rank << " reason=" << to_string(tr.reason) << "\n";
        }
        if (tr.reason == StopReason::max_steps)
            any_max_steps = true;
    }
    return any_max_steps ? kExitNoConvergence : kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stability conditions, global dimension and descent flows for linear "
                 "A_n quivers; annulus and surface invariants"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

    auto* cmd_gldim = app.add_subcommand("gldim", "global dimension of a convex polygon");
    std::string gldim_file;
    cmd_gldim->add_option("polygon", gldim_file, "polygon file")->required();

    auto* cmd_flow = app.add_subcommand("flow", "gldim descent flow");
    FlowArgs fa;
    cmd_flow->add_option("polygon", fa.polygon_file, "starting polygon file");
    cmd_flow->add_option("--random", fa.random_rank, "random convex start of this rank");
    cmd_flow->add_option("--seed", fa.seed, "RNG seed");
    cmd_flow->add_option("--runs", fa.runs, "number of trajectories")->check(CLI::PositiveNumber);
    cmd_flow->add_option("--threads", fa.threads, "worker threads (0 = auto)");
    cmd_flow->add_option("--steps", fa.cfg.max_steps, "maximum accepted steps");
    cmd_flow->add_option("--eta", fa.cfg.initial_step, "initial line-search step");
    cmd_flow->add_option("--shrink", fa.cfg.shrink, "backtracking shrink factor");
    cmd_flow->add_option("--tol", fa.cfg.stop_tol, "gldim improvement threshold");
    cmd_flow->add_option("--active-tol", fa.cfg.active_tol, "pair activation threshold");
    auto* topt = cmd_flow->add_option("--target", fa.target, "stop when gldim <= target");
    cmd_flow->add_option("--trace", fa.trace_path, "write trace file");
    cmd_flow->add_option("--svg", fa.svg_path, "write SVG rendering");

    auto* cmd_annulus = app.add_subcommand("annulus", "annulus certificate");
    long long am = 0, ar = 0, aw = 0;
    bool ceiling = false;
    cmd_annulus->add_option("-m", am, "marked points on the cycle boundary")->required();
    cmd_annulus->add_option("-r", ar, "marked points on the other boundary")->required();
    cmd_annulus->add_option("-w", aw, "winding number")->required();
    cmd_annulus->add_flag("--ceiling-indices", ceiling, "ceiling-difference index variant");

    auto* cmd_check = app.add_subcommand("oracle-check", "cross-check criteria against the oracle");
    int check_n = 6;
    std::uint64_t check_seed = 42;
    int check_charts = 200;
    bool corrupt = false;
    cmd_check->add_option("-n", check_n, "maximum rank");
    cmd_check->add_option("--seed", check_seed, "RNG seed for HN charts");
    cmd_check->add_option("--charts", check_charts, "random charts per rank");
    cmd_check->add_flag("--corrupt-injection", corrupt, "negative control: inject one mismatch");

    auto* cmd_crit = app.add_subcommand("critical-values", "critical values of a surface");
    std::string surf_file;
    bool negative = false;
    cmd_crit->add_option("surface", surf_file, "surface file")->required();
    cmd_crit->add_flag("--flag-negative-windings", negative, "admit negative windings");

    auto* cmd_dist = app.add_subcommand("distance", "metric distance between charts");
    std::string dist1, dist2;
    cmd_dist->add_option("chart1", dist1)->required();
    cmd_dist->add_option("chart2", dist2)->required();

    auto* cmd_hn = app.add_subcommand("hn", "Harder-Narasimhan filtration");
    std::string hn_file;
    int hn_lo = 1, hn_hi = 1;
    cmd_hn->add_option("chart", hn_file)->required();
    cmd_hn->add_option("--lo", hn_lo, "interval lower end")->required();
    cmd_hn->add_option("--hi", hn_hi, "interval upper end")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*cmd_gldim)
            return run_gldim(gldim_file, format);
        if (*cmd_flow) {
            fa.format = format;
            fa.has_target = topt->count() > 0;
            return run_flow_cmd(fa);
        }
        if (*cmd_annulus) {
            if (am < 1 || ar < 1 || aw < 0) {
                std::cerr << "annulus needs m, r >= 1 and w >= 0\n";
                return kExitBadInput;
            }
            return run_annulus(am, ar, aw, ceiling, format);
        }
        if (*cmd_check)
            return run_oracle_check(check_n, check_seed, check_charts, corrupt);
        if (*cmd_crit)
            return run_critical_values(surf_file, negative, format);
        if (*cmd_dist)
            return run_distance(dist1, dist2, format);
        if (*cmd_hn)
            return run_hn(hn_file, hn_lo, hn_hi, format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const oracle_bound_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
