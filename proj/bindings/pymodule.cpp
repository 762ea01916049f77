// Python bindings for the main operations: the A_n interval calculus, the
// stability engine, the polygon chart, the descent flow and the surface
// invariants.  Exact rationals cross the boundary as fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stabflow/flow.hpp"
#include "stabflow/hom_oracle.hpp"
#include "stabflow/sampling.hpp"
#include "stabflow/surface_invariants.hpp"
#include "stabflow/svg.hpp"

namespace py = pybind11;
using namespace stabflow;

namespace {

py::object to_fraction(const Rational& r)
{
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.numerator(), r.denominator());
}

py::list fractions(const std::vector<Rational>& rs)
{
    py::list out;
    for (const auto& r : rs)
        out.append(to_fraction(r));
    return out;
}

} // namespace

PYBIND11_MODULE(stabflow, m)
{
    m.doc() = "stability conditions, global dimension and descent flows for linear A_n "
              "quivers; graded-surface invariants";

    py::register_exception<error>(m, "StabflowError");

    py::class_<Interval>(m, "Interval")
        .def(py::init([](int lo, int hi, int shift) { return Interval{lo, hi, shift}; }),
             py::arg("lo"), py::arg("hi"), py::arg("shift") = 0)
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def_readonly("shift", &Interval::shift)
        .def("same_orbit", &Interval::same_orbit)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Interval& a) {
            return py::hash(py::make_tuple(a.lo, a.hi, a.shift));
        })
        .def("__repr__", [](const Interval& a) {
            std::string s = "Interval(" + std::to_string(a.lo) + ", " + std::to_string(a.hi);
            if (a.shift)
                s += ", shift=" + std::to_string(a.shift);
            return s + ")";
        });

    m.def("all_indecomposables", &all_indecomposables, py::arg("n"));
    m.def("coxeter_number", &coxeter_number, py::arg("n"));
    m.def("hom_dim", &hom_dim, py::arg("a"), py::arg("b"), py::arg("degree"), py::arg("n"));
    m.def("hom_dims", &hom_dims, py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("oracle_hom_dim", &oracle_hom_dim, py::arg("a"), py::arg("b"), py::arg("degree"),
          py::arg("n"));
    m.def("oracle_hom_dims", &oracle_hom_dims, py::arg("a"), py::arg("b"), py::arg("n"));
    m.def("oracle_bound", &oracle_bound);
    m.def("ar_translate", &ar_translate, py::arg("a"),
          "AR translate; None marks the projectives");
    m.def("geometric_int_count", &geometric_int_count, py::arg("a"), py::arg("b"), py::arg("n"));

    py::class_<Chart>(m, "Chart")
        .def(py::init<std::vector<Complex>>(), py::arg("charges"))
        .def_property_readonly("rank", &Chart::rank)
        .def_property_readonly("charges", &Chart::charges)
        .def("charge", &Chart::charge, py::arg("interval"))
        .def("__repr__", [](const Chart& c) {
            return "Chart(rank=" + std::to_string(c.rank()) + ")";
        });

    m.def("phase_of_heart_object", &phase_of_heart_object, py::arg("chart"), py::arg("interval"));

    py::class_<HNFactor>(m, "HNFactor")
        .def_readonly("object", &HNFactor::object)
        .def_readonly("phase", &HNFactor::phase);
    py::class_<HNFiltration>(m, "HNFiltration")
        .def_readonly("factors", &HNFiltration::factors)
        .def("top_phase", &HNFiltration::top_phase)
        .def("bottom_phase", &HNFiltration::bottom_phase)
        .def("mass", &HNFiltration::mass);
    m.def("hn_filtration", &hn_filtration, py::arg("chart"), py::arg("interval"));
    m.def("hn_filtration_brute_force", &hn_filtration_brute_force, py::arg("chart"),
          py::arg("interval"));

    py::class_<Semistable>(m, "Semistable")
        .def_readonly("object", &Semistable::object)
        .def_readonly("phase", &Semistable::phase)
        .def_readonly("stable", &Semistable::stable);
    m.def("semistable_indecomposables", &semistable_indecomposables, py::arg("chart"));
    m.def("gldim", &gldim, py::arg("chart"));

    py::class_<CPPair>(m, "CPPair")
        .def_readonly("source", &CPPair::source)
        .def_readonly("target", &CPPair::target)
        .def_readonly("degree", &CPPair::degree)
        .def_readonly("gap", &CPPair::gap);
    py::class_<CPPairSet>(m, "CPPairSet")
        .def_readonly("pairs", &CPPairSet::pairs)
        .def_readonly("orbit_count", &CPPairSet::orbit_count)
        .def_readonly("gldim_value", &CPPairSet::gldim_value);
    m.def("cp_pairs", &cp_pairs, py::arg("chart"), py::arg("tol") = 1e-9);
    m.def("metric_distance", &metric_distance, py::arg("z1"), py::arg("z2"));

    py::class_<Polygon>(m, "Polygon")
        .def(py::init([](std::vector<Complex> vs) { return make_polygon(std::move(vs)); }),
             py::arg("vertices"))
        .def_readonly("vertices", &Polygon::vertices)
        .def_property_readonly("rank", &Polygon::rank)
        .def("__repr__", [](const Polygon& p) {
            return "Polygon(rank=" + std::to_string(p.rank()) + ")";
        });

    m.def("regular_polygon", &regular_polygon, py::arg("n"));
    m.def("is_convex", &is_convex, py::arg("polygon"));
    m.def("is_simple", &is_simple, py::arg("polygon"));
    m.def("signed_area", &signed_area, py::arg("polygon"));
    m.def("polygon_to_chart", &polygon_to_chart, py::arg("polygon"));
    m.def("chart_to_polygon", &chart_to_polygon, py::arg("chart"));
    m.def("bracket_angle", &bracket_angle, py::arg("polygon"), py::arg("i"), py::arg("j"));
    m.def(
        "gldim_polygon",
        [](const Polygon& p, double tie_tol) {
            const auto g = gldim_polygon(p, tie_tol);
            return py::make_tuple(g.value, g.argmax);
        },
        py::arg("polygon"), py::arg("tie_tol") = 1e-9,
        "returns (value, argmax index pairs)");

    py::class_<FlowConfig>(m, "FlowConfig")
        .def(py::init<>())
        .def_readwrite("initial_step", &FlowConfig::initial_step)
        .def_readwrite("shrink", &FlowConfig::shrink)
        .def_readwrite("max_steps", &FlowConfig::max_steps)
        .def_readwrite("stop_tol", &FlowConfig::stop_tol)
        .def_readwrite("active_tol", &FlowConfig::active_tol)
        .def_readwrite("target", &FlowConfig::target)
        .def_readwrite("max_backtracks", &FlowConfig::max_backtracks)
        .def_readwrite("stationarity_tol", &FlowConfig::stationarity_tol)
        .def_readwrite("stall_window", &FlowConfig::stall_window);

    py::class_<StepRecord>(m, "StepRecord")
        .def_readonly("step", &StepRecord::step)
        .def_readonly("gldim", &StepRecord::gldim)
        .def_readonly("active", &StepRecord::active)
        .def_readonly("s", &StepRecord::s)
        .def_readonly("rank", &StepRecord::rank)
        .def_readonly("accepted_step", &StepRecord::accepted_step)
        .def_readonly("min_norm", &StepRecord::min_norm)
        .def_readonly("vertices", &StepRecord::vertices);

    py::class_<FlowTrace>(m, "FlowTrace")
        .def_readonly("steps", &FlowTrace::steps)
        .def("converged", &FlowTrace::converged)
        .def_property_readonly("reason",
                               [](const FlowTrace& t) { return std::string(to_string(t.reason)); })
        .def("terminal", &FlowTrace::terminal);

    m.def("gldim_gradient", &gldim_gradient, py::arg("polygon"), py::arg("pair"));
    m.def(
        "descent_direction",
        [](const Polygon& p, const std::vector<PairIndex>& active, double tol) {
            const auto d = descent_direction(p, active, tol);
            return py::make_tuple(d.stationary, d.min_norm, d.direction, d.weights);
        },
        py::arg("polygon"), py::arg("active"), py::arg("stationarity_tol") = 1e-10,
        "returns (stationary, min_norm, direction, weights)");
    m.def("run_flow", &run_flow, py::arg("start"), py::arg("config") = FlowConfig{});
    m.def(
        "stratum_rank",
        [](const Polygon& p, double active_tol) {
            const auto info = stratum_rank(p, active_tol);
            return py::make_tuple(info.s, info.rank, info.active);
        },
        py::arg("polygon"), py::arg("active_tol"), "returns (s, rank, active pairs)");

    py::class_<SurfaceData>(m, "SurfaceData")
        .def_property_readonly("genus", [](const SurfaceData& s) { return s.genus; })
        .def_property_readonly("boundaries", [](const SurfaceData& s) {
            py::list out;
            for (const auto& b : s.boundaries)
                out.append(py::make_tuple(b.marked_points, b.winding));
            return out;
        });
    m.def(
        "make_surface",
        [](long long genus, const std::vector<std::pair<long long, long long>>& bs) {
            std::vector<Boundary> boundaries;
            for (const auto& [mk, w] : bs)
                boundaries.push_back({mk, w});
            return make_surface(genus, std::move(boundaries));
        },
        py::arg("genus"), py::arg("boundaries"));
    m.def("surface_rank", &surface_rank, py::arg("surface"));
    m.def(
        "critical_values",
        [](const SurfaceData& s, bool include_negative_windings) {
            return fractions(critical_values(s, include_negative_windings));
        },
        py::arg("surface"), py::arg("include_negative_windings") = false);
    m.def("annulus_indices", &annulus_indices, py::arg("m"), py::arg("r"), py::arg("w"),
          py::arg("ceiling_variant") = false);
    m.def(
        "annulus_certificate",
        [](long long mm, long long r, long long w, bool ceiling) {
            const auto cert = annulus_certificate(mm, r, w, ceiling);
            py::dict out;
            out["m"] = cert.m;
            out["r"] = cert.r;
            out["w"] = cert.w;
            out["indices"] = cert.indices;
            out["phases"] = fractions(cert.phases);
            out["gap"] = to_fraction(cert.gap);
            out["gd"] = to_fraction(cert.gd);
            return out;
        },
        py::arg("m"), py::arg("r"), py::arg("w"), py::arg("ceiling_variant") = false);
    m.def(
        "cycle_value",
        [](long long mk, long long w) { return to_fraction(cycle_value(mk, w)); },
        py::arg("marked_points"), py::arg("winding"));

    m.def(
        "random_convex_polygon",
        [](int n, std::uint64_t seed) {
            Rng rng(seed);
            return random_convex_polygon(rng, n);
        },
        py::arg("n"), py::arg("seed"));
    m.def("render_flow_svg", &render_flow_svg, py::arg("trace"));
}
