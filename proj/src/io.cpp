#include "stabflow/io.hpp"

#include <json.hpp>

#include <fstream>

namespace stabflow {

namespace {

using nlohmann::json;

json read_document(const std::filesystem::path& path, const char* schema)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != schema)
        throw parse_error(path.string() + ": expected schema \"" + schema + "\"");
    return doc;
}

void write_document(const std::filesystem::path& path, const json& doc)
{
    std::ofstream out(path);
    if (!out)
        throw error("cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

json complex_list(const std::vector<Complex>& zs)
{
    json arr = json::array();
    for (const auto& z : zs)
        arr.push_back({z.real(), z.imag()});
    return arr;
}

std::vector<Complex> parse_complex_list(const json& arr, const std::string& what)
{
    if (!arr.is_array())
        throw parse_error(what + " must be an array of [re, im] pairs");
    std::vector<Complex> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
            throw parse_error(what + " entries must be [re, im] pairs");
        out.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return out;
}

} // namespace

Chart load_chart(const std::filesystem::path& path)
{
    const json doc = read_document(path, kChartSchema);
    if (!doc.contains("n") || !doc.contains("Z"))
        throw parse_error(path.string() + ": chart needs fields n and Z");
    auto z = parse_complex_list(doc["Z"], "Z");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() != static_cast<int>(z.size()))
        throw parse_error(path.string() + ": n does not match the length of Z");
    return Chart(std::move(z));
}

void save_chart(const std::filesystem::path& path, const Chart& chart)
{
    json doc;
    doc["schema"] = kChartSchema;
    doc["n"] = chart.rank();
    doc["Z"] = complex_list(chart.charges());
    write_document(path, doc);
}

Polygon load_polygon(const std::filesystem::path& path)
{
    const json doc = read_document(path, kPolygonSchema);
    if (!doc.contains("n") || !doc.contains("vertices"))
        throw parse_error(path.string() + ": polygon needs fields n and vertices");
    auto vs = parse_complex_list(doc["vertices"], "vertices");
    if (!doc["n"].is_number_integer() ||
        doc["n"].get<int>() != static_cast<int>(vs.size()) - 1)
        throw parse_error(path.string() + ": n does not match the vertex count");
    return make_polygon(std::move(vs));
}

void save_polygon(const std::filesystem::path& path, const Polygon& polygon)
{
    json doc;
    doc["schema"] = kPolygonSchema;
    doc["n"] = polygon.rank();
    doc["vertices"] = complex_list(polygon.vertices);
    write_document(path, doc);
}

SurfaceData load_surface(const std::filesystem::path& path)
{
    const json doc = read_document(path, kSurfaceSchema);
    if (!doc.contains("genus") || !doc.contains("boundaries"))
        throw parse_error(path.string() + ": surface needs fields genus and boundaries");
    if (!doc["genus"].is_number_integer() || !doc["boundaries"].is_array())
        throw parse_error(path.string() + ": malformed surface fields");
    std::vector<Boundary> bs;
    for (const auto& item : doc["boundaries"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw parse_error(path.string() + ": boundaries must be [m, w] integer pairs");
        bs.push_back({item[0].get<long long>(), item[1].get<long long>()});
    }
    return make_surface(doc["genus"].get<long long>(), std::move(bs));
}

void save_surface(const std::filesystem::path& path, const SurfaceData& surface)
{
    json doc;
    doc["schema"] = kSurfaceSchema;
    doc["genus"] = surface.genus;
    json bs = json::array();
    for (const auto& b : surface.boundaries)
        bs.push_back({b.marked_points, b.winding});
    doc["boundaries"] = bs;
    write_document(path, doc);
}

namespace {

json trace_to_json(const FlowTrace& trace)
{
    json doc;
    doc["schema"] = kTraceSchema;
    doc["reason"] = to_string(trace.reason);
    json steps = json::array();
    for (const auto& r : trace.steps) {
        json rec;
        rec["step"] = r.step;
        rec["gldim"] = r.gldim;
        rec["s"] = r.s;
        rec["rank"] = r.rank;
        rec["accepted_step"] = r.accepted_step;
        rec["min_norm"] = r.min_norm;
        json act = json::array();
        for (const auto& pr : r.active)
            act.push_back({pr.first, pr.second});
        rec["active"] = act;
        rec["vertices"] = complex_list(r.vertices);
        steps.push_back(rec);
    }
    doc["steps"] = steps;
    return doc;
}

} // namespace

std::string trace_to_string(const FlowTrace& trace)
{
    return trace_to_json(trace).dump(2) + "\n";
}

void save_trace(const std::filesystem::path& path, const FlowTrace& trace)
{
    std::ofstream out(path);
    if (!out)
        throw error("cannot write " + path.string());
    out << trace_to_string(trace);
}

FlowTrace load_trace(const std::filesystem::path& path)
{
    const json doc = read_document(path, kTraceSchema);
    FlowTrace trace;
    const std::string reason = doc.value("reason", "running");
    for (StopReason r : {StopReason::running, StopReason::stationary,
                         StopReason::line_search_exhausted, StopReason::stalled,
                         StopReason::target_reached, StopReason::max_steps})
        if (reason == to_string(r))
            trace.reason = r;
    if (!doc.contains("steps") || !doc["steps"].is_array())
        throw parse_error(path.string() + ": trace needs a steps array");
    for (const auto& rec : doc["steps"]) {
        StepRecord r;
        r.step = rec.value("step", 0);
        r.gldim = rec.value("gldim", 0.0);
        r.s = rec.value("s", 0);
        r.rank = rec.value("rank", 0);
        r.accepted_step = rec.value("accepted_step", 0.0);
        r.min_norm = rec.value("min_norm", 0.0);
        if (rec.contains("active"))
            for (const auto& pr : rec["active"])
                r.active.emplace_back(pr[0].get<int>(), pr[1].get<int>());
        if (rec.contains("vertices"))
            r.vertices = parse_complex_list(rec["vertices"], "vertices");
        trace.steps.push_back(std::move(r));
    }
    return trace;
}

} // namespace stabflow
