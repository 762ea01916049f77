#pragma once

// Flat-file formats.  Every document carries a schema field; unknown
// schemas are rejected so traces stay readable across versions.

#include <filesystem>
#include <string>

#include "stabflow/flow.hpp"
#include "stabflow/polygon_chart.hpp"
#include "stabflow/surface_invariants.hpp"

namespace stabflow {

inline constexpr const char* kChartSchema = "stabflow/chart/1";
inline constexpr const char* kPolygonSchema = "stabflow/polygon/1";
inline constexpr const char* kSurfaceSchema = "stabflow/surface/1";
inline constexpr const char* kTraceSchema = "stabflow/trace/1";

Chart load_chart(const std::filesystem::path& path);
void save_chart(const std::filesystem::path& path, const Chart& chart);

Polygon load_polygon(const std::filesystem::path& path);
void save_polygon(const std::filesystem::path& path, const Polygon& polygon);

SurfaceData load_surface(const std::filesystem::path& path);
void save_surface(const std::filesystem::path& path, const SurfaceData& surface);

void save_trace(const std::filesystem::path& path, const FlowTrace& trace);
FlowTrace load_trace(const std::filesystem::path& path);

std::string trace_to_string(const FlowTrace& trace);

} // namespace stabflow
