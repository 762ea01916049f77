#pragma once

#include <stdexcept>
#include <string>

namespace stabflow {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_rank_error : public error {
public:
    using error::error;
};

class rank_mismatch_error : public error {
public:
    using error::error;
};

/// A central charge that is zero or outside the upper half plane
/// H = { r e^{i pi t} : r > 0, t in [0,1) }.
class degenerate_charge_error : public error {
public:
    using error::error;
};

/// Polygon fails a structural requirement (self-intersection, repeated
/// vertices, wrong normalization, clockwise labeling).
class malformed_polygon_error : public error {
public:
    using error::error;
};

class nonconvex_polygon_error : public error {
public:
    using error::error;
};

/// Convex polygon whose edge vectors leave the standard-heart chart.
class chart_out_of_range_error : public error {
public:
    using error::error;
};

class not_in_chart_error : public error {
public:
    using error::error;
};

class unnormalized_chart_error : public error {
public:
    using error::error;
};

class singular_configuration_error : public error {
public:
    using error::error;
};

class invalid_surface_error : public error {
public:
    using error::error;
};

class unsupported_winding_error : public error {
public:
    using error::error;
};

/// Rank above the configured cap for the exact linear-algebra oracle.
class oracle_bound_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace stabflow
