#pragma once

// Seeded randomness for experiments.  All randomness funnels through one
// generator so that runs are reproducible byte for byte.

#include <cstdint>
#include <random>

#include "stabflow/polygon_chart.hpp"

namespace stabflow {

/// Derive a per-stream seed from a base seed (splitmix64 step).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

/// Convex in-chart polygon: sorted random edge directions in [0, pi) with
/// random positive lengths, renormalized so the first edge is V_0 -> V_1 = 1.
Polygon random_convex_polygon(Rng& rng, int n);

/// Valid chart with phases bounded away from the boundary of [0,1).
Chart random_chart(Rng& rng, int n);

} // namespace stabflow
