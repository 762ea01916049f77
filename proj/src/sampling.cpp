#include "stabflow/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stabflow {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Polygon random_convex_polygon(Rng& rng, int n)
{
    if (n < 2)
        throw invalid_rank_error("random convex polygon needs rank >= 2");
    constexpr double kPi = std::numbers::pi;
    for (;;) {
        std::vector<double> dirs(static_cast<size_t>(n));
        for (auto& d : dirs)
            d = rng.uniform(0.0, kPi);
        std::sort(dirs.begin(), dirs.end());
        const double base = dirs.front();
        for (auto& d : dirs)
            d -= base;

        bool separated = true;
        for (size_t k = 0; k + 1 < dirs.size(); ++k)
            if (dirs[k + 1] - dirs[k] < 1e-6)
                separated = false;
        if (!separated || dirs.back() > kPi - 1e-6)
            continue; // resample near-degenerate direction sets

        std::vector<double> lens(static_cast<size_t>(n));
        for (auto& l : lens)
            l = rng.uniform(0.4, 1.8);
        const double scale = 1.0 / lens.front();

        Polygon p;
        p.vertices.reserve(static_cast<size_t>(n) + 1);
        Complex sum{0.0, 0.0};
        p.vertices.push_back(sum);
        for (int k = 0; k < n; ++k) {
            sum += std::polar(lens[static_cast<size_t>(k)] * scale, dirs[static_cast<size_t>(k)]);
            p.vertices.push_back(sum);
        }
        return p;
    }
}

Chart random_chart(Rng& rng, int n)
{
    if (n < 1)
        throw invalid_rank_error("random chart needs rank >= 1");
    constexpr double kPi = std::numbers::pi;
    std::vector<Complex> z;
    z.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        z.push_back(std::polar(rng.uniform(0.25, 2.0), kPi * rng.uniform(0.0, 0.999)));
    return Chart(std::move(z));
}

} // namespace stabflow
