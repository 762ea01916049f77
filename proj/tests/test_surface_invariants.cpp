#include <doctest.h>

#include "stabflow/an_category.hpp"
#include "stabflow/sampling.hpp"
#include "stabflow/surface_invariants.hpp"

using namespace stabflow;

namespace {

SurfaceData disk(long long n)
{
    return make_surface(0, {{n + 1, -2}});
}

SurfaceData annulus(long long m, long long r, long long w)
{
    return make_surface(0, {{m, w}, {r, -w}});
}

} // namespace

TEST_CASE("surface rank")
{
    CHECK(surface_rank(disk(4)) == 4);
    CHECK(surface_rank(annulus(3, 2, 2)) == 5);
    CHECK(surface_rank(make_surface(1, {{1, 2}})) == 2);
}

TEST_CASE("winding constraint and rank guard")
{
    CHECK_THROWS_AS(make_surface(0, {{3, 1}, {2, -2}}), invalid_surface_error);
    CHECK_THROWS_AS(make_surface(0, {{2, 0}}), invalid_surface_error);  // needs sum -2
    CHECK_THROWS_AS(make_surface(0, {{1, -2}}), invalid_surface_error); // rank 0
    CHECK_THROWS_AS(make_surface(0, {}), invalid_surface_error);
    CHECK_THROWS_AS(make_surface(-1, {{3, -8}}), invalid_surface_error);
    CHECK_THROWS_AS(make_surface(0, {{0, -2}}), invalid_surface_error);

    Rng rng(mix_seed(97, 0));
    for (int c = 0; c < 200; ++c) {
        const long long g = static_cast<long long>(rng.uniform(0.0, 3.0));
        const long long b = 1 + static_cast<long long>(rng.uniform(0.0, 3.0));
        std::vector<Boundary> bs;
        long long sum = 0;
        for (long long k = 0; k < b; ++k) {
            Boundary bd{1 + static_cast<long long>(rng.uniform(0.0, 4.0)),
                        static_cast<long long>(rng.uniform(-4.0, 5.0))};
            sum += bd.winding;
            bs.push_back(bd);
        }
        const long long want = 4 * g - 4 + 2 * b;
        if (sum != want) {
            CHECK_THROWS_AS(make_surface(g, bs), invalid_surface_error);
            bs.back().winding += want - sum; // repair the constraint
        }
        long long aleph = 0;
        for (const auto& bd : bs)
            aleph += bd.marked_points;
        if (2 * g + b + aleph - 2 >= 2)
            CHECK_NOTHROW(make_surface(g, bs));
    }
}

TEST_CASE("critical values")
{
    CHECK(critical_values(annulus(3, 2, 2)) ==
          std::vector<Rational>{Rational(1), Rational(5, 3)});
    CHECK(critical_values(annulus(3, 2, 0)) == std::vector<Rational>{Rational(1)});
    // disk: only the negative-winding variant exposes (n-1)/(n+1)
    CHECK(critical_values(disk(4)) == std::vector<Rational>{Rational(1)});
    CHECK(critical_values(disk(4), true) ==
          std::vector<Rational>{Rational(3, 5), Rational(1)});
}

TEST_CASE("annulus index distributions")
{
    CHECK(annulus_indices(3, 2, 2) == std::vector<long long>{1, 2, 2});
    CHECK(annulus_indices(3, 2, 2, true) == std::vector<long long>{2, 2, 1});
    CHECK(annulus_indices(1, 1, 7) == std::vector<long long>{8});
    CHECK(annulus_indices(4, 1, 0) == std::vector<long long>{1, 1, 1, 1});
    CHECK_THROWS_AS(annulus_indices(3, 2, -1), unsupported_winding_error);
    CHECK_THROWS_AS(annulus_indices(0, 2, 1), invalid_surface_error);

    for (long long m = 1; m <= 12; ++m) {
        for (long long w = 0; w <= 12; ++w) {
            for (bool ceil : {false, true}) {
                const auto idx = annulus_indices(m, 1, w, ceil);
                long long sum = 0;
                const long long lo = 1 + w / m;
                for (long long i : idx) {
                    sum += i;
                    CHECK(i >= lo);
                    CHECK(i <= lo + 1);
                }
                CHECK(sum == m + w);
            }
        }
    }
}

TEST_CASE("ceiling indices restore the first-index bound")
{
    for (long long m = 2; m <= 8; ++m)
        for (long long w = 1; w < m; ++w) {
            CHECK(annulus_indices(m, 1, w).front() == 1);       // floor formula
            CHECK(annulus_indices(m, 1, w, true).front() >= 2); // ceiling variant
        }
}

TEST_CASE("annulus certificates")
{
    const auto c1 = annulus_certificate(3, 1, 2);
    CHECK(c1.gap == Rational(5, 3));
    CHECK(c1.gd == Rational(5, 3));
    CHECK(c1.phases == std::vector<Rational>{Rational(0), Rational(2, 3), Rational(1, 3)});

    const auto c2 = annulus_certificate(2, 2, 0);
    CHECK(c2.gap == Rational(1));
    CHECK(c2.gd == Rational(1));

    const auto c3 = annulus_certificate(1, 1, 3);
    CHECK(c3.gap == Rational(4));
    CHECK(c3.gd == Rational(4));
    CHECK(c3.phases == std::vector<Rational>{Rational(0)});
}

TEST_CASE("certificate identities hold exactly for both variants")
{
    for (long long m = 1; m <= 8; ++m) {
        for (long long r = 1; r <= 3; ++r) {
            for (long long w = 0; w <= 8; ++w) {
                for (bool ceil : {false, true}) {
                    const auto cert = annulus_certificate(m, r, w, ceil);
                    long long sum = 0;
                    for (long long i : cert.indices)
                        sum += i;
                    CHECK(sum == m + w);
                    CHECK(cert.gap == Rational(m + w, m));
                    for (long long j = 0; j < m; ++j) {
                        const Rational step =
                            cert.phases[static_cast<size_t>((j + 1) % m)] -
                            cert.phases[static_cast<size_t>(j)] +
                            Rational(cert.indices[static_cast<size_t>(j)]);
                        CHECK(step == cert.gap);
                    }
                    // the certified value is a critical value of the annulus
                    const auto vals = critical_values(annulus(m, r, w));
                    CHECK(std::find(vals.begin(), vals.end(), cert.gd) != vals.end());
                }
            }
        }
    }
}

TEST_CASE("cycle values")
{
    CHECK(cycle_value(3, 2) == Rational(5, 3));
    CHECK(cycle_value(6, 0) == Rational(1));
    CHECK(cycle_value(5, -2) == Rational(3, 5));
    CHECK_THROWS_AS(cycle_value(0, 1), invalid_surface_error);

    // disk cycle value matches the Coxeter-number formula 1 - 2/h
    for (int n = 1; n <= 12; ++n) {
        const long long h = coxeter_number(n);
        CHECK(cycle_value(n + 1, -2) == Rational(h - 2, h));
        CHECK(cycle_value(n + 1, -2) == Rational(n - 1, n + 1));
    }
}
