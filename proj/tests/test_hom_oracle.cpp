#include <doctest.h>

#include <cstdlib>

#include "stabflow/hom_oracle.hpp"

using namespace stabflow;

TEST_CASE("oracle dimensions on small ranks")
{
    // socle inclusion S_1 -> M_12
    CHECK(oracle_hom_dim({1, 1, 0}, {1, 2, 0}, 0, 2) == 1);
    // M_12 = P_2 is projective: no map onto S_1 in any degree
    CHECK(oracle_hom_dim({1, 2, 0}, {1, 1, 0}, 0, 2) == 0);
    CHECK(oracle_hom_dim({1, 2, 0}, {1, 1, 0}, 1, 2) == 0);
    // intervals are rigid
    CHECK(oracle_hom_dim({1, 2, 0}, {1, 2, 0}, 0, 2) == 1);
    CHECK(oracle_hom_dim({1, 2, 0}, {1, 2, 0}, 1, 2) == 0);
    CHECK(oracle_hom_dim({2, 2, 0}, {1, 1, 0}, 1, 2) == 1);
}

TEST_CASE("closed-form criteria agree with the oracle exhaustively up to rank 8")
{
    for (int n = 1; n <= 8; ++n) {
        const auto objs = all_indecomposables(n);
        for (const auto& a : objs)
            for (const auto& b : objs)
                for (int d = -2; d <= 3; ++d)
                    CHECK(hom_dim(a, b, d, n) == oracle_hom_dim(a, b, d, n));
    }
}

TEST_CASE("hereditary: zero outside degrees 0 and 1")
{
    for (int n = 1; n <= 5; ++n) {
        const auto objs = all_indecomposables(n);
        for (const auto& a : objs)
            for (const auto& b : objs)
                for (int d : {-3, -1, 2, 3, 5})
                    CHECK(oracle_hom_dim(a, b, d, n) == 0);
    }
}

TEST_CASE("rigidity: no self-extensions")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& a : all_indecomposables(n))
            CHECK(oracle_hom_dim(a, a, 1, n) == 0);
}

TEST_CASE("Serre-type duality against the AR translate")
{
    for (int n = 1; n <= 6; ++n) {
        const auto objs = all_indecomposables(n);
        for (const auto& x : objs) {
            if (x.lo < 2)
                continue;
            const auto tau = ar_translate(x);
            REQUIRE(tau.has_value());
            for (const auto& y : objs)
                CHECK(oracle_hom_dim(x, y, 1, n) == oracle_hom_dim(y, *tau, 0, n));
        }
    }
}

TEST_CASE("intersection identity against oracle totals")
{
    for (int n = 1; n <= 6; ++n) {
        const auto objs = all_indecomposables(n);
        for (const auto& a : objs) {
            for (const auto& b : objs) {
                if (a.same_orbit(b))
                    continue;
                int total = 0;
                for (int d = 0; d <= 1; ++d)
                    total += oracle_hom_dim(a, b, d, n) + oracle_hom_dim(b, a, d, n);
                CHECK(total == geometric_int_count(a, b, n));
            }
        }
    }
}

TEST_CASE("oracle refuses ranks beyond the bound")
{
    CHECK(oracle_bound() == 8);
    CHECK_THROWS_AS(oracle_hom_dim({1, 9, 0}, {1, 1, 0}, 0, 9), oracle_bound_error);

    setenv("STABFLOW_ORACLE_BOUND", "9", 1);
    CHECK(oracle_bound() == 9);
    CHECK(oracle_hom_dim({1, 9, 0}, {9, 9, 0}, 0, 9) == 1);
    unsetenv("STABFLOW_ORACLE_BOUND");
    CHECK(oracle_bound() == 8);
}
