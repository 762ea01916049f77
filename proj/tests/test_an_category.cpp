#include <doctest.h>

#include "stabflow/an_category.hpp"

using namespace stabflow;

TEST_CASE("all_indecomposables enumerates intervals lexicographically")
{
    CHECK(all_indecomposables(1) == std::vector<Interval>{{1, 1, 0}});
    CHECK(all_indecomposables(2) == std::vector<Interval>{{1, 1, 0}, {1, 2, 0}, {2, 2, 0}});
    CHECK(all_indecomposables(5).size() == 15);
    CHECK_THROWS_AS(all_indecomposables(0), invalid_rank_error);
    CHECK_THROWS_AS(all_indecomposables(-3), invalid_rank_error);
}

TEST_CASE("coxeter number of A_n is n+1")
{
    CHECK(coxeter_number(2) == 3);
    CHECK(coxeter_number(1) == 2);
    CHECK(coxeter_number(9) == 10);
}

TEST_CASE("hom criteria on A_2")
{
    // identity on a simple
    CHECK(hom_dim({1, 1, 0}, {1, 1, 0}, 0, 2) == 1);
    CHECK(hom_dim({1, 1, 0}, {1, 1, 0}, 1, 2) == 0);
    // the extension 0 -> S_1 -> M_12 -> S_2 -> 0
    CHECK(hom_dim({2, 2, 0}, {1, 1, 0}, 1, 2) == 1);
    CHECK(hom_dim({2, 2, 0}, {1, 1, 0}, 0, 2) == 0);
    // quotient onto the top
    CHECK(hom_dim({1, 2, 0}, {2, 2, 0}, 0, 2) == 1);
    // socle inclusion
    CHECK(hom_dim({1, 1, 0}, {1, 2, 0}, 0, 2) == 1);
    // projectives admit no map onto lower socle
    CHECK(hom_dim({1, 2, 0}, {1, 1, 0}, 0, 2) == 0);
    CHECK(hom_dim({1, 2, 0}, {1, 1, 0}, 1, 2) == 0);
}

TEST_CASE("shifts translate hom degrees")
{
    // Hom(A[1], B[1][d]) = Hom(A, B[d])
    CHECK(hom_dim({2, 2, 1}, {1, 1, 1}, 1, 2) == 1);
    // Hom(A, B[1]) in degree 0 = Hom(A, B) in degree 1
    CHECK(hom_dim({2, 2, 0}, {1, 1, 1}, 0, 2) == 1);
    CHECK(hom_dim({2, 2, 0}, {1, 1, -1}, 2, 2) == 1);
    const auto degs = hom_dims({2, 2, 0}, {1, 1, 1}, 2);
    REQUIRE(degs.size() == 1);
    CHECK(degs.count(0) == 1);
}

TEST_CASE("hom_dim validates ranks")
{
    CHECK_THROWS_AS(hom_dim({1, 3, 0}, {1, 1, 0}, 0, 2), rank_mismatch_error);
    CHECK_THROWS_AS(hom_dim({0, 1, 0}, {1, 1, 0}, 0, 2), rank_mismatch_error);
    CHECK_THROWS_AS(hom_dim({2, 1, 0}, {1, 1, 0}, 0, 3), rank_mismatch_error);
}

TEST_CASE("AR translate shifts interval supports down")
{
    CHECK(ar_translate({2, 2, 0}) == Interval{1, 1, 0});
    CHECK(ar_translate({3, 5, 0}) == Interval{2, 4, 0});
    CHECK_FALSE(ar_translate({1, 3, 0}).has_value()); // projective marker
    CHECK_FALSE(ar_translate({1, 1, 0}).has_value());
}

TEST_CASE("geometric intersection counts on the disk")
{
    // chords {0,1} and {1,2}: one shared endpoint
    CHECK(geometric_int_count({1, 1, 0}, {2, 2, 0}, 2) == 1);
    // chords {0,1} and {2,3}: disjoint
    CHECK(geometric_int_count({1, 1, 0}, {3, 3, 0}, 3) == 0);
    // chords {0,2} and {1,3} cross in the interior: one morphism each way
    CHECK(geometric_int_count({1, 2, 0}, {2, 3, 0}, 3) == 2);
    // nested chords {0,3} and {1,2}: no interaction
    CHECK(geometric_int_count({1, 3, 0}, {2, 2, 0}, 3) == 0);
    CHECK(geometric_int_count(
              {1, 2, 0}, {2, 2, 0}, 2) == 1);
    CHECK_THROWS_AS(geometric_int_count({1, 2, 1}, {2, 2, 0}, 2), error);
}

TEST_CASE("hom degree table carries identities and only degrees 0 and 1")
{
    for (int n = 1; n <= 5; ++n) {
        const auto table = HomDegreeTable::build(n);
        for (const auto& obj : all_indecomposables(n)) {
            const auto it = table.entries.find({obj, obj});
            REQUIRE(it != table.entries.end());
            CHECK(it->second.front() == 0);
        }
        for (const auto& [pair, degs] : table.entries) {
            CHECK_FALSE(degs.empty());
            for (int d : degs)
                CHECK((d == 0 || d == 1));
        }
    }
}
