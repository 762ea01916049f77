#pragma once

// Combinatorial model of the bounded derived category of the linearly
// oriented A_n quiver 1 <- 2 <- ... <- n.  Indecomposable objects are the
// shifted interval modules M_[a,b][k]; morphism spaces are computed from
// closed-form criteria that are validated elsewhere against an exact
// matrix oracle (hom_oracle.hpp).

#include <map>
#include <optional>
#include <vector>

#include "stabflow/errors.hpp"

namespace stabflow {

/// A shifted interval [lo,hi][shift] naming the indecomposable M_[lo,hi][shift].
/// The simple S_i is [i,i]; the projective P_j is [1,j].
struct Interval {
    int lo = 1;
    int hi = 1;
    int shift = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

    /// Equality of shift-orbits: ignores shift.
    bool same_orbit(const Interval& other) const
    {
        return lo == other.lo && hi == other.hi;
    }

    Interval unshifted() const { return {lo, hi, 0}; }
};

/// Throws unless 1 <= lo <= hi <= n.
void check_interval(const Interval& a, int n);

/// The n(n+1)/2 unshifted intervals 1 <= lo <= hi <= n in lexicographic order.
std::vector<Interval> all_indecomposables(int n);

/// Coxeter number of A_n.
int coxeter_number(int n);

/// dim Hom(A, B[degree]).  Closed-form criteria for the fixed orientation:
/// with both operands unshifted, Hom^0(M_[a,b], M_[c,e]) != 0 iff
/// a <= c <= b <= e, and Hom^1 != 0 iff a >= 2 and c <= a-1 <= e <= b-1.
/// Shifts translate degrees.  Dimensions are 0 or 1.
int hom_dim(const Interval& a, const Interval& b, int degree, int n);

/// All degrees d with dim Hom(A, B[d]) nonzero, as degree -> dimension.
std::map<int, int> hom_dims(const Interval& a, const Interval& b, int n);

/// Auslander-Reiten translate: tau M_[a,b] = M_[a-1,b-1] for a >= 2;
/// nullopt marks the projectives M_[1,b].
std::optional<Interval> ar_translate(const Interval& a);

/// Intersection count of the chords {lo-1, hi} of the (n+1)-gon with
/// vertices 0..n.  Shared endpoints count one each; interior crossings
/// count one morphism in each direction, so two each.  For A, B in
/// distinct shift-orbits this equals the total Hom dimension in both
/// directions over all degrees.
int geometric_int_count(const Interval& a, const Interval& b, int n);

/// Table of Hom degrees for every ordered pair of unshifted intervals of
/// rank n.  Pairs with no morphisms are absent; every (X, X) maps to {0}.
struct HomDegreeTable {
    int n = 0;
    std::map<std::pair<Interval, Interval>, std::vector<int>> entries;

    static HomDegreeTable build(int n);
};

} // namespace stabflow
