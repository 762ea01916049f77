#include "stabflow/an_category.hpp"

#include <string>

namespace stabflow {

void check_interval(const Interval& a, int n)
{
    if (n < 1)
        throw invalid_rank_error("rank must be at least 1, got " + std::to_string(n));
    if (a.lo < 1 || a.lo > a.hi || a.hi > n)
        throw rank_mismatch_error("interval [" + std::to_string(a.lo) + "," +
                                  std::to_string(a.hi) + "] does not fit rank " +
                                  std::to_string(n));
}

std::vector<Interval> all_indecomposables(int n)
{
    if (n < 1)
        throw invalid_rank_error("rank must be at least 1, got " + std::to_string(n));
    std::vector<Interval> out;
    out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi)
            out.push_back({lo, hi, 0});
    return out;
}

int coxeter_number(int n)
{
    if (n < 1)
        throw invalid_rank_error("rank must be at least 1, got " + std::to_string(n));
    return n + 1;
}

namespace {

// Unshifted criteria.  Submodules of M_[a,b] are the prefixes M_[a,t],
// quotients the suffixes M_[t,b]; a degree-0 map factors as
// M_[a,b] ->> M_[c,b] '-> M_[c,e].
bool hom0_nonzero(int a, int b, int c, int e)
{
    return a <= c && c <= b && b <= e;
}

// Ext^1(M_[a,b], -) = Hom(-, tau M_[a,b]) = Hom(-, M_[a-1,b-1]) for a >= 2.
bool hom1_nonzero(int a, int b, int c, int e)
{
    return a >= 2 && c <= a - 1 && a - 1 <= e && e <= b - 1;
}

} // namespace

int hom_dim(const Interval& a, const Interval& b, int degree, int n)
{
    check_interval(a, n);
    check_interval(b, n);
    const int d = degree + b.shift - a.shift; // reduce to unshifted modules
    if (d == 0)
        return hom0_nonzero(a.lo, a.hi, b.lo, b.hi) ? 1 : 0;
    if (d == 1)
        return hom1_nonzero(a.lo, a.hi, b.lo, b.hi) ? 1 : 0;
    return 0;
}

std::map<int, int> hom_dims(const Interval& a, const Interval& b, int n)
{
    std::map<int, int> out;
    for (int d0 = 0; d0 <= 1; ++d0) {
        const int degree = d0 - b.shift + a.shift;
        if (int dim = hom_dim(a, b, degree, n); dim != 0)
            out[degree] = dim;
    }
    return out;
}

std::optional<Interval> ar_translate(const Interval& a)
{
    if (a.shift != 0)
        throw error("ar_translate expects an unshifted interval");
    if (a.lo == 1)
        return std::nullopt; // projective P_hi
    return Interval{a.lo - 1, a.hi - 1, 0};
}

int geometric_int_count(const Interval& a, const Interval& b, int n)
{
    check_interval(a, n);
    check_interval(b, n);
    if (a.shift != 0 || b.shift != 0)
        throw error("geometric_int_count expects unshifted intervals");

    const int p = a.lo - 1, q = a.hi; // chord of A, p < q
    const int r = b.lo - 1, s = b.hi; // chord of B, r < s

    int shared = 0;
    shared += (p == r || p == s) ? 1 : 0;
    shared += (q == r || q == s) ? 1 : 0;

    // Strict interior crossing: each chord separates the other's endpoints.
    const bool crosses = (p < r && r < q && q < s) || (r < p && p < s && s < q);

    return shared + (crosses ? 2 : 0);
}

HomDegreeTable HomDegreeTable::build(int n)
{
    HomDegreeTable table;
    table.n = n;
    const auto objs = all_indecomposables(n);
    for (const auto& a : objs) {
        for (const auto& b : objs) {
            std::vector<int> degs;
            for (int d = 0; d <= 1; ++d)
                if (hom_dim(a, b, d, n) != 0)
                    degs.push_back(d);
            if (!degs.empty())
                table.entries.emplace(std::make_pair(a, b), std::move(degs));
        }
    }
    return table;
}

} // namespace stabflow
