#include "stabflow/hom_oracle.hpp"

#include <boost/rational.hpp>

#include <cstdlib>
#include <string>
#include <vector>

namespace stabflow {

namespace {

using Rat = boost::rational<long long>;

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a; // row major

    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Rat at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Row-reduce in place; returns rank and records pivot columns.
int row_reduce(RatMatrix& m, std::vector<int>& pivot_cols)
{
    pivot_cols.clear();
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != Rat(0)) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols; ++c)
            m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row)
                continue;
            const Rat f = m.at(r, col);
            if (f == Rat(0))
                continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) -= f * m.at(row, c);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return row;
}

int matrix_rank(RatMatrix m)
{
    std::vector<int> pivots;
    return row_reduce(m, pivots);
}

// Columns span ker(m).
std::vector<std::vector<Rat>> kernel_basis(RatMatrix m)
{
    std::vector<int> pivots;
    row_reduce(m, pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[free] = Rat(1);
        for (size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -m.at(static_cast<int>(p), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Interval module as an explicit representation: one-dimensional spaces on
// [lo,hi], identity arrow maps inside the interval.
struct Rep {
    int n = 0;
    std::vector<int> dim;      // dim[i], 1-based up to n
    std::vector<int> arrow_id; // arrow (i+1)->i carries identity iff arrow_id[i]

    Rep(int rank, int lo, int hi) : n(rank), dim(rank + 1, 0), arrow_id(rank + 1, 0)
    {
        for (int i = lo; i <= hi; ++i)
            dim[i] = 1;
        for (int i = lo; i <= hi - 1; ++i)
            arrow_id[i] = 1;
    }
};

// Coordinates of HomSpace(X, Y) live in the direct sum over vertices of
// Hom(X_i, Y_i); the Hom space is the kernel of the difference map
// f |-> (f_i X_alpha - Y_alpha f_{i+1})_alpha.
struct HomCoords {
    std::vector<int> offset; // offset[i]: start of vertex i block
    int total = 0;
};

HomCoords hom_coords(const Rep& x, const Rep& y)
{
    HomCoords c;
    c.offset.assign(x.n + 1, 0);
    for (int i = 1; i <= x.n; ++i) {
        c.offset[i] = c.total;
        c.total += x.dim[i] * y.dim[i];
    }
    return c;
}

RatMatrix difference_map(const Rep& x, const Rep& y, const HomCoords& c)
{
    int rows = 0;
    for (int i = 1; i <= x.n - 1; ++i)
        rows += y.dim[i] * x.dim[i + 1];
    RatMatrix m(rows, c.total);
    int row = 0;
    for (int i = 1; i <= x.n - 1; ++i) {
        const int r = y.dim[i] * x.dim[i + 1];
        if (r == 0)
            continue;
        // All spaces here are at most one-dimensional, so each equation is
        // f_i * x_arrow - y_arrow * f_{i+1} = 0 on scalar unknowns.
        if (x.arrow_id[i] && x.dim[i] * y.dim[i] > 0)
            m.at(row, c.offset[i]) += Rat(1);
        if (y.arrow_id[i] && x.dim[i + 1] * y.dim[i + 1] > 0)
            m.at(row, c.offset[i + 1]) -= Rat(1);
        row += r;
    }
    return m;
}

int hom_space_dim(const Rep& x, const Rep& y)
{
    const auto c = hom_coords(x, y);
    if (c.total == 0)
        return 0;
    auto m = difference_map(x, y, c);
    std::vector<int> pivots;
    const int rank = row_reduce(m, pivots);
    return c.total - rank;
}

// dim coker( Hom(P_b, Y) -> Hom(P_{a-1}, Y) ) induced by the inclusion
// P_{a-1} '-> P_b (identity on vertices <= a-1).
int ext1_dim(int n, int a, int b, const Rep& y)
{
    if (a == 1)
        return 0; // M_[1,b] = P_b is projective
    const Rep p0(n, 1, b);
    const Rep p1(n, 1, a - 1);

    const auto c0 = hom_coords(p0, y);
    const auto c1 = hom_coords(p1, y);

    const int hom_p1 = c1.total == 0 ? 0 : c1.total - matrix_rank(difference_map(p1, y, c1));
    if (hom_p1 == 0)
        return 0;

    std::vector<std::vector<Rat>> k0;
    if (c0.total > 0)
        k0 = kernel_basis(difference_map(p0, y, c0));
    if (k0.empty())
        return hom_p1;

    // Composition with the inclusion restricts g to vertices <= a-1.
    RatMatrix img(c1.total, static_cast<int>(k0.size()));
    for (size_t col = 0; col < k0.size(); ++col)
        for (int i = 1; i <= a - 1; ++i)
            if (p1.dim[i] * y.dim[i] > 0)
                img.at(c1.offset[i], static_cast<int>(col)) = k0[col][c0.offset[i]];

    return hom_p1 - matrix_rank(img);
}

} // namespace

int oracle_bound()
{
    if (const char* env = std::getenv("STABFLOW_ORACLE_BOUND")) {
        const int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    return 8;
}

int oracle_hom_dim(const Interval& a, const Interval& b, int degree, int n)
{
    check_interval(a, n);
    check_interval(b, n);
    if (n > oracle_bound())
        throw oracle_bound_error("rank " + std::to_string(n) +
                                 " exceeds the oracle bound " + std::to_string(oracle_bound()));

    const int d = degree + b.shift - a.shift;
    if (d < 0)
        return 0; // no maps into negative shifts of modules
    const Rep x(n, a.lo, a.hi);
    const Rep y(n, b.lo, b.hi);
    if (d == 0)
        return hom_space_dim(x, y);
    if (d == 1)
        return ext1_dim(n, a.lo, a.hi, y);
    return 0; // projective presentation has length one, so Ext^{>=2} = 0
}

std::map<int, int> oracle_hom_dims(const Interval& a, const Interval& b, int n)
{
    std::map<int, int> out;
    for (int d0 = 0; d0 <= 1; ++d0) {
        const int degree = d0 - b.shift + a.shift;
        if (int dim = oracle_hom_dim(a, b, degree, n); dim != 0)
            out[degree] = dim;
    }
    return out;
}

} // namespace stabflow
