#include "loophom/linalg.hpp"

#include <algorithm>

namespace loophom::linalg {

SparseVector to_sparse(const DenseVector& v)
{
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.emplace_back(i, v[i]);
    return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t size)
{
    DenseVector out(size);
    for (const auto& [i, x] : v)
        out.at(i) = x;
    return out;
}

SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b)
{
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, c * ib->second);
            ++ib;
        } else {
            Rational x = ia->second + c * ib->second;
            if (x != 0)
                out.emplace_back(ia->first, std::move(x));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseVector RowSpace::reduce(SparseVector v) const
{
    // A row is zero before its pivot, so eliminating the entry at position k
    // leaves positions < k untouched and k then holds a later column.
    std::size_t k = 0;
    while (k < v.size()) {
        const auto row = rows_.find(v[k].first);
        if (row == rows_.end()) {
            ++k;
            continue;
        }
        const Rational c = -v[k].second;
        v = axpy(v, c, row->second);
    }
    return v;
}

bool RowSpace::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const Rational lead = v.front().second;
    if (lead != 1)
        for (auto& entry : v)
            entry.second /= lead;
    const std::size_t pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& a, std::size_t columns)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        const Rational lead = a[r][c];
        for (auto& x : a[r])
            x /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < columns; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const DenseMatrix& rows)
{
    RowSpace space;
    for (const auto& row : rows)
        space.insert(to_sparse(row));
    return space.rank();
}

DenseMatrix nullspace(const DenseMatrix& a, std::size_t columns)
{
    DenseMatrix m = a;
    for (auto& row : m)
        row.resize(columns);
    const auto pivots = rref(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    DenseMatrix basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        DenseVector x(columns);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace loophom::linalg
