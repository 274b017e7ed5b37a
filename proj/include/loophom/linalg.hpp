#pragma once

#include "loophom/numeric.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace loophom::linalg {

/// Sparse vector over Q: (index, value) pairs, sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;
using DenseVector = std::vector<Rational>;
using DenseMatrix = std::vector<DenseVector>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t size);
/// a + c*b
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b);

/// Incrementally built echelon basis of a subspace of Q^n.
///
/// Each stored row has leading coefficient 1 at its pivot and zeros before it;
/// reducing by rows in increasing pivot order clears every pivot column.
class RowSpace {
public:
    /// Returns true when v was independent of the current rows.
    bool insert(SparseVector v);
    /// v minus its projection along the pivot columns; zero iff v is in the span.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_pivot(std::size_t column) const { return rows_.count(column) != 0; }
    const std::map<std::size_t, SparseVector>& rows() const noexcept { return rows_; }

private:
    std::map<std::size_t, SparseVector> rows_;
};

std::size_t rank(const DenseMatrix& rows);

/// Basis of { x : A x = 0 } for A given by rows with `columns` entries.
DenseMatrix nullspace(const DenseMatrix& a, std::size_t columns);

} // namespace loophom::linalg
