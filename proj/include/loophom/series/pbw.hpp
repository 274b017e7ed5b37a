#pragma once

#include "loophom/numeric.hpp"
#include "loophom/series/truncated_series.hpp"

#include <cstddef>
#include <vector>

namespace loophom::series {

/// Degree-wise dimensions of a graded Lie algebra over Q, indexed by loop
/// homological degree n >= 1 (entry 0 is unused and always zero).
class GradedLieDims {
public:
    explicit GradedLieDims(std::size_t cutoff = kDefaultCutoff);
    /// dims[k] is the dimension in degree k+1.
    GradedLieDims(const std::vector<Integer>& dims_from_degree_one, std::size_t cutoff);

    std::size_t cutoff() const noexcept { return dims_.size() - 1; }
    const Integer& operator[](std::size_t degree) const { return dims_.at(degree); }
    void set(std::size_t degree, Integer value);
    void add(std::size_t degree, const Integer& value);

    GradedLieDims truncated(std::size_t cutoff) const;
    Integer total() const;
    /// Dimensions for degrees 1..cutoff.
    std::vector<Integer> values() const;
    std::string to_string() const;

    friend bool operator==(const GradedLieDims&, const GradedLieDims&) = default;

private:
    std::vector<Integer> dims_;
};

/// Hilbert series of U(L) by PBW:
///   prod_{n odd} (1+t^n)^{L_n} * prod_{n even} (1-t^n)^{-L_n}.
TruncatedSeries pbw_expand(const GradedLieDims& dims);

/// Inverse of pbw_expand: solves L_n degree by degree. Requires constant term
/// 1. Throws NegativeLieDimension when a solved dimension is negative and
/// InvalidArgument when one is not an integer.
GradedLieDims pbw_invert(const TruncatedSeries& series);

} // namespace loophom::series
