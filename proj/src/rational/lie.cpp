#include "loophom/rational/lie.hpp"

#include "loophom/error.hpp"

namespace loophom::rational {

series::GradedLieDims ranks_from_decomposition(const loops::LoopFactorMultiset& factors, std::size_t cutoff)
{
    if (factors.truncated && cutoff > factors.cutoff)
        fail(ErrorCode::InvalidArgument, "factors are only complete through loop degree " +
                                             std::to_string(factors.cutoff) + ", asked for " +
                                             std::to_string(cutoff));
    series::GradedLieDims dims(cutoff);
    if (cutoff >= 1)
        dims.add(1, factors.circles);
    for (const auto& [m, count] : factors.sphere_loops) {
        const auto lo = static_cast<std::size_t>(m - 1);
        if (lo <= cutoff)
            dims.add(lo, count);
        if (m % 2 == 0 && 2 * lo <= cutoff)
            dims.add(2 * lo, count);
    }
    return dims;
}

series::GradedLieDims free_graded_lie_dims(const std::vector<std::size_t>& degrees, std::size_t cutoff)
{
    series::TruncatedSeries denom = series::TruncatedSeries::one(cutoff);
    for (auto deg : degrees) {
        if (deg == 0)
            fail(ErrorCode::InvalidArgument, "generator degrees must be >= 1");
        denom -= series::TruncatedSeries::monomial(deg, 1, cutoff);
    }
    return series::pbw_invert(series::series_reciprocal(denom));
}

} // namespace loophom::rational
