#include "loophom/series/pbw.hpp"

#include "loophom/error.hpp"
#include "loophom/series/combinatorics.hpp"

namespace loophom::series {

GradedLieDims::GradedLieDims(std::size_t cutoff) : dims_(cutoff + 1) {}

GradedLieDims::GradedLieDims(const std::vector<Integer>& dims_from_degree_one, std::size_t cutoff)
    : dims_(cutoff + 1)
{
    for (std::size_t i = 0; i < dims_from_degree_one.size() && i + 1 <= cutoff; ++i)
        set(i + 1, dims_from_degree_one[i]);
}

void GradedLieDims::set(std::size_t degree, Integer value)
{
    if (degree == 0)
        fail(ErrorCode::InvalidArgument, "graded Lie dimensions start in degree 1");
    if (value < 0)
        fail(ErrorCode::NegativeLieDimension,
             "negative Lie dimension " + value.str() + " in degree " + std::to_string(degree));
    dims_.at(degree) = std::move(value);
}

void GradedLieDims::add(std::size_t degree, const Integer& value)
{
    set(degree, dims_.at(degree) + value);
}

GradedLieDims GradedLieDims::truncated(std::size_t cutoff) const
{
    GradedLieDims out(cutoff);
    for (std::size_t n = 1; n <= std::min(cutoff, this->cutoff()); ++n)
        out.dims_[n] = dims_[n];
    return out;
}

Integer GradedLieDims::total() const
{
    Integer sum = 0;
    for (const auto& d : dims_)
        sum += d;
    return sum;
}

std::vector<Integer> GradedLieDims::values() const
{
    return std::vector<Integer>(dims_.begin() + 1, dims_.end());
}

std::string GradedLieDims::to_string() const
{
    std::string out;
    for (std::size_t n = 1; n < dims_.size(); ++n) {
        if (n > 1)
            out += ", ";
        out += dims_[n].str();
    }
    return out;
}

namespace {

// (1 + t^n)^{±L} or (1 - t^n)^{∓L}; `inverse` selects the reciprocal factor.
TruncatedSeries pbw_factor(std::size_t degree, const Integer& dim, bool inverse, std::size_t cutoff)
{
    TruncatedSeries f = TruncatedSeries::one(cutoff);
    if (dim == 0)
        return f;
    const bool odd = degree % 2 == 1;
    std::vector<Rational> c(cutoff + 1);
    for (std::size_t j = 0; j * degree <= cutoff; ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        // exterior: (1+t^n)^L;  polynomial: (1-t^n)^{-L}
        const bool exterior_side = (odd != inverse);
        Integer value = exterior_side ? binomial(dim, jj) : binomial(dim + jj - 1, jj);
        if (inverse && (j % 2 == 1))
            value = -value;
        c[j * degree] = Rational(value);
    }
    return TruncatedSeries(std::move(c), cutoff);
}

} // namespace

TruncatedSeries pbw_expand(const GradedLieDims& dims)
{
    const std::size_t cutoff = dims.cutoff();
    TruncatedSeries result = TruncatedSeries::one(cutoff);
    for (std::size_t n = 1; n <= cutoff; ++n)
        if (dims[n] != 0)
            result = result * pbw_factor(n, dims[n], false, cutoff);
    return result;
}

GradedLieDims pbw_invert(const TruncatedSeries& series)
{
    if (series[0] != 1)
        fail(ErrorCode::InvalidArgument, "pbw_invert needs constant term 1");
    const std::size_t cutoff = series.cutoff();
    GradedLieDims dims(cutoff);
    // remainder = series / (factors of degrees < n) = 1 + L_n t^n + ...
    TruncatedSeries remainder = series;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        const Rational& c = remainder[n];
        if (!is_integral(c))
            fail(ErrorCode::InvalidArgument,
                 "series is not a PBW series: non-integral dimension in degree " + std::to_string(n));
        Integer dim = numerator_of(c);
        if (dim < 0)
            fail(ErrorCode::NegativeLieDimension,
                 "negative Lie dimension " + dim.str() + " in degree " + std::to_string(n));
        dims.set(n, dim);
        if (dim != 0)
            remainder = remainder * pbw_factor(n, dim, true, cutoff);
    }
    return dims;
}

} // namespace loophom::series
