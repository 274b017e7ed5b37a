#include "loophom/series/truncated_series.hpp"

#include "loophom/error.hpp"

#include <algorithm>

namespace loophom::series {

TruncatedSeries::TruncatedSeries(std::size_t cutoff) : coeffs_(cutoff + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t cutoff)
    : coeffs_(std::move(coefficients))
{
    coeffs_.resize(cutoff + 1);
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coefficients, std::size_t cutoff)
    : coeffs_(cutoff + 1)
{
    std::size_t n = 0;
    for (long c : coefficients) {
        if (n > cutoff)
            break;
        coeffs_[n++] = c;
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t cutoff)
{
    TruncatedSeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t degree, Rational c, std::size_t cutoff)
{
    TruncatedSeries s(cutoff);
    if (degree <= cutoff)
        s.coeffs_[degree] = std::move(c);
    return s;
}

Rational TruncatedSeries::coefficient(std::size_t n) const
{
    return n < coeffs_.size() ? coeffs_[n] : Rational(0);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t cutoff) const
{
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), cutoff + 1)),
                           cutoff);
}

TruncatedSeries TruncatedSeries::negated_variable() const
{
    TruncatedSeries s = *this;
    for (std::size_t n = 1; n < s.coeffs_.size(); n += 2)
        s.coeffs_[n] = -s.coeffs_[n];
    return s;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t k) const
{
    if (k == 0)
        fail(ErrorCode::InvalidArgument, "substitute_power needs k >= 1");
    TruncatedSeries s(cutoff());
    for (std::size_t n = 0; n * k <= cutoff(); ++n)
        s.coeffs_[n * k] = coeffs_[n];
    return s;
}

bool TruncatedSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return loophom::is_integral(c); });
}

bool TruncatedSeries::all_nonnegative() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c >= 0; });
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const
{
    const std::size_t n = std::min(cutoff(), other.cutoff());
    return std::equal(coeffs_.begin(), coeffs_.begin() + n + 1, other.coeffs_.begin());
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (n)
            out += ", ";
        out += loophom::to_string(coeffs_[n]);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
TruncatedSeries operator-(const TruncatedSeries& s) { return s * Rational(-1); }
TruncatedSeries operator*(TruncatedSeries lhs, const Rational& c) { return lhs *= c; }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t cutoff = std::min(a.cutoff(), b.cutoff());
    std::vector<Rational> out(cutoff + 1);
    for (std::size_t i = 0; i <= cutoff; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= cutoff; ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(out), cutoff);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

TruncatedSeries series_reciprocal(const TruncatedSeries& a)
{
    if (a[0] == 0)
        fail(ErrorCode::ZeroConstantTerm, "series with zero constant term has no reciprocal");
    const std::size_t cutoff = a.cutoff();
    const Rational inv0 = 1 / a[0];
    std::vector<Rational> b(cutoff + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (a[i] != 0)
                acc += a[i] * b[n - i];
        b[n] = -acc * inv0;
    }
    return TruncatedSeries(std::move(b), cutoff);
}

TruncatedSeries series_pow(const TruncatedSeries& a, std::size_t exponent)
{
    TruncatedSeries result = TruncatedSeries::one(a.cutoff());
    TruncatedSeries base = a;
    while (exponent) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

} // namespace loophom::series
