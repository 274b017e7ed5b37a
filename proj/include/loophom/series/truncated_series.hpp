#pragma once

#include "loophom/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace loophom::series {

inline constexpr std::size_t kDefaultCutoff = 16;

/// A formal power series in one variable known exactly up to t^cutoff.
///
/// Arithmetic between series of different cutoffs truncates to the smaller
/// one, so coefficients beyond a result's cutoff are never reported.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t cutoff = kDefaultCutoff);

    /// Missing coefficients are zero; extra ones beyond the cutoff are dropped.
    TruncatedSeries(std::vector<Rational> coefficients, std::size_t cutoff);
    TruncatedSeries(std::initializer_list<long> coefficients, std::size_t cutoff);

    static TruncatedSeries one(std::size_t cutoff = kDefaultCutoff);
    /// c * t^degree
    static TruncatedSeries monomial(std::size_t degree, Rational c, std::size_t cutoff = kDefaultCutoff);

    std::size_t cutoff() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    /// Zero beyond the cutoff, unlike operator[].
    Rational coefficient(std::size_t n) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    TruncatedSeries truncated(std::size_t cutoff) const;

    /// Substitutes t -> -t.
    TruncatedSeries negated_variable() const;

    /// Substitutes t -> t^k; the cutoff is kept.
    TruncatedSeries substitute_power(std::size_t k) const;

    bool is_integral() const;
    bool all_nonnegative() const;

    /// Coefficientwise equality on the common range 0..min(cutoff).
    bool agrees_with(const TruncatedSeries& other) const;

    /// "1, 4, 12, 33"
    std::string to_string() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& c);

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(const TruncatedSeries& s);
TruncatedSeries operator*(TruncatedSeries lhs, const Rational& c);

/// Cauchy product truncated at min(a.cutoff(), b.cutoff()).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// b with a*b = 1 through the cutoff. Throws ZeroConstantTerm when a(0) = 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

TruncatedSeries series_pow(const TruncatedSeries& a, std::size_t exponent);

} // namespace loophom::series
