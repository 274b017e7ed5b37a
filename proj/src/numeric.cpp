#include "loophom/numeric.hpp"

#include "loophom/error.hpp"

#include <cstdlib>
#include <numeric>
#include <regex>

namespace loophom {

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& text)
{
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        fail(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
    Integer num(match[1].str());
    Integer den(1);
    if (match[2].matched) {
        den = Integer(match[2].str());
        if (den == 0)
            fail(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

std::int64_t gcd_of(const IntVector& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, std::llabs(x));
    return g;
}

Integer determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    }
    // Bareiss: every intermediate division is exact.
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace loophom
