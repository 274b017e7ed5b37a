#include "loophom/series/combinatorics.hpp"

#include "loophom/error.hpp"

#include <numeric>

namespace loophom::series {

int mobius(std::int64_t n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "mobius needs n >= 1");
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

Integer factorial(std::int64_t n)
{
    Integer f = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

Integer binomial(const Integer& n, std::int64_t k)
{
    if (k < 0 || n < 0 || Integer(k) > n)
        return 0;
    Integer result = 1;
    for (std::int64_t i = 0; i < k; ++i)
        result = result * (n - i) / (i + 1);
    return result;
}

namespace {

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t e = 1; e <= n; ++e)
        if (n % e == 0)
            out.push_back(e);
    return out;
}

} // namespace

Integer necklace_count_colored(const std::vector<std::int64_t>& multidegree, const std::vector<Integer>& colors)
{
    if (colors.size() != multidegree.size())
        fail(ErrorCode::InvalidArgument, "necklace count: one color count per letter class");
    std::int64_t total = 0;
    std::int64_t g = 0;
    for (auto m : multidegree) {
        if (m < 0)
            fail(ErrorCode::InvalidArgument, "necklace count: negative multidegree entry");
        total += m;
        g = std::gcd(g, m);
    }
    if (total == 0)
        fail(ErrorCode::InvalidArgument, "necklace count: multidegree must have a positive entry");

    Integer sum = 0;
    for (auto e : divisors(g)) {
        const int mu = mobius(e);
        if (mu == 0)
            continue;
        // words of composition m/e, each letter of class i chosen from colors[i]
        Integer words = factorial(total / e);
        for (std::size_t i = 0; i < multidegree.size(); ++i) {
            const std::int64_t part = multidegree[i] / e;
            words /= factorial(part);
            words *= boost::multiprecision::pow(colors[i], static_cast<unsigned>(part));
        }
        sum += mu * words;
    }
    return sum / total;
}

Integer necklace_count(const std::vector<std::int64_t>& multidegree)
{
    return necklace_count_colored(multidegree, std::vector<Integer>(multidegree.size(), Integer(1)));
}

Integer lyndon_word_count(std::int64_t q, std::int64_t n)
{
    if (n < 1 || q < 0)
        fail(ErrorCode::InvalidArgument, "lyndon_word_count needs n >= 1, q >= 0");
    Integer sum = 0;
    for (auto e : divisors(n))
        sum += mobius(e) * boost::multiprecision::pow(Integer(q), static_cast<unsigned>(n / e));
    return sum / n;
}

} // namespace loophom::series
