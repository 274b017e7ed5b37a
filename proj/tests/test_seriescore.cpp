#include "loophom/error.hpp"
#include "loophom/series/combinatorics.hpp"
#include "loophom/series/pbw.hpp"
#include "loophom/series/truncated_series.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace loophom;
using namespace loophom::series;

namespace {

TruncatedSeries from_ints(const std::vector<Integer>& c, std::size_t cutoff)
{
    std::vector<Rational> q(c.begin(), c.end());
    return TruncatedSeries(q, cutoff);
}

} // namespace

TEST_CASE("series products truncate to the smaller cutoff")
{
    const TruncatedSeries a({1, 1}, 5);
    const TruncatedSeries b({1, -1}, 3);
    const auto p = series_mul(a, b);
    CHECK(p.cutoff() == 3);
    CHECK(p == TruncatedSeries({1, 0, -1}, 3));

    const TruncatedSeries c({1, -1}, 8);
    const TruncatedSeries d({1, -3, 1}, 8);
    CHECK(c * d == TruncatedSeries({1, -4, 4, -1}, 8));
    CHECK(c * series_reciprocal(c) == TruncatedSeries::one(8));
}

TEST_CASE("reciprocals")
{
    CHECK(series_reciprocal(TruncatedSeries({1, -2}, 5)) == TruncatedSeries({1, 2, 4, 8, 16, 32}, 5));
    CHECK(series_reciprocal(TruncatedSeries::one(4)) == TruncatedSeries::one(4));
    CHECK(series_reciprocal(TruncatedSeries({1, -4, 4, -1}, 12)) ==
          from_ints(oracle::reciprocal_by_recurrence({1, -4, 4, -1}, 12), 12));
    CHECK(series_reciprocal(TruncatedSeries({1, -4, 4, -1}, 4)).to_string() == "1, 4, 12, 33, 88");

    const TruncatedSeries half({2, 1}, 3);
    const auto inv = series_reciprocal(half);
    CHECK(inv[0] == Rational(1, 2));
    CHECK(half * inv == TruncatedSeries::one(3));

    try {
        series_reciprocal(TruncatedSeries({0, 1}, 3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroConstantTerm);
    }
}

TEST_CASE("reciprocal property on random unit series")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> c{Rational(trial % 2 ? 1 : -1)};
        for (int i = 0; i < 12; ++i)
            c.emplace_back(coeff(rng), 1 + (trial % 3));
        const TruncatedSeries f(c, 12);
        CHECK(series_mul(f, series_reciprocal(f)) == TruncatedSeries::one(12));
    }
}

TEST_CASE("substitutions and power")
{
    const TruncatedSeries s({1, 2, 3}, 4);
    CHECK(s.negated_variable() == TruncatedSeries({1, -2, 3}, 4));
    CHECK(s.substitute_power(2) == TruncatedSeries({1, 0, 2, 0, 3}, 4));
    CHECK(series_pow(TruncatedSeries({1, 1}, 4), 3) == TruncatedSeries({1, 3, 3, 1}, 4));
    CHECK(TruncatedSeries({1, 2}, 5).truncated(1).cutoff() == 1);
}

TEST_CASE("mobius and necklaces")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(7) == -1);
    CHECK(necklace_count({1, 1}) == 1);
    CHECK(necklace_count({2, 0}) == 0);
    CHECK(necklace_count({2, 1}) == 1);
    CHECK(necklace_count({1}) == 1);
    try {
        necklace_count({0, 0});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("necklace counts match brute-force Lyndon words")
{
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a + b + c == 0 || a + b + c > 9)
                    continue;
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(necklace_count({a, b, c}) == oracle::lyndon_count_with_content({a, b, c}));
            }
}

TEST_CASE("Witt identity: sum over divisors e | w of e * Lyn_e(q) = q^w")
{
    for (int q = 1; q <= 4; ++q)
        for (int w = 1; w <= 10; ++w) {
            Integer total = 0;
            for (int e = 1; e <= w; ++e)
                if (w % e == 0)
                    total += e * lyndon_word_count(q, e);
            CHECK(total == boost::multiprecision::pow(Integer(q), static_cast<unsigned>(w)));
            if (w <= 7)
                CHECK(lyndon_word_count(q, w) == Integer(oracle::lyndon_words(q, w).size()));
        }
}

TEST_CASE("pbw expansion examples")
{
    CHECK(pbw_expand(GradedLieDims({1, 1}, 6)) == TruncatedSeries({1, 1, 1, 1, 1, 1, 1}, 6));
    CHECK(pbw_expand(GradedLieDims({2, 3, 2, 3, 6, 11}, 6)) == TruncatedSeries({1, 2, 4, 8, 16, 32, 64}, 6));
    CHECK(pbw_expand(GradedLieDims(5)) == TruncatedSeries::one(5));
}

TEST_CASE("pbw inversion examples")
{
    const auto free2 = pbw_invert(series_reciprocal(TruncatedSeries({1, -2}, 6)));
    CHECK(free2 == GradedLieDims({2, 3, 2, 3, 6, 11}, 6));
    const auto cube = pbw_invert(series_pow(series_reciprocal(TruncatedSeries({1, -1}, 8)), 3));
    CHECK(cube == GradedLieDims({3, 3}, 8));
    CHECK(pbw_invert(TruncatedSeries::one(5)) == GradedLieDims(5));

    // oracle for degrees <= 3: (1+t)^2 (1-t^2)^{-3} (1+t^3)^2 = 1 + 2t + 4t^2 + 8t^3 + ...
    const std::vector<Integer> a{1, 2, 1};
    const std::vector<Integer> b = oracle::poly_mul(oracle::reciprocal_by_recurrence({1, 0, -1}, 3),
                                                    oracle::poly_mul(oracle::reciprocal_by_recurrence({1, 0, -1}, 3),
                                                                     oracle::reciprocal_by_recurrence({1, 0, -1}, 3), 3),
                                                    3);
    const auto prod = oracle::poly_mul(oracle::poly_mul(a, b, 3), {1, 0, 0, 2}, 3);
    CHECK(prod == std::vector<Integer>{1, 2, 4, 8});
}

TEST_CASE("pbw inversion rejects inconsistent input")
{
    try {
        pbw_invert(TruncatedSeries({1, 2, 2, 1, 0}, 4));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeLieDimension);
    }
    try {
        pbw_invert(TruncatedSeries({2, 1}, 3));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    try {
        GradedLieDims dims(4);
        dims.set(2, -1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeLieDimension);
    }
}

TEST_CASE("pbw round trip on random dimension vectors")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t cutoff = 1 + trial % 20;
        std::vector<Integer> v;
        for (std::size_t n = 1; n <= cutoff; ++n)
            v.emplace_back(dim(rng));
        const GradedLieDims dims(v, cutoff);
        CHECK(pbw_invert(pbw_expand(dims)) == dims);
    }
}
