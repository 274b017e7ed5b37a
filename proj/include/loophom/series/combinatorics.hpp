#pragma once

#include "loophom/numeric.hpp"

#include <cstdint>
#include <vector>

namespace loophom::series {

int mobius(std::int64_t n);
Integer factorial(std::int64_t n);
/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(const Integer& n, std::int64_t k);

/// Number of primitive necklaces (equivalently Lyndon words, or Hall basis
/// elements of the free Lie ring) with m[i] occurrences of letter i:
///
///   (1/W) * sum_{e | gcd(m)} mu(e) * (W/e)! / prod (m_i/e)!,   W = sum m_i.
///
/// Throws InvalidArgument if no entry is positive.
Integer necklace_count(const std::vector<std::int64_t>& multidegree);

/// Same count when letter class i offers colors[i] interchangeable letters and
/// m[i] letters are drawn from that class in total. With every color count 1
/// this reduces to necklace_count.
Integer necklace_count_colored(const std::vector<std::int64_t>& multidegree,
                               const std::vector<Integer>& colors);

/// Witt's count of Lyndon words of length n over q letters.
Integer lyndon_word_count(std::int64_t q, std::int64_t n);

} // namespace loophom::series
