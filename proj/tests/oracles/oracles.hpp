#pragma once

#include "loophom/manifold/bundle.hpp"
#include "loophom/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Independent reference computations for the tests. Nothing here calls the
// library's combinatorics or series code.
namespace oracle {

using loophom::Integer;

/// Lyndon words of length n over {0..q-1}, by testing every word against
/// all of its rotations.
std::vector<std::vector<int>> lyndon_words(int q, int n);

/// Lyndon words with the given letter content.
std::size_t lyndon_count_with_content(const std::vector<int>& content);

/// Dimensions in degrees 1..max_degree of the Lie subalgebra of the tensor
/// algebra generated by letters of the given degrees under the graded
/// commutator [x, y] = xy - (-1)^{|x||y|} yx. Computed by spanning brackets
/// and taking ranks over Q.
std::vector<std::size_t> bracket_span_dims(const std::vector<int>& letter_degrees, int max_degree);

/// Basis count of the free graded Lie algebra on letters of the given
/// degrees, degrees 1..max_degree: Lyndon words of each total degree plus the
/// squares [w, w] of Lyndon words w of odd total degree.
std::vector<std::size_t> graded_lyndon_dims(const std::vector<int>& letter_degrees, int max_degree);

/// Coefficients 0..n of 1/denominator by the linear recurrence (denominator[0] = 1).
std::vector<Integer> reciprocal_by_recurrence(const std::vector<std::int64_t>& denominator, std::size_t n);

/// Coefficients 0..n of the product of polynomials, schoolbook.
std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t n);

/// Random unimodular symmetric form P^T D P of rank d with entries bounded by
/// `bound`, D diagonal +-1 or containing hyperbolic blocks.
loophom::IntMatrix random_unimodular_form(std::mt19937_64& rng, std::size_t d, std::int64_t bound);

/// A random realizable (w2, p1) for the form: p1 = w2^T Q w2 + 4r.
struct BundleInput {
    loophom::manifold::Z2Vector w2;
    std::int64_t p1 = 0;
};
BundleInput random_bundle_input(std::mt19937_64& rng, const loophom::IntMatrix& q, std::int64_t bound);

loophom::IntMatrix identity_form(std::size_t d);

} // namespace oracle
