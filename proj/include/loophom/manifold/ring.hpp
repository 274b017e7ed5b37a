#pragma once

#include "loophom/linalg.hpp"
#include "loophom/manifold/bundle.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace loophom::manifold {

/// A finite-dimensional graded commutative algebra over Q given by structure
/// constants on a homogeneous basis. Basis element 0 is the unit.
class GradedRing {
public:
    GradedRing(std::vector<std::string> labels, std::vector<int> degrees);

    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    std::vector<std::size_t> basis_in_degree(int degree) const;
    /// dims in degrees 0, 1, ..., top degree
    std::vector<std::size_t> betti_numbers() const;

    void set_product(std::size_t i, std::size_t j, linalg::DenseVector value);
    const linalg::DenseVector& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
    linalg::DenseVector multiply(const linalg::DenseVector& a, const linalg::DenseVector& b) const;
    linalg::DenseVector basis_vector(std::size_t i) const;

    bool is_associative() const;
    bool is_graded_commutative() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::vector<linalg::DenseVector>> table_;
};

/// H*(M;Q) for the sphere bundle M -> N, with basis
///   1, x_1..x_d, t, t x_1..t x_d, y, top
/// in degrees 0, 2, 2, 4, 4, 6 and products
///   x_i x_j = Q_ij y,  t^2 = sum alpha_i t x_i + ell y,  t y = top.
struct SixManifoldRing {
    GradedRing ring;
    std::size_t d = 0;
    IntVector alpha;
    std::int64_t ell = 0;
    Integer form_determinant = 1;

    std::size_t x(std::size_t i) const { return 1 + i; }
    std::size_t t() const { return 1 + d; }
    std::size_t tx(std::size_t i) const { return 2 + d + i; }
    std::size_t y() const { return 2 + 2 * d; }
    std::size_t top() const { return 3 + 2 * d; }

    /// Degree-2 classes (x_1..x_d, t), in that order.
    std::vector<std::size_t> degree_two() const;
    std::vector<std::size_t> degree_four() const;

    /// Matrix of the cup pairing H^2 x H^4 -> H^6 = Q.top
    linalg::DenseMatrix pairing_matrix() const;
    Rational pairing_determinant() const;
};

SixManifoldRing cohomology_ring(const FourManifold& n, const BundleData& b);

/// `from` uses the lift alpha + 2 gamma and `to` the lift alpha of the same
/// bundle. Checks that t -> t + sum gamma_i x_i, x_i -> x_i, y -> y extends to
/// a ring isomorphism from `from` to `to`.
bool lift_change_is_isomorphism(const SixManifoldRing& from, const SixManifoldRing& to, const IntVector& gamma);

} // namespace loophom::manifold
