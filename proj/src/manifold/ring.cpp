#include "loophom/manifold/ring.hpp"

#include "loophom/error.hpp"

#include <algorithm>

namespace loophom::manifold {

using linalg::DenseMatrix;
using linalg::DenseVector;

GradedRing::GradedRing(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees))
{
    if (labels_.size() != degrees_.size() || labels_.empty() || degrees_[0] != 0)
        fail(ErrorCode::InvalidArgument, "graded ring needs one degree per label and the unit first");
    const std::size_t n = labels_.size();
    table_.assign(n, std::vector<DenseVector>(n, DenseVector(n)));
    for (std::size_t i = 0; i < n; ++i) {
        table_[0][i] = basis_vector(i);
        table_[i][0] = basis_vector(i);
    }
}

std::vector<std::size_t> GradedRing::basis_in_degree(int degree) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == degree)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> GradedRing::betti_numbers() const
{
    const int top = *std::max_element(degrees_.begin(), degrees_.end());
    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1);
    for (int deg : degrees_)
        ++out[static_cast<std::size_t>(deg)];
    return out;
}

void GradedRing::set_product(std::size_t i, std::size_t j, DenseVector value)
{
    value.resize(dimension());
    table_.at(i).at(j) = std::move(value);
}

DenseVector GradedRing::basis_vector(std::size_t i) const
{
    DenseVector v(dimension());
    v.at(i) = 1;
    return v;
}

DenseVector GradedRing::multiply(const DenseVector& a, const DenseVector& b) const
{
    DenseVector out(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (b[j] == 0)
                continue;
            const Rational c = a[i] * b[j];
            const auto& p = table_[i][j];
            for (std::size_t k = 0; k < dimension(); ++k)
                if (p[k] != 0)
                    out[k] += c * p[k];
        }
    }
    return out;
}

bool GradedRing::is_associative() const
{
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (multiply(table_[i][j], basis_vector(k)) != multiply(basis_vector(i), table_[j][k]))
                    return false;
    return true;
}

bool GradedRing::is_graded_commutative() const
{
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool odd = (degrees_[i] % 2 != 0) && (degrees_[j] % 2 != 0);
            DenseVector swapped = table_[j][i];
            if (odd)
                for (auto& c : swapped)
                    c = -c;
            if (table_[i][j] != swapped)
                return false;
            // homogeneity: the product lives in degree |i| + |j|
            for (std::size_t k = 0; k < n; ++k)
                if (table_[i][j][k] != 0 && degrees_[k] != degrees_[i] + degrees_[j])
                    return false;
        }
    }
    return true;
}

std::vector<std::size_t> SixManifoldRing::degree_two() const { return ring.basis_in_degree(2); }
std::vector<std::size_t> SixManifoldRing::degree_four() const { return ring.basis_in_degree(4); }

DenseMatrix SixManifoldRing::pairing_matrix() const
{
    const auto two = degree_two();
    const auto four = degree_four();
    DenseMatrix m(two.size(), DenseVector(four.size()));
    for (std::size_t i = 0; i < two.size(); ++i)
        for (std::size_t j = 0; j < four.size(); ++j)
            m[i][j] = ring.product(two[i], four[j])[top()];
    return m;
}

Rational SixManifoldRing::pairing_determinant() const
{
    DenseMatrix m = pairing_matrix();
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

SixManifoldRing cohomology_ring(const FourManifold& n, const BundleData& b)
{
    validate(n, b);
    const std::size_t d = n.rank();
    std::vector<std::string> labels{"1"};
    std::vector<int> degrees{0};
    for (std::size_t i = 0; i < d; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        degrees.push_back(2);
    }
    labels.push_back("t");
    degrees.push_back(2);
    for (std::size_t i = 0; i < d; ++i) {
        labels.push_back("t*x" + std::to_string(i + 1));
        degrees.push_back(4);
    }
    labels.push_back("y");
    degrees.push_back(4);
    labels.push_back("top");
    degrees.push_back(6);

    SixManifoldRing r{GradedRing(std::move(labels), std::move(degrees)), d, b.alpha, b.ell, n.determinant()};
    GradedRing& ring = r.ring;
    const std::size_t dim = ring.dimension();
    auto vec = [dim](std::size_t index, const Rational& c) {
        DenseVector v(dim);
        v[index] = c;
        return v;
    };
    auto sym = [&ring](std::size_t i, std::size_t j, const DenseVector& v) {
        ring.set_product(i, j, v);
        ring.set_product(j, i, v);
    };

    const IntVector q_alpha = n.apply(b.alpha);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            ring.set_product(r.x(i), r.x(j), vec(r.y(), n.entry(i, j)));
            // x_i (t x_j) = Q_ij t y
            ring.set_product(r.x(i), r.tx(j), vec(r.top(), n.entry(i, j)));
            ring.set_product(r.tx(j), r.x(i), vec(r.top(), n.entry(i, j)));
        }
        sym(r.x(i), r.t(), vec(r.tx(i), 1));
        // t (t x_i) = t^2 x_i = sum_j alpha_j Q_ji top
        sym(r.t(), r.tx(i), vec(r.top(), q_alpha[i]));
    }
    DenseVector t_squared(dim);
    for (std::size_t i = 0; i < d; ++i)
        t_squared[r.tx(i)] = b.alpha[i];
    t_squared[r.y()] = b.ell;
    ring.set_product(r.t(), r.t(), t_squared);
    sym(r.t(), r.y(), vec(r.top(), 1));
    return r;
}

bool lift_change_is_isomorphism(const SixManifoldRing& from, const SixManifoldRing& to, const IntVector& gamma)
{
    const std::size_t d = from.d;
    if (to.d != d || gamma.size() != d)
        return false;
    const GradedRing& target = to.ring;
    const std::size_t dim = target.dimension();

    // images of the basis of `from` in `to`
    std::vector<DenseVector> image(dim, DenseVector(dim));
    image[0] = target.basis_vector(0);
    for (std::size_t i = 0; i < d; ++i)
        image[from.x(i)] = target.basis_vector(to.x(i));
    DenseVector t_image = target.basis_vector(to.t());
    for (std::size_t i = 0; i < d; ++i)
        t_image[to.x(i)] += gamma[i];
    image[from.t()] = t_image;
    for (std::size_t i = 0; i < d; ++i)
        image[from.tx(i)] = target.multiply(t_image, image[from.x(i)]);
    image[from.y()] = target.basis_vector(to.y());
    image[from.top()] = target.multiply(t_image, image[from.y()]);

    if (linalg::rank(image) != dim)
        return false;
    auto apply = [&](const DenseVector& v) {
        DenseVector out(dim);
        for (std::size_t k = 0; k < dim; ++k)
            if (v[k] != 0)
                for (std::size_t m = 0; m < dim; ++m)
                    out[m] += v[k] * image[k][m];
        return out;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (apply(from.ring.product(i, j)) != target.multiply(image[i], image[j]))
                return false;
    return true;
}

} // namespace loophom::manifold
