#pragma once

#include "loophom/linalg.hpp"
#include "loophom/manifold/ring.hpp"
#include "loophom/series/pbw.hpp"
#include "loophom/series/truncated_series.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace loophom::rational {

/// Monomials of total degree `weight` in g commuting variables, enumerated in
/// lexicographically decreasing exponent order (x_0^w first). For weight 2 this
/// is x_i x_j for i <= j in lexicographic order of (i, j).
class MonomialBasis {
public:
    MonomialBasis(std::size_t generators, std::size_t weight);

    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<unsigned>& exponents(std::size_t index) const { return monomials_.at(index); }
    /// Throws InvalidArgument for an exponent vector of the wrong shape.
    std::size_t index_of(const std::vector<unsigned>& exponents) const;

private:
    std::size_t generators_;
    std::vector<std::vector<unsigned>> monomials_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

/// Position of x_i x_j in MonomialBasis(g, 2).
std::size_t sym2_index(std::size_t g, std::size_t i, std::size_t j);

/// A commutative algebra Sym(V)/(R), V spanned by g generators of weight 1.
///
/// R lives in Sym^2 V. Inputs that are not quadratic (a forced d = 1 ring)
/// additionally carry relations of higher weight, keyed by weight.
class QuadraticPresentation {
public:
    /// Relations are vectors over MonomialBasis(g, 2); they are reduced to a basis.
    static QuadraticPresentation commutative(std::size_t generators, const std::vector<linalg::DenseVector>& relations,
                                             std::vector<std::string> labels = {});

    std::size_t generators() const noexcept { return generators_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<linalg::SparseVector>& relations() const noexcept { return relations_; }
    const std::map<std::size_t, std::vector<linalg::SparseVector>>& higher_relations() const noexcept
    {
        return higher_;
    }
    bool is_quadratic() const { return higher_.empty(); }

    void add_higher_relation(std::size_t weight, linalg::SparseVector relation);

    /// R plus the commutators x_i x_j - x_j x_i, inside V (x) V with x_a (x) x_b
    /// at index a*g + b.
    std::vector<linalg::SparseVector> tensor_relations() const;
    /// Basis of the annihilator of tensor_relations() in the dual of V (x) V.
    std::vector<linalg::SparseVector> dual_relations() const;

private:
    std::size_t generators_ = 0;
    std::vector<std::string> labels_;
    std::vector<linalg::SparseVector> relations_;
    std::map<std::size_t, std::vector<linalg::SparseVector>> higher_;
};

/// V = H^2(M;Q), R = ker(Sym^2 V -> H^4). Checks that Sym^2 V -> H^4 is onto and
/// that the quotient matches H^{2w} for w = 3, 4; otherwise throws NotQuadratic.
/// With `force`, the missing higher relations (kernels of Sym^w V -> H^{2w}) are
/// recorded instead, so the Hilbert series still matches the cohomology.
QuadraticPresentation quadratic_presentation(const manifold::SixManifoldRing& ring, bool force = false);

/// dim of the weight-w part for w <= cutoff.
series::TruncatedSeries hilbert_series(const QuadraticPresentation& p, std::size_t cutoff = series::kDefaultCutoff);

/// 1 / hilbert(-s), without any check.
series::TruncatedSeries naive_dual_series(const QuadraticPresentation& p, std::size_t cutoff = series::kDefaultCutoff);

/// Dimensions of T(V)/(relations) for weights 0..max_weight, relations in
/// V (x) V (index a*g + b). Stops early once the next weight would need more
/// than `ambient_budget` coordinates, so the result may be shorter.
std::vector<std::size_t> tensor_quotient_dims(std::size_t generators, const std::vector<linalg::SparseVector>& relations,
                                              std::size_t max_weight, std::size_t ambient_budget);

inline constexpr std::size_t kDirectDualMaxWeight = 6;
inline constexpr std::size_t kDirectDualBudget = 6000;

struct KoszulDual {
    series::TruncatedSeries series;
    /// Weights 0..checked_weight computed from the dual presentation.
    std::vector<std::size_t> direct_dims;
    std::size_t checked_weight = 0;
};

/// Reciprocal of hilbert(-s), cross-checked against the quadratic dual
/// T(V*)/(R^perp) up to weight min(cutoff, 6) within the budget. Throws
/// KoszulInconsistency on a negative coefficient or a disagreement.
KoszulDual koszul_dual(const QuadraticPresentation& p, std::size_t cutoff = series::kDefaultCutoff);
series::TruncatedSeries koszul_dual_series(const QuadraticPresentation& p,
                                           std::size_t cutoff = series::kDefaultCutoff);

/// Homotopy Lie algebra dimensions (loop degree = weight). Non-quadratic
/// presentations throw NotQuadratic unless `force`, in which case the naive
/// dual series is inverted (and typically fails with NegativeLieDimension).
series::GradedLieDims lie_dims(const QuadraticPresentation& p, std::size_t cutoff = series::kDefaultCutoff,
                               bool force = false);

} // namespace loophom::rational
