#pragma once

#include "loophom/loops/homotopy_expr.hpp"
#include "loophom/manifold/bundle.hpp"
#include "loophom/numeric.hpp"
#include "loophom/series/truncated_series.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace loophom::loops {

/// dimension -> multiplicity
using SphereMultiset = std::map<int, Integer>;

/// Omega M written as S^1-factors x prod Omega S^n x prod S^3{p^r}.
///
/// Sphere loops are complete for dimensions <= cutoff + 1, i.e. for every factor
/// with rational homotopy in loop degree <= cutoff; `truncated` records that
/// further factors exist beyond that range.
struct LoopFactorMultiset {
    std::size_t cutoff = 0;
    Integer circles = 0;
    SphereMultiset sphere_loops;
    std::vector<std::int64_t> mod_factors;
    bool truncated = false;

    Integer sphere_loop_count(int dimension) const;
    void add_sphere_loops(int dimension, const Integer& count);

    friend bool operator==(const LoopFactorMultiset&, const LoopFactorMultiset&) = default;
};

/// Spheres in the bouquet J v (J ^ Loop(S^2 x S^3)), dimensions <= cutoff, read
/// off the reduced homology (d-2)(t^2+t^3) / ((1-t)(1-t^2)).
/// Throws InvalidArgument for d < 2.
SphereMultiset bouquet_spheres(std::size_t d, std::size_t cutoff);

/// Hilton-Milnor: Loop of a wedge of spheres is the product over basic products
/// w of Loop S^{|w|+1}, |w| = sum m_i (dim_i - 1). Only factors with sphere
/// dimension <= cutoff + 1 are listed. Throws InvalidArgument for dims < 2.
LoopFactorMultiset hilton_milnor(const SphereMultiset& spheres, std::size_t cutoff);

/// Expands a product expression (as returned by decompose) into elementary
/// factors; Loop(Product) splits and Loop(Wedge) goes through Hilton-Milnor.
LoopFactorMultiset expand_factors(const HomotopyExpr& loop_space, std::size_t cutoff);

LoopFactorMultiset loop_factors(const manifold::FourManifold& n, const manifold::BundleData& b,
                                std::size_t cutoff);

/// Reduced rational homology Poincare series of a space expression. Homology
/// is taken to be free, S^3{n} is rationally a point.
series::TruncatedSeries reduced_homology_series(const HomotopyExpr& e, std::size_t cutoff);

/// Rational Poincare series of H_*(e; Q); for the output of decompose this is
/// the loop homology of M. Throws UnsupportedNode for loops of S^1, of S^3{n},
/// iterated loops, and loops of non-simply-connected wedges.
series::TruncatedSeries loop_homology_series(const HomotopyExpr& e, std::size_t cutoff);

/// Multiset of sphere dimensions of a bouquet, from its reduced homology.
SphereMultiset bouquet_from_homology(const HomotopyExpr& bouquet, std::size_t cutoff);

} // namespace loophom::loops
