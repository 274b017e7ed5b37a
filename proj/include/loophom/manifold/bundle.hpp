#pragma once

#include "loophom/manifold/four_manifold.hpp"

#include <cstdint>
#include <vector>

namespace loophom::manifold {

using Z2Vector = std::vector<std::uint8_t>;

/// A rank-3 vector bundle over N, classified by (w2, p1), together with a
/// decomposition f = q*(f') . Bs_*(alpha): alpha is an integral lift of w2 and
/// ell = p1(f')/4 is the level of the S^4 component, so that
///
///   p1 = 4 ell + alpha^T Q alpha.
struct BundleData {
    Z2Vector w2;
    std::int64_t p1 = 0;
    IntVector alpha;
    std::int64_t ell = 0;

    friend bool operator==(const BundleData&, const BundleData&) = default;
};

/// Chooses the 0/1 lift of w2 (primitive whenever w2 != 0) and solves for ell.
/// Throws InvalidArgument on a length mismatch and InvalidBundle when
/// p1 - alpha^T Q alpha is not divisible by 4.
BundleData bundle_from_classes(const FourManifold& n, const Z2Vector& w2, std::int64_t p1);

/// The same bundle presented through a different lift alpha' = alpha mod 2.
/// Throws InvalidBundle if alpha' does not reduce to w2, or the level is not integral.
BundleData with_lift(const FourManifold& n, const BundleData& b, const IntVector& alpha);

bool is_spin(const BundleData& b);

/// Throws InvalidBundle if the stored fields violate the bundle invariants.
void validate(const FourManifold& n, const BundleData& b);

/// N = S^4: M has cells S^2 u_{k eta_2} e^4 u e^6.
struct CellStructureD0 {
    std::int64_t k = 0;
};

/// k = |ell|. Throws WrongDimension when d != 0.
CellStructureD0 d0_cell_structure(const FourManifold& n, const BundleData& b);

/// Loop spaces of two such 6-manifolds over d >= 1 bases agree iff the ranks
/// of H^2 agree. Throws Unsupported when either base is S^4.
bool loop_rigidity_equivalent(const FourManifold& na, const BundleData& ba,
                              const FourManifold& nb, const BundleData& bb);

} // namespace loophom::manifold
