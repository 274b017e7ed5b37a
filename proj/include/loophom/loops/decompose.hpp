#pragma once

#include "loophom/loops/homotopy_expr.hpp"
#include "loophom/manifold/bundle.hpp"
#include "loophom/series/truncated_series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loophom::loops {

/// Loop space of the sphere-bundle 6-manifold M together with any note that
/// the case is handled by classical facts rather than the decomposition
/// theorems (d = 0 with k = 0 or k = 1).
struct Decomposition {
    HomotopyExpr loop_space;
    std::optional<std::string> extension_note;
};

/// Omega M as a product of elementary factors.
///   d = 1:  S^1 x Loop(S^2) x Loop(S^5)
///   d >= 2: S^1 x Loop(S^2) x Loop(S^2 x S^3) x Loop(J v (J ^ Loop(S^2 x S^3))),
///           J the wedge of d-2 copies of S^2 v S^3
///   d = 0:  by k = |ell|; see the README for the supported values.
/// Throws UnsupportedCase for d = 0 and k = 2, 4, or 2^r m with odd m > 1.
Decomposition decompose(const manifold::FourManifold& n, const manifold::BundleData& b);

/// J = wedge of (d-2) copies of S^2 v S^3; the point for d = 2.
HomotopyExpr j_wedge(std::size_t d);

/// The circle bundle Y -> N used to split M, classified by beta.
struct YSpaceReport {
    IntVector beta;
    manifold::Parity parity = manifold::Parity::Even;
    /// "I" when <beta^2,[N]> is odd, "II" when even.
    std::string case_label;
    /// Cell structure of Y, e.g. "S^5" or "(S^2 v S^3) v (S^2 v S^3) u e^5".
    std::string y_cells;
    /// How Omega M splits in this case.
    std::string route;
};

/// beta = alpha for a non-Spin bundle, the first basis class otherwise.
/// Requires d >= 1 (throws WrongDimension).
YSpaceReport y_space_report(const manifold::FourManifold& n, const manifold::BundleData& b);

} // namespace loophom::loops
