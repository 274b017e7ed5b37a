#pragma once

#include "loophom/manifold/bundle.hpp"
#include "loophom/series/pbw.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace loophom::rational {

enum class Coformality { Coformal, NotCoformal };

std::string to_string(Coformality c);

struct CoformalityReport {
    Coformality verdict = Coformality::Coformal;
    std::string witness;
    std::size_t cutoff = 0;
    /// First loop degree where the naive dual series and the loop homology differ.
    std::optional<std::size_t> mismatch_degree;
    /// Homotopy Lie dimensions obtained both ways (d >= 2 only).
    std::optional<series::GradedLieDims> lie_dims;
};

/// d >= 2: compares lie_dims with the decomposition ranks through `cutoff`
/// (KoszulInconsistency if they differ). d = 1: the explicit model has the
/// cubic term dx = c^3 and the naive dual series departs from the loop
/// homology. Throws WrongDimension for d = 0.
CoformalityReport coformality_check(const manifold::FourManifold& n, const manifold::BundleData& b,
                                    std::size_t cutoff = 10);

/// True iff d <= 2.
bool is_rationally_elliptic(const manifold::FourManifold& n, const manifold::BundleData& b);

} // namespace loophom::rational
