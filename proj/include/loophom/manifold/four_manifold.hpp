#pragma once

#include "loophom/numeric.hpp"

#include <cstddef>
#include <cstdint>

namespace loophom::manifold {

/// A simply connected closed 4-manifold N, recorded by its intersection form
/// on a basis x_1..x_d of H^2(N;Z). d = 0 stands for N = S^4.
class FourManifold {
public:
    /// Validates Q: square, symmetric, |det Q| = 1.
    /// Throws InvalidArgument, NotSymmetric or NotUnimodular.
    static FourManifold from_form(IntMatrix form);

    static FourManifold sphere() { return FourManifold(IntMatrix{}); }

    std::size_t rank() const noexcept { return form_.size(); }
    const IntMatrix& form() const noexcept { return form_; }
    std::int64_t entry(std::size_t i, std::size_t j) const { return form_.at(i).at(j); }
    Integer determinant() const;

    /// <u v, [N]> = u^T Q v
    Integer pairing(const IntVector& u, const IntVector& v) const;
    IntVector apply(const IntVector& v) const;

    friend bool operator==(const FourManifold&, const FourManifold&) = default;

private:
    explicit FourManifold(IntMatrix form) : form_(std::move(form)) {}

    IntMatrix form_;
};

/// new_four_manifold
inline FourManifold new_four_manifold(IntMatrix form) { return FourManifold::from_form(std::move(form)); }

enum class Parity { Even, Odd };

/// Parity of <beta^2,[N]> for a primitive class beta. Throws NotPrimitive.
Parity pairing_parity(const FourManifold& n, const IntVector& beta);

} // namespace loophom::manifold
