#include "loophom/manifold/four_manifold.hpp"

#include "loophom/error.hpp"

namespace loophom::manifold {

FourManifold FourManifold::from_form(IntMatrix form)
{
    const std::size_t d = form.size();
    for (const auto& row : form)
        if (row.size() != d)
            fail(ErrorCode::InvalidArgument, "intersection form must be a square matrix");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (form[i][j] != form[j][i])
                fail(ErrorCode::NotSymmetric, "intersection form is not symmetric at (" + std::to_string(i) +
                                                  "," + std::to_string(j) + ")");
    const Integer det = loophom::determinant(form);
    if (det != 1 && det != -1)
        fail(ErrorCode::NotUnimodular, "intersection form has determinant " + det.str() + ", expected +-1");
    return FourManifold(std::move(form));
}

Integer FourManifold::determinant() const { return loophom::determinant(form_); }

IntVector FourManifold::apply(const IntVector& v) const
{
    if (v.size() != rank())
        fail(ErrorCode::InvalidArgument, "class has length " + std::to_string(v.size()) + ", expected " +
                                             std::to_string(rank()));
    IntVector out(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            out[i] += form_[i][j] * v[j];
    return out;
}

Integer FourManifold::pairing(const IntVector& u, const IntVector& v) const
{
    if (u.size() != rank() || v.size() != rank())
        fail(ErrorCode::InvalidArgument, "class length does not match the rank of H^2");
    Integer sum = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            sum += Integer(u[i]) * form_[i][j] * v[j];
    return sum;
}

Parity pairing_parity(const FourManifold& n, const IntVector& beta)
{
    if (beta.size() != n.rank())
        fail(ErrorCode::InvalidArgument, "beta has the wrong length");
    if (gcd_of(beta) != 1)
        fail(ErrorCode::NotPrimitive, "beta is not primitive");
    const Integer square = n.pairing(beta, beta);
    return (square % 2 == 0) ? Parity::Even : Parity::Odd;
}

} // namespace loophom::manifold
