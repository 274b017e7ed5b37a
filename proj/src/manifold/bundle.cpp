#include "loophom/manifold/bundle.hpp"

#include "loophom/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace loophom::manifold {

namespace {

std::int64_t level_for(const FourManifold& n, std::int64_t p1, const IntVector& alpha)
{
    const Integer rest = Integer(p1) - n.pairing(alpha, alpha);
    if (rest % 4 != 0)
        fail(ErrorCode::InvalidBundle, "no rank-3 bundle has these classes: p1 - alpha^2 = " + rest.str() +
                                           " is not divisible by 4");
    return static_cast<std::int64_t>(rest / 4);
}

} // namespace

BundleData bundle_from_classes(const FourManifold& n, const Z2Vector& w2, std::int64_t p1)
{
    if (w2.size() != n.rank())
        fail(ErrorCode::InvalidArgument, "w2 has length " + std::to_string(w2.size()) + ", expected " +
                                             std::to_string(n.rank()));
    BundleData b;
    b.w2 = w2;
    b.p1 = p1;
    b.alpha.resize(w2.size());
    for (std::size_t i = 0; i < w2.size(); ++i) {
        if (w2[i] > 1)
            fail(ErrorCode::InvalidArgument, "w2 entries must be 0 or 1");
        b.alpha[i] = w2[i];
    }
    // A 0/1 vector with a nonzero entry already has gcd 1.
    b.ell = level_for(n, p1, b.alpha);
    return b;
}

BundleData with_lift(const FourManifold& n, const BundleData& b, const IntVector& alpha)
{
    if (alpha.size() != b.w2.size())
        fail(ErrorCode::InvalidArgument, "lift has the wrong length");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (static_cast<std::uint8_t>(((alpha[i] % 2) + 2) % 2) != b.w2[i])
            fail(ErrorCode::InvalidBundle, "lift does not reduce to w2 mod 2");
    BundleData out = b;
    out.alpha = alpha;
    out.ell = level_for(n, b.p1, alpha);
    return out;
}

bool is_spin(const BundleData& b)
{
    return std::all_of(b.w2.begin(), b.w2.end(), [](std::uint8_t bit) { return bit == 0; });
}

void validate(const FourManifold& n, const BundleData& b)
{
    if (b.w2.size() != n.rank() || b.alpha.size() != n.rank())
        fail(ErrorCode::InvalidBundle, "bundle data does not match the rank of H^2");
    for (std::size_t i = 0; i < b.alpha.size(); ++i)
        if (((b.alpha[i] % 2) + 2) % 2 != b.w2[i])
            fail(ErrorCode::InvalidBundle, "alpha is not a lift of w2");
    if (Integer(b.p1) != 4 * Integer(b.ell) + n.pairing(b.alpha, b.alpha))
        fail(ErrorCode::InvalidBundle, "p1 != 4 ell + alpha^2");
    if (!is_spin(b) && gcd_of(b.alpha) != 1)
        fail(ErrorCode::InvalidBundle, "alpha must be primitive for a non-Spin bundle");
}

CellStructureD0 d0_cell_structure(const FourManifold& n, const BundleData& b)
{
    if (n.rank() != 0)
        fail(ErrorCode::WrongDimension, "cell structure S^2 u e^4 u e^6 needs N = S^4 (d = 0), got d = " +
                                            std::to_string(n.rank()));
    return CellStructureD0{std::llabs(b.ell)};
}

bool loop_rigidity_equivalent(const FourManifold& na, const BundleData&, const FourManifold& nb, const BundleData&)
{
    if (na.rank() == 0 || nb.rank() == 0)
        fail(ErrorCode::Unsupported, "loop rigidity by H^2 rank needs d >= 1; over S^4 the loop type depends on k");
    return na.rank() == nb.rank();
}

} // namespace loophom::manifold
