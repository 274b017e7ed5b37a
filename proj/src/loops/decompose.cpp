#include "loophom/loops/decompose.hpp"

#include "loophom/error.hpp"

#include <cstdlib>
#include <utility>

namespace loophom::loops {

using manifold::BundleData;
using manifold::FourManifold;

namespace {

using H = HomotopyExpr;

std::vector<std::pair<std::int64_t, int>> prime_factorization(std::int64_t k)
{
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        int r = 0;
        while (k % p == 0) {
            k /= p;
            ++r;
        }
        if (r)
            out.emplace_back(p, r);
    }
    if (k > 1)
        out.emplace_back(k, 1);
    return out;
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

Decomposition decompose_over_s4(std::int64_t k)
{
    const H loop_s7 = H::loop(H::sphere(7));
    if (k == 0)
        return {H::product({H::circle(), H::loop(H::sphere(3)), H::loop(H::sphere(4))}),
                "k = 0: trivial bundle, M = S^2 x S^4 and Loop S^2 = S^1 x Loop S^3 "
                "(classical; beyond the k-odd and k = 2^r, r >= 3 decompositions)"};
    if (k == 1)
        return {H::product({H::circle(), loop_s7}),
                "k = 1: M = CP^3, Loop CP^3 = S^1 x Loop S^7 "
                "(classical; beyond the k-odd and k = 2^r, r >= 3 decompositions)"};

    int two_power = 0;
    std::int64_t odd = k;
    while (odd % 2 == 0) {
        odd /= 2;
        ++two_power;
    }
    if (two_power == 0) {
        std::vector<H> factors{H::circle(), loop_s7};
        for (auto [p, r] : prime_factorization(k))
            factors.push_back(H::sphere_mod(ipow(p, r)));
        return {H::product(std::move(factors)), std::nullopt};
    }
    if (odd > 1)
        fail(ErrorCode::UnsupportedCase,
             "k = " + std::to_string(k) + " = 2^" + std::to_string(two_power) + " * " + std::to_string(odd) +
                 ": the case k = 2^r m with m odd and greater than 1 is much more difficult; no loop "
                 "decomposition is known");
    if (two_power == 1)
        fail(ErrorCode::UnsupportedCase,
             "k = 2: S^3{2} is not an H-space, so Loop M is not S^1 x S^3{2} x Loop S^7; no loop "
             "decomposition is known");
    if (two_power == 2)
        fail(ErrorCode::UnsupportedCase,
             "k = 4: the splitting Loop(P^4(2^r) u e^7) = S^3{2^r} x Loop S^7 is only available for "
             "r >= 3; no loop decomposition is known");
    return {H::product({H::circle(), H::sphere_mod(k), loop_s7}), std::nullopt};
}

} // namespace

HomotopyExpr j_wedge(std::size_t d)
{
    std::vector<H> copies;
    for (std::size_t i = 0; i + 2 < d; ++i)
        copies.push_back(H::wedge({H::sphere(2), H::sphere(3)}));
    return H::wedge(std::move(copies));
}

Decomposition decompose(const FourManifold& n, const BundleData& b)
{
    manifold::validate(n, b);
    const std::size_t d = n.rank();
    if (d == 0)
        return decompose_over_s4(manifold::d0_cell_structure(n, b).k);
    if (d == 1)
        return {H::product({H::circle(), H::loop(H::sphere(2)), H::loop(H::sphere(5))}), std::nullopt};

    const H s2_x_s3 = H::product({H::sphere(2), H::sphere(3)});
    const H j = j_wedge(d);
    const H bouquet = H::wedge({j, H::smash({j, H::loop(s2_x_s3)})});
    return {H::product({H::circle(), H::loop(H::sphere(2)), H::loop(s2_x_s3), H::loop(bouquet)}), std::nullopt};
}

YSpaceReport y_space_report(const FourManifold& n, const BundleData& b)
{
    manifold::validate(n, b);
    const std::size_t d = n.rank();
    if (d == 0)
        fail(ErrorCode::WrongDimension, "the circle bundle Y -> N needs d >= 1");

    YSpaceReport r;
    if (manifold::is_spin(b)) {
        r.beta.assign(d, 0);
        r.beta[0] = 1;
    } else {
        r.beta = b.alpha;
    }
    r.parity = manifold::pairing_parity(n, r.beta);
    r.case_label = r.parity == manifold::Parity::Odd ? "I" : "II";

    if (d == 1) {
        r.y_cells = "S^5";
    } else {
        std::string cells;
        for (std::size_t i = 0; i + 1 < d; ++i)
            cells += (i ? " v " : "") + std::string("(S^2 v S^3)");
        r.y_cells = cells + " u e^5";
    }
    r.route = r.parity == manifold::Parity::Odd
                  ? "pullback of the bundle to Y is trivial, X = S^2 x Y, Loop M = S^1 x Loop S^2 x Loop Y"
                  : "the sphere bundle splits after looping, Loop M = Loop S^2 x Loop N";
    return r;
}

} // namespace loophom::loops
