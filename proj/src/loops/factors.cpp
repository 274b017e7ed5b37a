#include "loophom/loops/factors.hpp"

#include "loophom/error.hpp"
#include "loophom/loops/decompose.hpp"
#include "loophom/series/combinatorics.hpp"

#include <algorithm>

namespace loophom::loops {

using series::TruncatedSeries;

Integer LoopFactorMultiset::sphere_loop_count(int dimension) const
{
    auto it = sphere_loops.find(dimension);
    return it == sphere_loops.end() ? Integer(0) : it->second;
}

void LoopFactorMultiset::add_sphere_loops(int dimension, const Integer& count)
{
    if (count == 0)
        return;
    sphere_loops[dimension] += count;
}

namespace {

bool is_suspension(const HomotopyExpr& e)
{
    switch (e.kind()) {
    case NodeKind::Sphere:
    case NodeKind::Circle:
        return true;
    case NodeKind::Wedge:
        return std::all_of(e.children().begin(), e.children().end(), is_suspension);
    case NodeKind::Smash:
        return std::any_of(e.children().begin(), e.children().end(), is_suspension);
    default:
        return false;
    }
}

bool contains_loop(const HomotopyExpr& e)
{
    if (e.kind() == NodeKind::Loop)
        return true;
    return std::any_of(e.children().begin(), e.children().end(), contains_loop);
}

TruncatedSeries loop_of(const HomotopyExpr& x, std::size_t cutoff);

TruncatedSeries reduced(const HomotopyExpr& e, std::size_t cutoff)
{
    switch (e.kind()) {
    case NodeKind::Point:
    case NodeKind::SphereModN:
        return TruncatedSeries(cutoff);
    case NodeKind::Circle:
    case NodeKind::Sphere:
        return TruncatedSeries::monomial(static_cast<std::size_t>(e.number()), 1, cutoff);
    case NodeKind::Loop:
        return loop_of(e.inner(), cutoff) - TruncatedSeries::one(cutoff);
    case NodeKind::Product: {
        TruncatedSeries total = TruncatedSeries::one(cutoff);
        for (const auto& f : e.children())
            total = total * (TruncatedSeries::one(cutoff) + reduced(f, cutoff));
        return total - TruncatedSeries::one(cutoff);
    }
    case NodeKind::Wedge: {
        TruncatedSeries total(cutoff);
        for (const auto& f : e.children())
            total += reduced(f, cutoff);
        return total;
    }
    case NodeKind::Smash: {
        TruncatedSeries total = TruncatedSeries::one(cutoff);
        for (const auto& f : e.children())
            total = total * reduced(f, cutoff);
        return total;
    }
    }
    return TruncatedSeries(cutoff);
}

TruncatedSeries loop_of(const HomotopyExpr& x, std::size_t cutoff)
{
    switch (x.kind()) {
    case NodeKind::Point:
        return TruncatedSeries::one(cutoff);
    case NodeKind::Sphere: {
        const auto n = static_cast<std::size_t>(x.number());
        TruncatedSeries denom = TruncatedSeries::one(cutoff);
        if (n % 2 == 1) {
            denom -= TruncatedSeries::monomial(n - 1, 1, cutoff);
            return series::series_reciprocal(denom);
        }
        denom -= TruncatedSeries::monomial(2 * n - 2, 1, cutoff);
        return (TruncatedSeries::one(cutoff) + TruncatedSeries::monomial(n - 1, 1, cutoff)) *
               series::series_reciprocal(denom);
    }
    case NodeKind::Product: {
        TruncatedSeries total = TruncatedSeries::one(cutoff);
        for (const auto& f : x.children())
            total = total * loop_of(f, cutoff);
        return total;
    }
    case NodeKind::Wedge:
    case NodeKind::Smash: {
        if (!is_suspension(x))
            fail(ErrorCode::UnsupportedNode, "loop homology needs a suspension, got " + x.render());
        // Bott-Samelson: H_*(Loop Sigma Z) = T(H~_*(Z))
        const TruncatedSeries h = reduced(x, cutoff + 1);
        if (h[0] != 0 || h[1] != 0)
            fail(ErrorCode::UnsupportedNode, "loop of a non-simply-connected wedge: " + x.render());
        std::vector<Rational> desuspended(cutoff + 1);
        for (std::size_t n = 1; n <= cutoff; ++n)
            desuspended[n] = -h[n + 1];
        desuspended[0] = 1;
        return series::series_reciprocal(TruncatedSeries(std::move(desuspended), cutoff));
    }
    default:
        fail(ErrorCode::UnsupportedNode, "no loop homology rule for Loop(" + x.render() + ")");
    }
}

void hilton_milnor_into(LoopFactorMultiset& out, const SphereMultiset& spheres, std::size_t cutoff)
{
    struct LetterClass {
        std::int64_t weight;
        Integer colors;
    };
    std::vector<LetterClass> classes;
    Integer letters = 0;
    for (const auto& [dim, count] : spheres) {
        if (dim < 2)
            fail(ErrorCode::InvalidArgument, "Hilton-Milnor needs a simply connected wedge (sphere dims >= 2)");
        if (count < 0)
            fail(ErrorCode::InvalidArgument, "negative sphere multiplicity");
        if (count == 0)
            continue;
        letters += count;
        if (static_cast<std::size_t>(dim - 1) <= cutoff)
            classes.push_back({dim - 1, count});
    }
    if (letters >= 2)
        out.truncated = true;

    const auto budget = static_cast<std::int64_t>(cutoff);
    std::vector<std::int64_t> m(classes.size(), 0);
    std::vector<Integer> colors;
    for (const auto& c : classes)
        colors.push_back(c.colors);

    // enumerate every multidegree of total weight <= cutoff
    auto visit = [&](auto&& self, std::size_t i, std::int64_t weight) -> void {
        if (i == classes.size()) {
            if (weight == 0)
                return;
            const Integer count = series::necklace_count_colored(m, colors);
            out.add_sphere_loops(static_cast<int>(weight + 1), count);
            return;
        }
        for (std::int64_t k = 0; weight + k * classes[i].weight <= budget; ++k) {
            m[i] = k;
            self(self, i + 1, weight + k * classes[i].weight);
        }
        m[i] = 0;
    };
    visit(visit, 0, 0);
}

void expand_loop(LoopFactorMultiset& out, const HomotopyExpr& x, std::size_t cutoff)
{
    switch (x.kind()) {
    case NodeKind::Point:
        return;
    case NodeKind::Sphere:
        if (static_cast<std::size_t>(x.number()) <= cutoff + 1)
            out.add_sphere_loops(static_cast<int>(x.number()), 1);
        else
            out.truncated = true;
        return;
    case NodeKind::Product:
        for (const auto& f : x.children())
            expand_loop(out, f, cutoff);
        return;
    case NodeKind::Wedge:
    case NodeKind::Smash:
        if (contains_loop(x))
            out.truncated = true;
        hilton_milnor_into(out, bouquet_from_homology(x, cutoff + 1), cutoff);
        return;
    default:
        fail(ErrorCode::UnsupportedNode, "cannot expand Loop(" + x.render() + ") into sphere loops");
    }
}

} // namespace

SphereMultiset bouquet_spheres(std::size_t d, std::size_t cutoff)
{
    if (d < 2)
        fail(ErrorCode::InvalidArgument, "the bouquet J v (J ^ Loop(S^2 x S^3)) needs d >= 2");
    TruncatedSeries j_part(cutoff);
    j_part += TruncatedSeries::monomial(2, static_cast<long>(d - 2), cutoff);
    j_part += TruncatedSeries::monomial(3, static_cast<long>(d - 2), cutoff);
    const TruncatedSeries loop_z = series::series_reciprocal(TruncatedSeries({1, -1, -1, 1}, cutoff));
    const TruncatedSeries h = j_part * loop_z;
    SphereMultiset out;
    for (std::size_t n = 1; n <= cutoff; ++n)
        if (h[n] != 0)
            out[static_cast<int>(n)] = numerator_of(h[n]);
    return out;
}

SphereMultiset bouquet_from_homology(const HomotopyExpr& bouquet, std::size_t cutoff)
{
    if (!is_suspension(bouquet))
        fail(ErrorCode::UnsupportedNode, "not a bouquet of spheres: " + bouquet.render());
    const TruncatedSeries h = reduced(bouquet, cutoff);
    SphereMultiset out;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        if (h[n] == 0)
            continue;
        if (!is_integral(h[n]) || h[n] < 0)
            fail(ErrorCode::UnsupportedNode, "reduced homology is not that of a bouquet: " + bouquet.render());
        out[static_cast<int>(n)] = numerator_of(h[n]);
    }
    return out;
}

LoopFactorMultiset hilton_milnor(const SphereMultiset& spheres, std::size_t cutoff)
{
    LoopFactorMultiset out;
    out.cutoff = cutoff;
    hilton_milnor_into(out, spheres, cutoff);
    return out;
}

LoopFactorMultiset expand_factors(const HomotopyExpr& loop_space, std::size_t cutoff)
{
    LoopFactorMultiset out;
    out.cutoff = cutoff;
    std::vector<HomotopyExpr> factors;
    if (loop_space.kind() == NodeKind::Product)
        factors = loop_space.children();
    else
        factors.push_back(loop_space);
    for (const auto& f : factors) {
        switch (f.kind()) {
        case NodeKind::Point:
            break;
        case NodeKind::Circle:
            out.circles += 1;
            break;
        case NodeKind::SphereModN:
            out.mod_factors.push_back(f.number());
            break;
        case NodeKind::Loop:
            expand_loop(out, f.inner(), cutoff);
            break;
        default:
            fail(ErrorCode::UnsupportedNode, "not a loop-space factor: " + f.render());
        }
    }
    std::sort(out.mod_factors.begin(), out.mod_factors.end());
    return out;
}

LoopFactorMultiset loop_factors(const manifold::FourManifold& n, const manifold::BundleData& b, std::size_t cutoff)
{
    return expand_factors(decompose(n, b).loop_space, cutoff);
}

TruncatedSeries reduced_homology_series(const HomotopyExpr& e, std::size_t cutoff) { return reduced(e, cutoff); }

TruncatedSeries loop_homology_series(const HomotopyExpr& e, std::size_t cutoff)
{
    return TruncatedSeries::one(cutoff) + reduced(e, cutoff);
}

} // namespace loophom::loops
