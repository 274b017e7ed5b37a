#include "loophom/error.hpp"
#include "loophom/loops/factors.hpp"
#include "loophom/pitables/abelian_group.hpp"
#include "loophom/pitables/sphere_table.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace loophom;
using namespace loophom::pitables;
using manifold::bundle_from_classes;

namespace {

template <class F>
ErrorCode error_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

FGAbelianGroup pi_of(const manifold::FourManifold& n, const manifold::BundleData& b, int k)
{
    return pi_manifold(loops::loop_factors(n, b, 12), SphereTable::builtin(), k);
}

} // namespace

TEST_CASE("abelian group canonical form")
{
    CHECK(FGAbelianGroup().render() == "0");
    CHECK(FGAbelianGroup::free(1).render() == "Z");
    CHECK(FGAbelianGroup::from_orders(2, {12, 2}).render() == "Z^2 + Z/12 + Z/2");
    CHECK(FGAbelianGroup::from_orders(0, {2, 2, 2}).render() == "(Z/2)^3");
    CHECK(FGAbelianGroup::from_orders(0, {3, 5}) == FGAbelianGroup::cyclic(15));
    CHECK(FGAbelianGroup::cyclic(15).render() == "Z/15");
    CHECK(FGAbelianGroup::from_orders(0, {4, 6}).render() == "Z/12 + Z/2");
    CHECK(FGAbelianGroup::cyclic(1).is_trivial());
    CHECK(FGAbelianGroup::from_orders(0, {12, 2}).torsion_order() == 24);
    CHECK(error_of([] { FGAbelianGroup::cyclic(0); }) == ErrorCode::InvalidArgument);
    const auto g = FGAbelianGroup::from_orders(3, {8, 9, 2});
    CHECK(FGAbelianGroup::from_json(g.to_json()) == g);
}

TEST_CASE("direct sums are commutative and associative with a unique canonical form")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> rank(0, 3), count(0, 3);
    std::uniform_int_distribution<std::int64_t> order(2, 60);
    auto random_group = [&] {
        std::vector<std::int64_t> orders;
        for (int i = count(rng); i > 0; --i)
            orders.push_back(order(rng));
        return std::make_pair(FGAbelianGroup::from_orders(rank(rng), orders), orders);
    };
    for (int trial = 0; trial < 100; ++trial) {
        auto [a, oa] = random_group();
        auto [b, ob] = random_group();
        auto [c, oc] = random_group();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        // same group from shuffled generators
        std::vector<std::int64_t> all = oa;
        all.insert(all.end(), ob.begin(), ob.end());
        std::shuffle(all.begin(), all.end(), rng);
        const auto merged = FGAbelianGroup::from_orders(a.free_rank() + b.free_rank(), all);
        CHECK(merged == a + b);
        CHECK(merged.render() == (a + b).render());
        // invariant factors divide each other and multiply to the torsion order
        Integer product = 1;
        Integer previous = 0;
        for (const auto& [f, m] : merged.invariant_factors()) {
            if (previous != 0)
                CHECK(previous % f == 0);
            previous = f;
            for (Integer i = 0; i < m; ++i)
                product *= f;
        }
        CHECK(product == merged.torsion_order());
        CHECK(a.times(3) == a + a + a);
    }
}

TEST_CASE("built-in sphere table")
{
    const auto& t = SphereTable::builtin();
    CHECK(t.max_n() == 15);
    CHECK(t.max_k() == 15);
    CHECK(pi_sphere(t, 2, 3) == FGAbelianGroup::free(1));
    CHECK(pi_sphere(t, 4, 5) == FGAbelianGroup::cyclic(2));
    CHECK(pi_sphere(t, 5, 4).is_trivial());
    CHECK(pi_sphere(t, 7, 7) == FGAbelianGroup::free(1));
    CHECK(pi_sphere(t, 2, 6) == FGAbelianGroup::cyclic(12));
    CHECK(pi_sphere(t, 4, 7) == FGAbelianGroup::from_orders(1, {12}));
    CHECK(pi_sphere(t, 3, 6) == FGAbelianGroup::cyclic(12));
    CHECK(pi_sphere(t, 1, 9).is_trivial());
    CHECK(pi_sphere(t, 20, 20) == FGAbelianGroup::free(1));
    CHECK(error_of([&] { pi_sphere(t, 2, 16); }) == ErrorCode::TableOutOfRange);
    // stable stems: pi_{n+k}(S^n) for n > k + 1
    CHECK(pi_sphere(t, 12, 15) == FGAbelianGroup::cyclic(24));
    CHECK(pi_sphere(t, 9, 15) == FGAbelianGroup::cyclic(2));
    CHECK(pi_sphere(t, 7, 15) == FGAbelianGroup::from_orders(0, {2, 2, 2}));
}

TEST_CASE("table parsing")
{
    const auto t = SphereTable::parse("# comment\n2 3 1\n4 5 0 2   # eta\n\n2 2 1\n");
    CHECK(t.size() == 3);
    CHECK(t.entry(4, 5) == FGAbelianGroup::cyclic(2));
    try {
        SphereTable::parse("2 3 1\n2 x 1\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find(":2:") != std::string::npos);
    }
    CHECK(error_of([] { SphereTable::parse("2 3\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { SphereTable::parse("3 2 0 2\n"); }) == ErrorCode::CoverageViolation);
    CHECK(error_of([] { SphereTable::parse("3 3 0 2\n"); }) == ErrorCode::CoverageViolation);
    CHECK(error_of([] { SphereTable::parse("4 5 0 2\n4 5 0 3\n"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { SphereTable::load("/nonexistent/table.txt"); }) == ErrorCode::ParseError);
}

TEST_CASE("homotopy groups of M")
{
    const auto cp2 = manifold::new_four_manifold({{1}});
    const auto b1 = bundle_from_classes(cp2, {1}, 5);
    CHECK(pi_of(cp2, b1, 2) == FGAbelianGroup::free(2));
    CHECK(pi_of(cp2, b1, 3) == FGAbelianGroup::free(1));
    CHECK(pi_of(cp2, b1, 6).render() == "Z/12 + Z/2");

    const auto s4 = manifold::FourManifold::sphere();
    CHECK(pi_of(s4, bundle_from_classes(s4, {}, 60), 3) == FGAbelianGroup::cyclic(15));
    CHECK(pi_of(s4, bundle_from_classes(s4, {}, 60), 2) == FGAbelianGroup::free(1));
    CHECK(pi_of(s4, bundle_from_classes(s4, {}, 32), 3) == FGAbelianGroup::cyclic(8));
    CHECK(error_of([&] { pi_of(s4, bundle_from_classes(s4, {}, 60), 4); }) == ErrorCode::UnsupportedDegree);
    CHECK(error_of([&] { pi_of(cp2, b1, 1); }) == ErrorCode::InvalidArgument);

    const auto d3 = manifold::new_four_manifold(oracle::identity_form(3));
    const auto f = loops::loop_factors(d3, bundle_from_classes(d3, {0, 0, 0}, 0), 4);
    CHECK(error_of([&] { pi_manifold(f, SphereTable::builtin(), 6); }) == ErrorCode::TableOutOfRange);
}

TEST_CASE("pi_2 has rank d+1 and pi_3 of d = 0 is Z/k")
{
    std::mt19937_64 rng(43);
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto q = oracle::random_unimodular_form(rng, d, 10);
        const auto n = manifold::new_four_manifold(q);
        const auto in = oracle::random_bundle_input(rng, q, 10);
        CHECK(pi_of(n, bundle_from_classes(n, in.w2, in.p1), 2) == FGAbelianGroup::free(d + 1));
    }
    const auto s4 = manifold::FourManifold::sphere();
    for (std::int64_t k : {3, 5, 7, 9, 15, 21, 45, 105, 8, 16, 32, 64}) {
        CAPTURE(k);
        CHECK(pi_of(s4, bundle_from_classes(s4, {}, 4 * k), 3) == FGAbelianGroup::cyclic(k));
    }
}
