#include "loophom/pitables/abelian_group.hpp"

#include "loophom/error.hpp"

#include <algorithm>
#include <limits>

namespace loophom::pitables {

namespace {

// prime -> prime power, for each primary part of Z/n
std::vector<std::int64_t> primary_parts(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        std::int64_t q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.push_back(q);
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::int64_t prime_of(std::int64_t q)
{
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0)
            return p;
    return q;
}

} // namespace

FGAbelianGroup FGAbelianGroup::free(const Integer& rank)
{
    if (rank < 0)
        fail(ErrorCode::InvalidArgument, "negative free rank");
    FGAbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(std::int64_t order) { return from_orders(0, {order}); }

FGAbelianGroup FGAbelianGroup::from_orders(const Integer& free_rank, const std::vector<std::int64_t>& orders)
{
    FGAbelianGroup g = free(free_rank);
    for (auto n : orders) {
        if (n < 1)
            fail(ErrorCode::InvalidArgument, "torsion order must be positive, got " + std::to_string(n));
        for (auto q : primary_parts(n))
            g.torsion_[q] += 1;
    }
    return g;
}

Integer FGAbelianGroup::torsion_order() const
{
    Integer order = 1;
    for (const auto& [q, mult] : torsion_)
        order *= boost::multiprecision::pow(Integer(q), static_cast<unsigned>(mult));
    return order;
}

FGAbelianGroup& FGAbelianGroup::operator+=(const FGAbelianGroup& other)
{
    free_rank_ += other.free_rank_;
    for (const auto& [q, mult] : other.torsion_)
        torsion_[q] += mult;
    return *this;
}

FGAbelianGroup FGAbelianGroup::times(const Integer& count) const
{
    if (count < 0)
        fail(ErrorCode::InvalidArgument, "negative direct-sum multiplicity");
    FGAbelianGroup g;
    if (count == 0)
        return g;
    g.free_rank_ = free_rank_ * count;
    for (const auto& [q, mult] : torsion_)
        g.torsion_[q] = mult * count;
    return g;
}

FGAbelianGroup operator+(FGAbelianGroup a, const FGAbelianGroup& b) { return a += b; }

std::vector<std::pair<Integer, Integer>> FGAbelianGroup::invariant_factors() const
{
    // per prime, prime powers in decreasing order with multiplicities
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, Integer>>> by_prime;
    for (const auto& [q, mult] : torsion_)
        by_prime[prime_of(q)].emplace_back(q, mult);
    for (auto& [p, powers] : by_prime)
        std::reverse(powers.begin(), powers.end());

    std::vector<std::pair<Integer, Integer>> out;
    while (!by_prime.empty()) {
        Integer run = -1;
        Integer factor = 1;
        for (const auto& [p, powers] : by_prime) {
            factor *= powers.front().first;
            if (run < 0 || powers.front().second < run)
                run = powers.front().second;
        }
        out.emplace_back(factor, run);
        for (auto it = by_prime.begin(); it != by_prime.end();) {
            auto& powers = it->second;
            powers.front().second -= run;
            if (powers.front().second == 0)
                powers.erase(powers.begin());
            it = powers.empty() ? by_prime.erase(it) : std::next(it);
        }
    }
    return out;
}

std::string FGAbelianGroup::render() const
{
    std::vector<std::string> parts;
    if (free_rank_ == 1)
        parts.emplace_back("Z");
    else if (free_rank_ > 1)
        parts.push_back("Z^" + free_rank_.str());
    for (const auto& [order, mult] : invariant_factors()) {
        const std::string cyclic = "Z/" + order.str();
        if (mult == 1)
            parts.push_back(cyclic);
        else
            parts.push_back("(" + cyclic + ")^" + mult.str());
    }
    if (parts.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

nlohmann::json integer_to_json(const Integer& z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return z.str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string())
        return Integer(j.get<std::string>());
    fail(ErrorCode::ParseError, "expected an integer");
}

nlohmann::json FGAbelianGroup::to_json() const
{
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& [q, mult] : torsion_)
        torsion.push_back({{"order", q}, {"multiplicity", integer_to_json(mult)}});
    return {{"free_rank", integer_to_json(free_rank_)}, {"torsion", torsion}, {"text", render()}};
}

FGAbelianGroup FGAbelianGroup::from_json(const nlohmann::json& j)
{
    try {
        FGAbelianGroup g = free(integer_from_json(j.at("free_rank")));
        for (const auto& t : j.at("torsion")) {
            const auto order = t.at("order").get<std::int64_t>();
            const Integer mult = integer_from_json(t.at("multiplicity"));
            g += cyclic(order).times(mult);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed group: ") + e.what());
    }
}

} // namespace loophom::pitables
