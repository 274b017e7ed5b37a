#include "loophom/pitables/sphere_table.hpp"

#include "loophom/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace loophom::pitables {

extern const char* const kBuiltinSphereTable;

namespace {

std::int64_t parse_int(const std::string& token, const std::string& where)
{
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        fail(ErrorCode::ParseError, where + ": '" + token + "' is not an integer");
    return value;
}

} // namespace

SphereTable SphereTable::parse(std::string_view text, const std::string& source)
{
    SphereTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        const std::string where = source + ":" + std::to_string(line_no);
        if (tokens.size() < 3)
            fail(ErrorCode::ParseError, where + ": expected 'n k free_rank [torsion orders...]'");
        const auto n = parse_int(tokens[0], where);
        const auto k = parse_int(tokens[1], where);
        const auto free_rank = parse_int(tokens[2], where);
        if (n < 1 || k < 1 || n > 1000 || k > 1000)
            fail(ErrorCode::ParseError, where + ": sphere and homotopy degrees must be in 1..1000");
        if (free_rank < 0)
            fail(ErrorCode::ParseError, where + ": negative free rank");
        std::vector<std::int64_t> orders;
        for (std::size_t i = 3; i < tokens.size(); ++i) {
            const auto q = parse_int(tokens[i], where);
            if (q < 2)
                fail(ErrorCode::ParseError, where + ": torsion orders must be >= 2");
            orders.push_back(q);
        }
        FGAbelianGroup group = FGAbelianGroup::from_orders(free_rank, orders);
        if (k < n && !group.is_trivial())
            fail(ErrorCode::CoverageViolation, where + ": pi_" + std::to_string(k) + "(S^" + std::to_string(n) +
                                                   ") must be 0 below the dimension");
        if (k == n && group != FGAbelianGroup::free(1))
            fail(ErrorCode::CoverageViolation,
                 where + ": pi_" + std::to_string(n) + "(S^" + std::to_string(n) + ") must be Z");
        const auto key = std::make_pair(static_cast<int>(n), static_cast<int>(k));
        if (auto it = table.entries_.find(key); it != table.entries_.end()) {
            if (it->second != group)
                fail(ErrorCode::ParseError, where + ": conflicting duplicate entry for (n, k) = (" +
                                                std::to_string(n) + ", " + std::to_string(k) + ")");
            continue;
        }
        table.entries_.emplace(key, std::move(group));
        table.max_n_ = std::max(table.max_n_, static_cast<int>(n));
        table.max_k_ = std::max(table.max_k_, static_cast<int>(k));
    }
    return table;
}

SphereTable SphereTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::ParseError, "cannot open sphere table '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

const SphereTable& SphereTable::builtin()
{
    static const SphereTable table = parse(kBuiltinSphereTable, "<builtin>");
    return table;
}

const FGAbelianGroup& SphereTable::entry(int n, int k) const
{
    auto it = entries_.find({n, k});
    if (it == entries_.end())
        fail(ErrorCode::TableOutOfRange,
             "pi_" + std::to_string(k) + "(S^" + std::to_string(n) + ") is not in the sphere table");
    return it->second;
}

FGAbelianGroup pi_sphere(const SphereTable& table, int n, int k)
{
    if (n < 1 || k < 1)
        fail(ErrorCode::InvalidArgument, "pi_k(S^n) needs n, k >= 1");
    if (k < n)
        return {};
    if (k == n)
        return FGAbelianGroup::free(1);
    if (n == 1)
        return {};
    return table.entry(n, k);
}

FGAbelianGroup pi_manifold(const loops::LoopFactorMultiset& factors, const SphereTable& table, int k)
{
    if (k < 2)
        fail(ErrorCode::InvalidArgument, "pi_k(M) is computed for k >= 2 (M is simply connected)");
    // a missing factor Omega S^n (n > cutoff + 1) only matters once k >= n
    if (factors.truncated && static_cast<std::size_t>(k) > factors.cutoff + 1)
        fail(ErrorCode::TableOutOfRange, "loop factors were enumerated through sphere dimension " +
                                             std::to_string(factors.cutoff + 1) + " only; pi_" +
                                             std::to_string(k) + " needs more");
    FGAbelianGroup total;
    if (k == 2)
        total += FGAbelianGroup::free(factors.circles);
    for (const auto& [n, count] : factors.sphere_loops)
        total += pi_sphere(table, n, k).times(count);
    for (auto modulus : factors.mod_factors) {
        // S^3{n} -> S^3 -(n)-> S^3: pi_1 = 0, pi_2 = Z/n
        if (k == 3)
            total += FGAbelianGroup::cyclic(modulus);
        else if (k >= 4)
            fail(ErrorCode::UnsupportedDegree, "pi_" + std::to_string(k - 1) + "(S^3{" + std::to_string(modulus) +
                                                   "}) is not determined here (only degrees <= 2)");
    }
    return total;
}

} // namespace loophom::pitables
