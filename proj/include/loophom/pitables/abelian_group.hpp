#pragma once

#include "loophom/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace loophom::pitables {

/// A finitely generated abelian group Z^r + sum Z/q, stored in primary form:
/// torsion maps each prime power q to its multiplicity. Composite orders are
/// split on construction, so equal groups compare equal.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;

    static FGAbelianGroup free(const Integer& rank);
    static FGAbelianGroup cyclic(std::int64_t order);
    /// Z^free_rank + Z/orders[0] + ...; orders must be >= 1 (Z/1 is trivial).
    static FGAbelianGroup from_orders(const Integer& free_rank, const std::vector<std::int64_t>& orders);

    const Integer& free_rank() const noexcept { return free_rank_; }
    const std::map<std::int64_t, Integer>& torsion() const noexcept { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    /// Order of the torsion subgroup.
    Integer torsion_order() const;

    FGAbelianGroup& operator+=(const FGAbelianGroup& other);
    /// count-fold direct sum
    FGAbelianGroup times(const Integer& count) const;

    /// Invariant factors n_1 >= n_2 >= ... (each divisible by the next), with
    /// run-length multiplicities.
    std::vector<std::pair<Integer, Integer>> invariant_factors() const;

    /// "0", "Z", "Z^2 + Z/12 + Z/2", "(Z/2)^3"
    std::string render() const;

    nlohmann::json to_json() const;
    static FGAbelianGroup from_json(const nlohmann::json& j);

    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

private:
    Integer free_rank_ = 0;
    std::map<std::int64_t, Integer> torsion_;
};

FGAbelianGroup operator+(FGAbelianGroup a, const FGAbelianGroup& b);

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

} // namespace loophom::pitables
