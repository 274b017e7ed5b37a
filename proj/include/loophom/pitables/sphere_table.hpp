#pragma once

#include "loophom/loops/factors.hpp"
#include "loophom/pitables/abelian_group.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace loophom::pitables {

/// pi_k(S^n) for the (n, k) pairs a table file lists. Immutable after loading.
///
/// File format, one entry per line, '#' starts a comment:
///   n k free_rank [torsion orders...]
class SphereTable {
public:
    /// Throws ParseError (with line number) or CoverageViolation when an entry
    /// contradicts pi_k(S^n) = 0 for k < n or pi_n(S^n) = Z.
    static SphereTable parse(std::string_view text, const std::string& source = "<table>");
    static SphereTable load(const std::filesystem::path& path);
    /// The table compiled into the library (n <= 15, k <= 15).
    static const SphereTable& builtin();

    /// Largest n and k with an entry.
    int max_n() const noexcept { return max_n_; }
    int max_k() const noexcept { return max_k_; }
    bool contains(int n, int k) const { return entries_.count({n, k}) != 0; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Raw lookup without the forced cases; throws TableOutOfRange.
    const FGAbelianGroup& entry(int n, int k) const;

private:
    std::map<std::pair<int, int>, FGAbelianGroup> entries_;
    int max_n_ = 0;
    int max_k_ = 0;
};

/// pi_k(S^n): 0 for k < n and Z for k = n without touching the table, also
/// 0 for n = 1 and k >= 2. Throws TableOutOfRange for uncovered entries.
FGAbelianGroup pi_sphere(const SphereTable& table, int n, int k);

/// pi_k(M) = pi_{k-1}(Omega M) as the direct sum over the loop factors.
/// Throws InvalidArgument for k < 2, TableOutOfRange when k exceeds the range
/// the factors were enumerated for or the table covers, and UnsupportedDegree
/// for an S^3{p^r} factor with k >= 4.
FGAbelianGroup pi_manifold(const loops::LoopFactorMultiset& factors, const SphereTable& table, int k);

} // namespace loophom::pitables
