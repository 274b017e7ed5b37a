#pragma once

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace loophom::loops {

enum class NodeKind {
    Point,      // contractible; the empty wedge
    Circle,     // S^1
    Sphere,     // S^n, n >= 2
    SphereModN, // S^3{n}, fibre of the degree-n map on S^3
    Loop,
    Product,
    Wedge,
    Smash,
};

/// Symbolic homotopy type. Values are immutable once built; the factory
/// functions return expressions already in normal form:
///  - products, wedges and smashes are flattened,
///  - product and wedge members are sorted by the canonical order
///    Circle < S^3{n} < S^n < Loop(S^n) < composite nodes,
///  - contractible members vanish from products and wedges; a contractible
///    smash factor makes the smash contractible.
class HomotopyExpr {
public:
    static HomotopyExpr point();
    static HomotopyExpr circle();
    static HomotopyExpr sphere(int dimension);
    static HomotopyExpr sphere_mod(std::int64_t modulus);
    static HomotopyExpr loop(const HomotopyExpr& of);
    static HomotopyExpr product(std::vector<HomotopyExpr> factors);
    static HomotopyExpr wedge(std::vector<HomotopyExpr> summands);
    static HomotopyExpr smash(std::vector<HomotopyExpr> factors);

    NodeKind kind() const noexcept { return kind_; }
    /// Sphere dimension, S^3{n} modulus; zero otherwise.
    std::int64_t number() const noexcept { return number_; }
    const std::vector<HomotopyExpr>& children() const noexcept { return children_; }
    /// The argument of a Loop node.
    const HomotopyExpr& inner() const;

    bool is_point() const noexcept { return kind_ == NodeKind::Point; }

    /// Text grammar: `S^1 x Loop(S^2) x Loop(S^2 x S^3) x Loop(W)`, wedges with
    /// ` v `, smashes with ` ^ `, S^3{n} for the mod-n fibre, `*` for a point.
    std::string render() const;

    nlohmann::json to_json() const;
    /// Throws Error(ParseError) on an unknown node.
    static HomotopyExpr from_json(const nlohmann::json& j);

    friend bool operator==(const HomotopyExpr& a, const HomotopyExpr& b);
    friend std::strong_ordering operator<=>(const HomotopyExpr& a, const HomotopyExpr& b);

private:
    HomotopyExpr(NodeKind kind, std::int64_t number, std::vector<HomotopyExpr> children);

    int order_rank() const;

    NodeKind kind_;
    std::int64_t number_;
    std::vector<HomotopyExpr> children_;
};

} // namespace loophom::loops
