#include "loophom/loops/homotopy_expr.hpp"

#include "loophom/error.hpp"

#include <algorithm>

namespace loophom::loops {

HomotopyExpr::HomotopyExpr(NodeKind kind, std::int64_t number, std::vector<HomotopyExpr> children)
    : kind_(kind), number_(number), children_(std::move(children))
{
}

HomotopyExpr HomotopyExpr::point() { return HomotopyExpr(NodeKind::Point, 0, {}); }
HomotopyExpr HomotopyExpr::circle() { return HomotopyExpr(NodeKind::Circle, 1, {}); }

HomotopyExpr HomotopyExpr::sphere(int dimension)
{
    if (dimension < 1)
        fail(ErrorCode::InvalidArgument, "sphere dimension must be >= 1");
    if (dimension == 1)
        return circle();
    return HomotopyExpr(NodeKind::Sphere, dimension, {});
}

HomotopyExpr HomotopyExpr::sphere_mod(std::int64_t modulus)
{
    if (modulus < 2)
        fail(ErrorCode::InvalidArgument, "S^3{n} needs n >= 2");
    return HomotopyExpr(NodeKind::SphereModN, modulus, {});
}

HomotopyExpr HomotopyExpr::loop(const HomotopyExpr& of)
{
    if (of.is_point())
        return point();
    return HomotopyExpr(NodeKind::Loop, 0, {of});
}

namespace {

std::vector<HomotopyExpr> flatten(NodeKind kind, std::vector<HomotopyExpr> members)
{
    std::vector<HomotopyExpr> out;
    for (auto& m : members) {
        if (m.kind() == kind)
            out.insert(out.end(), m.children().begin(), m.children().end());
        else
            out.push_back(std::move(m));
    }
    return out;
}

} // namespace

HomotopyExpr HomotopyExpr::product(std::vector<HomotopyExpr> factors)
{
    auto flat = flatten(NodeKind::Product, std::move(factors));
    std::erase_if(flat, [](const HomotopyExpr& e) { return e.is_point(); });
    if (flat.empty())
        return point();
    if (flat.size() == 1)
        return flat.front();
    std::sort(flat.begin(), flat.end());
    return HomotopyExpr(NodeKind::Product, 0, std::move(flat));
}

HomotopyExpr HomotopyExpr::wedge(std::vector<HomotopyExpr> summands)
{
    auto flat = flatten(NodeKind::Wedge, std::move(summands));
    std::erase_if(flat, [](const HomotopyExpr& e) { return e.is_point(); });
    if (flat.empty())
        return point();
    if (flat.size() == 1)
        return flat.front();
    std::sort(flat.begin(), flat.end());
    return HomotopyExpr(NodeKind::Wedge, 0, std::move(flat));
}

HomotopyExpr HomotopyExpr::smash(std::vector<HomotopyExpr> factors)
{
    if (factors.empty())
        fail(ErrorCode::InvalidArgument, "empty smash product");
    auto flat = flatten(NodeKind::Smash, std::move(factors));
    if (std::any_of(flat.begin(), flat.end(), [](const HomotopyExpr& e) { return e.is_point(); }))
        return point();
    if (flat.size() == 1)
        return flat.front();
    std::sort(flat.begin(), flat.end());
    return HomotopyExpr(NodeKind::Smash, 0, std::move(flat));
}

const HomotopyExpr& HomotopyExpr::inner() const
{
    if (kind_ != NodeKind::Loop)
        fail(ErrorCode::InvalidArgument, "inner() on a non-loop node");
    return children_.front();
}

int HomotopyExpr::order_rank() const
{
    switch (kind_) {
    case NodeKind::Point: return 0;
    case NodeKind::Circle: return 1;
    case NodeKind::SphereModN: return 2;
    case NodeKind::Sphere: return 3;
    case NodeKind::Loop: return inner().kind() == NodeKind::Sphere ? 4 : 5;
    default: return 5;
    }
}

std::string HomotopyExpr::render() const
{
    auto member = [](const HomotopyExpr& e) {
        const bool composite =
            e.kind() == NodeKind::Product || e.kind() == NodeKind::Wedge || e.kind() == NodeKind::Smash;
        return composite ? "(" + e.render() + ")" : e.render();
    };
    auto join = [&](const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < children_.size(); ++i) {
            if (i)
                out += sep;
            out += member(children_[i]);
        }
        return out;
    };
    switch (kind_) {
    case NodeKind::Point: return "*";
    case NodeKind::Circle: return "S^1";
    case NodeKind::Sphere: return "S^" + std::to_string(number_);
    case NodeKind::SphereModN: return "S^3{" + std::to_string(number_) + "}";
    case NodeKind::Loop: return "Loop(" + inner().render() + ")";
    case NodeKind::Product: return join(" x ");
    case NodeKind::Wedge: return join(" v ");
    case NodeKind::Smash: return join(" ^ ");
    }
    return "?";
}

nlohmann::json HomotopyExpr::to_json() const
{
    using nlohmann::json;
    auto list = [this] {
        json arr = json::array();
        for (const auto& c : children_)
            arr.push_back(c.to_json());
        return arr;
    };
    switch (kind_) {
    case NodeKind::Point: return {{"kind", "point"}};
    case NodeKind::Circle: return {{"kind", "circle"}};
    case NodeKind::Sphere: return {{"kind", "sphere"}, {"dim", number_}};
    case NodeKind::SphereModN: return {{"kind", "sphere_mod"}, {"dim", 3}, {"modulus", number_}};
    case NodeKind::Loop: return {{"kind", "loop"}, {"of", inner().to_json()}};
    case NodeKind::Product: return {{"kind", "product"}, {"factors", list()}};
    case NodeKind::Wedge: return {{"kind", "wedge"}, {"summands", list()}};
    case NodeKind::Smash: return {{"kind", "smash"}, {"factors", list()}};
    }
    return {};
}

HomotopyExpr HomotopyExpr::from_json(const nlohmann::json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        auto list = [&j](const char* key) {
            std::vector<HomotopyExpr> out;
            for (const auto& c : j.at(key))
                out.push_back(from_json(c));
            return out;
        };
        if (kind == "point")
            return point();
        if (kind == "circle")
            return circle();
        if (kind == "sphere")
            return sphere(j.at("dim").get<int>());
        if (kind == "sphere_mod")
            return sphere_mod(j.at("modulus").get<std::int64_t>());
        if (kind == "loop")
            return loop(from_json(j.at("of")));
        if (kind == "product")
            return product(list("factors"));
        if (kind == "wedge")
            return wedge(list("summands"));
        if (kind == "smash")
            return smash(list("factors"));
        fail(ErrorCode::ParseError, "unknown homotopy expression kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed homotopy expression: ") + e.what());
    }
}

bool operator==(const HomotopyExpr& a, const HomotopyExpr& b)
{
    return a.kind_ == b.kind_ && a.number_ == b.number_ && a.children_ == b.children_;
}

std::strong_ordering operator<=>(const HomotopyExpr& a, const HomotopyExpr& b)
{
    if (auto c = a.order_rank() <=> b.order_rank(); c != 0)
        return c;
    if (a.kind_ == NodeKind::Loop && b.kind_ == NodeKind::Loop && a.order_rank() == 4)
        return a.inner().number_ <=> b.inner().number_;
    if (auto c = a.number_ <=> b.number_; c != 0)
        return c;
    if (auto c = a.render() <=> b.render(); c != 0)
        return c;
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
}

} // namespace loophom::loops
