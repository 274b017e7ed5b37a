#include "loophom/rational/sullivan.hpp"

#include "loophom/error.hpp"
#include "loophom/linalg.hpp"

#include <algorithm>

namespace loophom::rational {

namespace {

bool is_odd(int degree) { return degree % 2 != 0; }

void add_term(Polynomial& p, const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            p.erase(it);
    }
}

} // namespace

std::size_t SullivanModel::add_generator(const std::string& name, int degree)
{
    if (degree < 1)
        fail(ErrorCode::InvalidArgument, "generator '" + name + "' needs degree >= 1");
    if (name.empty())
        fail(ErrorCode::InvalidArgument, "generator names must be non-empty");
    for (const auto& g : generators_)
        if (g.name == name)
            fail(ErrorCode::InvalidArgument, "duplicate generator '" + name + "'");
    for (auto& d : differential_) {
        Polynomial widened;
        for (const auto& [m, c] : d) {
            Monomial w = m;
            w.push_back(0);
            widened.emplace(std::move(w), c);
        }
        d = std::move(widened);
    }
    generators_.push_back({name, degree});
    differential_.emplace_back();
    return generators_.size() - 1;
}

std::size_t SullivanModel::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    fail(ErrorCode::InvalidArgument, "unknown generator '" + name + "'");
}

void SullivanModel::set_differential(const std::string& generator, Polynomial value)
{
    const std::size_t i = index_of(generator);
    for (const auto& [m, c] : value) {
        if (m.size() != size())
            fail(ErrorCode::InvalidArgument, "monomial has the wrong number of exponents");
        for (std::size_t k = 0; k < m.size(); ++k)
            if (is_odd(generators_[k].degree) && m[k] > 1)
                fail(ErrorCode::InvalidArgument, "odd generator '" + generators_[k].name + "' squared");
        if (degree(m) != generators_[i].degree + 1)
            fail(ErrorCode::InvalidArgument, "d(" + generator + ") must have degree " +
                                                 std::to_string(generators_[i].degree + 1));
    }
    std::erase_if(value, [](const auto& term) { return term.second == 0; });
    differential_[i] = std::move(value);
}

Monomial SullivanModel::generator_monomial(std::size_t i) const
{
    Monomial m(size(), 0);
    m.at(i) = 1;
    return m;
}

Monomial SullivanModel::monomial(const std::map<std::string, unsigned>& powers) const
{
    Monomial m(size(), 0);
    for (const auto& [name, e] : powers)
        m[index_of(name)] = e;
    return m;
}

int SullivanModel::degree(const Monomial& m) const
{
    int deg = 0;
    for (std::size_t k = 0; k < m.size(); ++k)
        deg += static_cast<int>(m[k]) * generators_[k].degree;
    return deg;
}

Polynomial SullivanModel::multiply(const Polynomial& a, const Polynomial& b) const
{
    Polynomial out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(size());
            bool zero = false;
            int sign = 1;
            // odd generators of b move left past the odd generators of a with a larger index
            std::size_t odd_a_after = 0;
            for (std::size_t k = size(); k-- > 0;) {
                m[k] = ma[k] + mb[k];
                if (!is_odd(generators_[k].degree))
                    continue;
                if (m[k] > 1) {
                    zero = true;
                    break;
                }
                if (mb[k] && odd_a_after % 2)
                    sign = -sign;
                odd_a_after += ma[k];
            }
            if (!zero)
                add_term(out, m, sign * ca * cb);
        }
    return out;
}

Polynomial SullivanModel::apply_differential(const Polynomial& p) const
{
    Polynomial out;
    for (const auto& [m, c] : p) {
        // m = prefix * g_k * suffix over the expanded word of generators
        Monomial prefix(size(), 0);
        int prefix_degree = 0;
        for (std::size_t k = 0; k < size(); ++k)
            for (unsigned e = 0; e < m[k]; ++e) {
                Monomial suffix = m;
                for (std::size_t j = 0; j < k; ++j)
                    suffix[j] = 0;
                suffix[k] -= e + 1;
                const Rational sign = is_odd(prefix_degree) ? -1 : 1;
                Polynomial term = multiply(multiply({{prefix, sign * c}}, differential_[k]), {{suffix, Rational(1)}});
                for (const auto& [tm, tc] : term)
                    add_term(out, tm, tc);
                prefix[k] += 1;
                prefix_degree += generators_[k].degree;
            }
    }
    return out;
}

std::vector<Monomial> SullivanModel::monomials_of_degree(int target) const
{
    std::vector<Monomial> out;
    if (target < 0)
        return out;
    Monomial cur(size(), 0);
    auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
        if (k == size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        const int deg = generators_[k].degree;
        const int max_e = is_odd(deg) ? std::min(1, remaining / deg) : remaining / deg;
        for (int e = 0; e <= max_e; ++e) {
            cur[k] = static_cast<unsigned>(e);
            self(self, k + 1, remaining - e * deg);
        }
        cur[k] = 0;
    };
    rec(rec, 0, target);
    return out;
}

std::string SullivanModel::render_differential(std::size_t i) const
{
    std::string out = "d" + generators_.at(i).name + "=";
    if (differential_[i].empty())
        return out + "0";
    bool first = true;
    for (const auto& [m, c] : differential_[i]) {
        std::string mono;
        for (std::size_t k = 0; k < size(); ++k) {
            if (m[k] == 0)
                continue;
            mono += generators_[k].name;
            if (m[k] > 1)
                mono += "^" + std::to_string(m[k]);
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string coeff = mag == 1 && !mono.empty() ? "" : to_string(mag) + (mono.empty() ? "" : "*");
        if (first)
            out += (c < 0 ? "-" : "") + coeff + mono;
        else
            out += (c < 0 ? "-" : "+") + coeff + mono;
        first = false;
    }
    return out;
}

nlohmann::json SullivanModel::to_json() const
{
    nlohmann::json gens = nlohmann::json::array();
    nlohmann::json diff = nlohmann::json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        gens.push_back({{"name", generators_[i].name}, {"degree", generators_[i].degree}});
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : differential_[i]) {
            nlohmann::json powers = nlohmann::json::object();
            for (std::size_t k = 0; k < size(); ++k)
                if (m[k])
                    powers[generators_[k].name] = m[k];
            terms.push_back({{"coefficient", to_string(c)}, {"powers", powers}});
        }
        if (!terms.empty())
            diff.push_back({{"generator", generators_[i].name}, {"terms", terms}});
    }
    return {{"generators", gens}, {"differential", diff}};
}

SullivanModel SullivanModel::from_json(const nlohmann::json& j)
{
    try {
        SullivanModel m;
        for (const auto& g : j.at("generators"))
            m.add_generator(g.at("name").get<std::string>(), g.at("degree").get<int>());
        if (j.contains("differential"))
            for (const auto& entry : j.at("differential")) {
                Polynomial p;
                for (const auto& term : entry.at("terms")) {
                    std::map<std::string, unsigned> powers;
                    for (const auto& [name, e] : term.at("powers").items())
                        powers[name] = e.get<unsigned>();
                    const auto& cj = term.at("coefficient");
                    const Rational c = cj.is_string() ? parse_rational(cj.get<std::string>())
                                                      : Rational(cj.get<std::int64_t>());
                    add_term(p, m.monomial(powers), c);
                }
                m.set_differential(entry.at("generator").get<std::string>(), std::move(p));
            }
        return m;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed Sullivan model: ") + e.what());
    }
}

std::vector<std::size_t> cdga_cohomology(const SullivanModel& m, std::size_t cutoff)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!m.apply_differential(m.differential(i)).empty())
            fail(ErrorCode::DifferentialNotSquareZero,
                 "d(d(" + m.generator(i).name + ")) is not zero");

    // rank of d: Lambda^n -> Lambda^{n+1} for n = 0..cutoff
    auto rank_of_d = [&](int n) -> std::size_t {
        const auto source = m.monomials_of_degree(n);
        const auto target = m.monomials_of_degree(n + 1);
        if (source.empty() || target.empty())
            return 0;
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < target.size(); ++i)
            index.emplace(target[i], i);
        linalg::RowSpace image;
        for (const auto& s : source) {
            linalg::SparseVector v;
            for (const auto& [tm, c] : m.apply_differential({{s, Rational(1)}}))
                v.emplace_back(index.at(tm), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            image.insert(std::move(v));
        }
        return image.rank();
    };
    std::vector<std::size_t> dims;
    std::size_t incoming = 0;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const std::size_t chains = m.monomials_of_degree(static_cast<int>(n)).size();
        const std::size_t outgoing = rank_of_d(static_cast<int>(n));
        dims.push_back(chains - outgoing - incoming);
        incoming = outgoing;
    }
    return dims;
}

SullivanModel sphere_s2_model()
{
    SullivanModel m;
    m.add_generator("a", 2);
    m.add_generator("b", 3);
    m.set_differential("b", {{m.monomial({{"a", 2}}), Rational(1)}});
    return m;
}

SullivanModel d1_model(const Rational& k)
{
    SullivanModel m;
    m.add_generator("c", 2);
    m.add_generator("a", 2);
    m.add_generator("b", 3);
    m.add_generator("x", 5);
    m.set_differential("x", {{m.monomial({{"c", 3}}), Rational(1)}});
    Polynomial db{{m.monomial({{"a", 2}}), Rational(1)}};
    add_term(db, m.monomial({{"c", 2}}), k);
    m.set_differential("b", std::move(db));
    return m;
}

Rational d1_model_parameter(const manifold::FourManifold& n, const manifold::BundleData& b)
{
    if (n.rank() != 1)
        fail(ErrorCode::WrongDimension, "the d = 1 model needs rank H^2(N) = 1");
    return Rational(-n.entry(0, 0) * b.p1, 4);
}

} // namespace loophom::rational
