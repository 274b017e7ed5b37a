#pragma once

#include "loophom/manifold/bundle.hpp"
#include "loophom/numeric.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace loophom::rational {

/// Exponent per generator; odd generators have exponent 0 or 1. A monomial
/// stands for the product of its generators in index order.
using Monomial = std::vector<unsigned>;
using Polynomial = std::map<Monomial, Rational>;

struct SullivanGenerator {
    std::string name;
    int degree = 0;

    friend bool operator==(const SullivanGenerator&, const SullivanGenerator&) = default;
};

/// A free graded commutative algebra Lambda V with a differential given on
/// generators. The differential must raise degree by one; d o d = 0 is
/// checked by cdga_cohomology.
class SullivanModel {
public:
    /// Returns the generator index. Degrees must be >= 1 and names unique.
    std::size_t add_generator(const std::string& name, int degree);
    /// Sets d(generator); throws InvalidArgument for an inhomogeneous value.
    void set_differential(const std::string& generator, Polynomial value);

    std::size_t size() const noexcept { return generators_.size(); }
    const SullivanGenerator& generator(std::size_t i) const { return generators_.at(i); }
    std::size_t index_of(const std::string& name) const;
    const Polynomial& differential(std::size_t i) const { return differential_.at(i); }

    Monomial generator_monomial(std::size_t i) const;
    /// Monomial from name -> exponent pairs.
    Monomial monomial(const std::map<std::string, unsigned>& powers) const;
    int degree(const Monomial& m) const;

    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    /// Extends d to Lambda V by the graded Leibniz rule.
    Polynomial apply_differential(const Polynomial& p) const;

    /// All monomials of the given degree.
    std::vector<Monomial> monomials_of_degree(int degree) const;

    /// "dx=c^3" style rendering of one generator's differential.
    std::string render_differential(std::size_t i) const;

    nlohmann::json to_json() const;
    static SullivanModel from_json(const nlohmann::json& j);

    friend bool operator==(const SullivanModel&, const SullivanModel&) = default;

private:
    std::vector<SullivanGenerator> generators_;
    std::vector<Polynomial> differential_;
};

/// Cohomology dimensions in degrees 0..cutoff. Throws
/// DifferentialNotSquareZero when d(d(v)) != 0 for some generator.
std::vector<std::size_t> cdga_cohomology(const SullivanModel& m, std::size_t cutoff);

/// Lambda(a_2, b_3), db = a^2.
SullivanModel sphere_s2_model();

/// Lambda(c_2, a_2, b_3, x_5), dx = c^3, db = a^2 + k c^2.
SullivanModel d1_model(const Rational& k);

/// The k matching H*(M;Q) for a d = 1 bundle: with Q = [[q]], k = -q p1 / 4.
/// Throws WrongDimension unless d = 1.
Rational d1_model_parameter(const manifold::FourManifold& n, const manifold::BundleData& b);

} // namespace loophom::rational
