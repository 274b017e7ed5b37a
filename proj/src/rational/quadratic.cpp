#include "loophom/rational/quadratic.hpp"

#include "loophom/error.hpp"

#include <algorithm>

namespace loophom::rational {

using linalg::DenseMatrix;
using linalg::DenseVector;
using linalg::RowSpace;
using linalg::SparseVector;
using series::TruncatedSeries;

namespace {

void enumerate(std::size_t g, std::size_t var, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<std::vector<unsigned>>& out)
{
    if (var + 1 == g) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        enumerate(g, var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

std::vector<unsigned> add_exponents(std::vector<unsigned> a, const std::vector<unsigned>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

SparseVector sorted(SparseVector v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// dims of Sym(V)/(relations) in each weight 0..cutoff. Once a weight is zero
// every later one is too.
std::vector<std::size_t> commutative_quotient_dims(const QuadraticPresentation& p, std::size_t cutoff)
{
    const std::size_t g = p.generators();
    std::vector<std::size_t> dims(cutoff + 1, 0);
    if (g == 0) {
        dims[0] = 1;
        return dims;
    }
    std::map<std::size_t, std::vector<SparseVector>> by_weight = p.higher_relations();
    by_weight[2] = p.relations();
    std::map<std::size_t, MonomialBasis> bases;
    auto basis = [&](std::size_t w) -> const MonomialBasis& {
        auto it = bases.find(w);
        if (it == bases.end())
            it = bases.emplace(w, MonomialBasis(g, w)).first;
        return it->second;
    };
    for (std::size_t w = 0; w <= cutoff; ++w) {
        const MonomialBasis& target = basis(w);
        RowSpace ideal;
        for (const auto& [rw, rels] : by_weight) {
            if (rw > w || rels.empty())
                continue;
            const MonomialBasis& source = basis(rw);
            const MonomialBasis& shift = basis(w - rw);
            for (const auto& rel : rels)
                for (std::size_t m = 0; m < shift.size(); ++m) {
                    SparseVector v;
                    for (const auto& [idx, c] : rel)
                        v.emplace_back(target.index_of(add_exponents(source.exponents(idx), shift.exponents(m))), c);
                    ideal.insert(sorted(std::move(v)));
                }
        }
        dims[w] = target.size() - ideal.rank();
        if (dims[w] == 0)
            break;
    }
    return dims;
}

TruncatedSeries to_series(const std::vector<std::size_t>& dims, std::size_t cutoff)
{
    std::vector<Rational> c;
    for (auto x : dims)
        c.emplace_back(static_cast<unsigned long>(x));
    return TruncatedSeries(std::move(c), cutoff);
}

// Evaluates a monomial in the degree-two classes inside the ring.
DenseVector evaluate(const manifold::SixManifoldRing& ring, const std::vector<std::size_t>& gens,
                     const std::vector<unsigned>& exponents)
{
    DenseVector v = ring.ring.basis_vector(0);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (unsigned e = 0; e < exponents[i]; ++e)
            v = ring.ring.multiply(v, ring.ring.basis_vector(gens[i]));
    return v;
}

} // namespace

MonomialBasis::MonomialBasis(std::size_t generators, std::size_t weight) : generators_(generators)
{
    if (generators == 0) {
        if (weight == 0)
            monomials_.emplace_back();
    } else {
        std::vector<unsigned> cur(generators, 0);
        enumerate(generators, 0, static_cast<unsigned>(weight), cur, monomials_);
    }
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const std::vector<unsigned>& exponents) const
{
    auto it = index_.find(exponents);
    if (it == index_.end())
        fail(ErrorCode::InvalidArgument, "monomial does not belong to this basis");
    return it->second;
}

std::size_t sym2_index(std::size_t g, std::size_t i, std::size_t j)
{
    if (i > j)
        std::swap(i, j);
    if (j >= g)
        fail(ErrorCode::InvalidArgument, "generator index out of range");
    // rows 0..i-1 hold g, g-1, ..., g-i+1 monomials
    return i * g - i * (i - 1) / 2 + (j - i);
}

QuadraticPresentation QuadraticPresentation::commutative(std::size_t generators,
                                                         const std::vector<DenseVector>& relations,
                                                         std::vector<std::string> labels)
{
    QuadraticPresentation p;
    p.generators_ = generators;
    if (labels.empty())
        for (std::size_t i = 0; i < generators; ++i)
            labels.push_back("v" + std::to_string(i + 1));
    if (labels.size() != generators)
        fail(ErrorCode::InvalidArgument, "one label per generator expected");
    p.labels_ = std::move(labels);
    const std::size_t n = generators * (generators + 1) / 2;
    RowSpace space;
    for (const auto& r : relations) {
        if (r.size() != n)
            fail(ErrorCode::InvalidArgument, "relation has " + std::to_string(r.size()) +
                                                 " coordinates, expected " + std::to_string(n));
        space.insert(linalg::to_sparse(r));
    }
    for (const auto& [pivot, row] : space.rows())
        p.relations_.push_back(row);
    return p;
}

void QuadraticPresentation::add_higher_relation(std::size_t weight, SparseVector relation)
{
    if (weight < 3)
        fail(ErrorCode::InvalidArgument, "higher relations have weight >= 3");
    const MonomialBasis basis(generators_, weight);
    for (const auto& [idx, c] : relation)
        if (idx >= basis.size())
            fail(ErrorCode::InvalidArgument, "relation coordinate out of range");
    higher_[weight].push_back(std::move(relation));
}

std::vector<SparseVector> QuadraticPresentation::tensor_relations() const
{
    const std::size_t g = generators_;
    const MonomialBasis sym2(g, 2);
    std::vector<SparseVector> out;
    for (const auto& rel : relations_) {
        SparseVector v;
        for (const auto& [idx, c] : rel) {
            const auto& e = sym2.exponents(idx);
            std::size_t i = g, j = g;
            for (std::size_t k = 0; k < g; ++k) {
                if (e[k] == 2)
                    i = j = k;
                else if (e[k] == 1)
                    (i == g ? i : j) = k;
            }
            v.emplace_back(i * g + j, c);
        }
        out.push_back(sorted(std::move(v)));
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            out.push_back({{i * g + j, Rational(1)}, {j * g + i, Rational(-1)}});
    return out;
}

std::vector<SparseVector> QuadraticPresentation::dual_relations() const
{
    const std::size_t n = generators_ * generators_;
    DenseMatrix rows;
    for (const auto& r : tensor_relations())
        rows.push_back(linalg::to_dense(r, n));
    std::vector<SparseVector> out;
    for (const auto& v : linalg::nullspace(rows, n))
        out.push_back(linalg::to_sparse(v));
    return out;
}

QuadraticPresentation quadratic_presentation(const manifold::SixManifoldRing& ring, bool force)
{
    const auto gens = ring.degree_two();
    const auto h4 = ring.ring.basis_in_degree(4);
    const std::size_t g = gens.size();
    if (g == 0)
        fail(ErrorCode::NotQuadratic, "H^2 is zero");
    std::vector<std::string> labels;
    for (auto i : gens)
        labels.push_back(ring.ring.label(i));

    // columns: Sym^2 monomials, rows: H^4 coordinates
    const MonomialBasis sym2(g, 2);
    DenseMatrix eval(h4.size(), DenseVector(sym2.size()));
    for (std::size_t m = 0; m < sym2.size(); ++m) {
        const DenseVector v = evaluate(ring, gens, sym2.exponents(m));
        for (std::size_t r = 0; r < h4.size(); ++r)
            eval[r][m] = v[h4[r]];
    }
    if (linalg::rank(eval) != h4.size())
        fail(ErrorCode::NotQuadratic, "H^4 is not spanned by products of degree-2 classes");
    auto p = QuadraticPresentation::commutative(g, linalg::nullspace(eval, sym2.size()), labels);

    const auto betti = ring.ring.betti_numbers();
    for (std::size_t w = 3; w <= 4; ++w) {
        const std::size_t expected = 2 * w < betti.size() ? betti[2 * w] : 0;
        const std::size_t got = commutative_quotient_dims(p, w)[w];
        if (got == expected)
            continue;
        if (!force)
            fail(ErrorCode::NotQuadratic, "quadratic relations leave dimension " + std::to_string(got) +
                                              " in weight " + std::to_string(w) + ", cohomology has " +
                                              std::to_string(expected));
        const MonomialBasis basis(g, w);
        const auto target = ring.ring.basis_in_degree(static_cast<int>(2 * w));
        DenseMatrix ev(target.size(), DenseVector(basis.size()));
        for (std::size_t m = 0; m < basis.size(); ++m) {
            const DenseVector v = evaluate(ring, gens, basis.exponents(m));
            for (std::size_t r = 0; r < target.size(); ++r)
                ev[r][m] = v[target[r]];
        }
        DenseMatrix kernel = target.empty() ? DenseMatrix{} : linalg::nullspace(ev, basis.size());
        if (target.empty())
            for (std::size_t m = 0; m < basis.size(); ++m) {
                DenseVector e(basis.size());
                e[m] = 1;
                kernel.push_back(std::move(e));
            }
        for (const auto& v : kernel)
            p.add_higher_relation(w, linalg::to_sparse(v));
    }
    return p;
}

TruncatedSeries hilbert_series(const QuadraticPresentation& p, std::size_t cutoff)
{
    return to_series(commutative_quotient_dims(p, cutoff), cutoff);
}

TruncatedSeries naive_dual_series(const QuadraticPresentation& p, std::size_t cutoff)
{
    return series::series_reciprocal(hilbert_series(p, cutoff).negated_variable());
}

std::vector<std::size_t> tensor_quotient_dims(std::size_t g, const std::vector<SparseVector>& relations,
                                              std::size_t max_weight, std::size_t ambient_budget)
{
    std::vector<std::size_t> dims{1};
    if (max_weight == 0)
        return dims;
    dims.push_back(g);
    // proj[c] expresses coordinate c of A_{w-1} (x) V (c = u*g + a) in the
    // basis of A_w, given by the non-pivot coordinates.
    std::vector<SparseVector> prev_proj;  // A_{w-2} (x) V -> A_{w-1}
    for (std::size_t a = 0; a < g; ++a)
        prev_proj.push_back({{a, Rational(1)}});
    for (std::size_t w = 2; w <= max_weight; ++w) {
        const std::size_t ambient = dims[w - 1] * g;
        if (ambient > ambient_budget)
            break;
        RowSpace space;
        for (std::size_t u = 0; u < dims[w - 2]; ++u)
            for (const auto& rel : relations) {
                std::map<std::size_t, Rational> acc;
                for (const auto& [ab, c] : rel) {
                    const std::size_t a = ab / g, b = ab % g;
                    for (const auto& [k, x] : prev_proj[u * g + a])
                        acc[k * g + b] += c * x;
                }
                SparseVector v;
                for (auto& [idx, x] : acc)
                    if (x != 0)
                        v.emplace_back(idx, std::move(x));
                space.insert(std::move(v));
            }
        std::vector<std::size_t> position(ambient, 0);
        std::size_t next = 0;
        for (std::size_t c = 0; c < ambient; ++c)
            if (!space.is_pivot(c))
                position[c] = next++;
        dims.push_back(next);
        std::vector<SparseVector> proj(ambient);
        for (std::size_t c = 0; c < ambient; ++c) {
            if (!space.is_pivot(c)) {
                proj[c] = {{position[c], Rational(1)}};
                continue;
            }
            for (auto& [idx, x] : space.reduce({{c, Rational(1)}}))
                proj[c].emplace_back(position[idx], std::move(x));
        }
        prev_proj = std::move(proj);
        if (next == 0) {
            dims.resize(max_weight + 1, 0);
            break;
        }
    }
    return dims;
}

KoszulDual koszul_dual(const QuadraticPresentation& p, std::size_t cutoff)
{
    KoszulDual out{naive_dual_series(p, cutoff), {}, 0};
    for (std::size_t n = 0; n <= cutoff; ++n)
        if (out.series[n] < 0)
            fail(ErrorCode::KoszulInconsistency, "dual series has negative coefficient " +
                                                     to_string(out.series[n]) + " in weight " + std::to_string(n));
    out.direct_dims = tensor_quotient_dims(p.generators(), p.dual_relations(), std::min(cutoff, kDirectDualMaxWeight),
                                           kDirectDualBudget);
    out.checked_weight = out.direct_dims.size() - 1;
    for (std::size_t w = 0; w < out.direct_dims.size(); ++w)
        if (out.series[w] != Rational(static_cast<unsigned long>(out.direct_dims[w])))
            fail(ErrorCode::KoszulInconsistency,
                 "quadratic dual has dimension " + std::to_string(out.direct_dims[w]) + " in weight " +
                     std::to_string(w) + ", the series predicts " + to_string(out.series[w]));
    return out;
}

TruncatedSeries koszul_dual_series(const QuadraticPresentation& p, std::size_t cutoff)
{
    return koszul_dual(p, cutoff).series;
}

series::GradedLieDims lie_dims(const QuadraticPresentation& p, std::size_t cutoff, bool force)
{
    if (p.is_quadratic())
        return series::pbw_invert(koszul_dual_series(p, cutoff));
    if (!force)
        fail(ErrorCode::NotQuadratic, "presentation has relations of weight > 2");
    return series::pbw_invert(naive_dual_series(p, cutoff));
}

} // namespace loophom::rational
