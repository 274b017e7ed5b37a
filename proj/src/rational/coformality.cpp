#include "loophom/rational/coformality.hpp"

#include "loophom/error.hpp"
#include "loophom/loops/decompose.hpp"
#include "loophom/loops/factors.hpp"
#include "loophom/rational/lie.hpp"
#include "loophom/rational/quadratic.hpp"
#include "loophom/rational/sullivan.hpp"

namespace loophom::rational {

std::string to_string(Coformality c)
{
    return c == Coformality::Coformal ? "coformal" : "not_coformal";
}

CoformalityReport coformality_check(const manifold::FourManifold& n, const manifold::BundleData& b,
                                    std::size_t cutoff)
{
    const std::size_t d = n.rank();
    if (d == 0)
        fail(ErrorCode::WrongDimension, "coformality check needs rank H^2(N) >= 1");
    CoformalityReport report;
    report.cutoff = cutoff;
    const auto ring = manifold::cohomology_ring(n, b);

    if (d == 1) {
        report.verdict = Coformality::NotCoformal;
        const SullivanModel model = d1_model(d1_model_parameter(n, b));
        const std::string cubic = model.render_differential(model.index_of("x"));
        const auto naive = naive_dual_series(quadratic_presentation(ring, true), cutoff);
        const auto loops = loops::loop_homology_series(loops::decompose(n, b).loop_space, cutoff);
        report.witness = cubic;
        for (std::size_t k = 0; k <= cutoff; ++k)
            if (naive[k] != loops[k]) {
                report.mismatch_degree = k;
                report.witness += "; degree " + std::to_string(k) + ": naive dual " + loophom::to_string(naive[k]) +
                                  " vs loop homology " + loophom::to_string(loops[k]);
                break;
            }
        return report;
    }

    const auto from_ring = lie_dims(quadratic_presentation(ring), cutoff);
    const auto from_factors = ranks_from_decomposition(loops::loop_factors(n, b, cutoff), cutoff);
    if (from_ring != from_factors)
        fail(ErrorCode::KoszulInconsistency, "Koszul dual ranks " + from_ring.to_string() +
                                                 " differ from decomposition ranks " + from_factors.to_string());
    report.verdict = Coformality::Coformal;
    report.lie_dims = from_ring;
    report.witness = "Koszul dual ranks equal decomposition ranks through degree " + std::to_string(cutoff);
    return report;
}

bool is_rationally_elliptic(const manifold::FourManifold& n, const manifold::BundleData&)
{
    return n.rank() <= 2;
}

} // namespace loophom::rational
