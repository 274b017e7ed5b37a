#pragma once

#include "loophom/loops/factors.hpp"
#include "loophom/series/pbw.hpp"

#include <cstddef>
#include <vector>

namespace loophom::rational {

/// Rational homotopy of Omega M read off a factor list, in loop degrees:
/// S^1 gives degree 1, Omega S^m (m odd) degree m-1, Omega S^m (m even)
/// degrees m-1 and 2m-2, S^3{n} nothing. Throws InvalidArgument when the
/// factors were truncated below `cutoff`.
series::GradedLieDims ranks_from_decomposition(const loops::LoopFactorMultiset& factors,
                                               std::size_t cutoff = series::kDefaultCutoff);

/// Free graded Lie algebra on generators of the given degrees (>= 1):
/// PBW inversion of the tensor algebra series 1 / (1 - sum t^deg).
series::GradedLieDims free_graded_lie_dims(const std::vector<std::size_t>& degrees,
                                           std::size_t cutoff = series::kDefaultCutoff);

} // namespace loophom::rational
