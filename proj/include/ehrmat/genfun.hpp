#pragma once

#include "ehrmat/cones.hpp"

#include <vector>

namespace ehrmat {

/// sign * z^numerator / prod_j (1 - z^denominators[j]). The apex is kept so the term can
/// be dilated: the k-th dilation has numerator a + (k-1) v.
struct GenFunTerm {
    int sign = 1;
    IntVec numerator;
    LatticePoint apex;
    std::vector<IntVec> denominators;
};

struct GenFun {
    std::vector<GenFunTerm> terms;
    std::size_t ambient = 0;
    /// dim P; every term of a polytope has this many denominators.
    std::size_t dimension = 0;
};

/// a = apex + sum of the open rays; denominators are the rays.
GenFunTerm unimodular_term(const HalfOpenSimplicialCone& cone);

GenFun build_genfun(const Decomposition& d);
GenFun build_genfun(const PolytopeSpec& spec, const ConeOptions& options = {}, const Budget& budget = {});

/// Generating function of kP, k >= 1.
GenFun dilate(const GenFun& g, long k);

}  // namespace ehrmat
