#include "ehrmat/genfun.hpp"

#include <stdexcept>

namespace ehrmat {

GenFunTerm unimodular_term(const HalfOpenSimplicialCone& cone) {
    GenFunTerm t;
    t.apex = cone.apex;
    t.numerator = cone.apex;
    for (std::size_t j = 0; j < cone.rays.size(); ++j) {
        if (cone.rays[j].is_zero()) throw std::invalid_argument("unimodular_term: zero ray");
        if (cone.open[j]) t.numerator += cone.rays[j];
    }
    t.denominators = cone.rays;
    return t;
}

GenFun build_genfun(const Decomposition& d) {
    GenFun g;
    g.ambient = d.chart.ambient();
    g.dimension = d.chart.dimension();
    for (const auto& vd : d.per_vertex)
        for (const auto& piece : vd.pieces) g.terms.push_back(unimodular_term(piece));
    return g;
}

GenFun build_genfun(const PolytopeSpec& spec, const ConeOptions& options, const Budget& budget) {
    return build_genfun(decompose(spec, options, budget));
}

GenFun dilate(const GenFun& g, long k) {
    if (k < 1) throw std::invalid_argument("dilate: k must be at least 1");
    GenFun out = g;
    for (auto& t : out.terms) {
        t.numerator += t.apex * Integer(k - 1);
        t.apex *= Integer(k);
    }
    return out;
}

}  // namespace ehrmat
