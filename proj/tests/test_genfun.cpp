#include "ehrmat/bruteforce.hpp"
#include "ehrmat/genfun.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ehrmat;

namespace {

RankFunction k4() { return RankFunction::graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// z_i = p_i / (p_i + 1) over distinct primes p_i: z^b = 1 only for b = 0, so no pole is hit.
std::vector<Rational> point(std::size_t n) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<Rational> z;
    for (std::size_t i = 0; i < n; ++i) z.push_back(make_rational(primes[i], primes[i] + 1));
    return z;
}

Rational monomial(const std::vector<Rational>& z, const IntVec& e) {
    Rational out = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        Rational p = 1;
        const long k = e[i].get_si();
        for (long t = 0; t < std::labs(k); ++t) p *= z[i];
        out *= k >= 0 ? p : Rational(1 / p);
    }
    return out;
}

Rational evaluate(const GenFun& g, const std::vector<Rational>& z) {
    Rational total = 0;
    for (const auto& t : g.terms) {
        Rational den = 1;
        for (const auto& b : t.denominators) den *= 1 - monomial(z, b);
        total += Rational(t.sign) * monomial(z, t.numerator) / den;
    }
    return total;
}

Rational lattice_sum(const PolytopeSpec& spec, long k, const std::vector<Rational>& z) {
    Rational total = 0;
    for (const auto& x : lattice_points(spec, k)) total += monomial(z, x);
    return total;
}

void expect_brion(const PolytopeSpec& spec, long kmax) {
    const GenFun g = build_genfun(spec);
    const auto z = point(spec.n);
    for (long k = 1; k <= kmax; ++k) EXPECT_EQ(evaluate(dilate(g, k), z), lattice_sum(spec, k, z)) << "k = " << k;
}

}  // namespace

TEST(UnimodularTerm, OneDimensionalCone) {
    HalfOpenSimplicialCone c{IntVec{0}, {IntVec{1}}, {false}, {IntVec{-1}}};
    GenFunTerm t = unimodular_term(c);
    EXPECT_EQ(t.sign, 1);
    EXPECT_EQ(t.numerator, IntVec{0});
    EXPECT_EQ(t.denominators, std::vector<IntVec>{IntVec{1}});
    c.open = {true};
    t = unimodular_term(c);
    EXPECT_EQ(t.numerator, IntVec{1});
    EXPECT_EQ(t.apex, IntVec{0});
}

TEST(UnimodularTerm, HalfOpenShiftsByOpenRays) {
    HalfOpenSimplicialCone c{IntVec{1, 1}, {IntVec{1, 0}, IntVec{1, 2}}, {true, false}, {}};
    EXPECT_EQ(unimodular_term(c).numerator, (IntVec{2, 1}));
    c.open = {true, true};
    EXPECT_EQ(unimodular_term(c).numerator, (IntVec{3, 3}));
}

TEST(BuildGenFun, Segment) {
    const PolytopeSpec spec(Family::Bases, RankFunction::uniform(2, 1));
    const GenFun g = build_genfun(spec);
    EXPECT_EQ(g.terms.size(), 2U);
    EXPECT_EQ(g.dimension, 1U);
    EXPECT_EQ(g.ambient, 2U);
    expect_brion(spec, 3);
}

TEST(BuildGenFun, K4TermCounts) {
    const PolytopeSpec spec(Family::Bases, k4());
    const Decomposition d = decompose(spec);
    const GenFun g = build_genfun(d);
    std::size_t cones = 0;
    for (const auto& vd : d.per_vertex) {
        EXPECT_GE(vd.simplices.size(), 1U);
        cones += vd.simplices.size();
        if (vd.cone.apex == IntVec{1, 1, 1, 0, 0, 0}) EXPECT_EQ(vd.simplices.size(), 3U);
    }
    EXPECT_EQ(g.terms.size(), cones);
    EXPECT_EQ(d.per_vertex.size(), 16U);
    for (const auto& t : g.terms) {
        EXPECT_EQ(t.denominators.size(), 5U);
        for (const auto& b : t.denominators) EXPECT_FALSE(b.is_zero());
    }
}

TEST(BuildGenFun, TermCountBound) {
    for (const auto& name : ehrmat::testing::corpus_names(7)) {
        const PolytopeSpec spec(Family::Bases, ehrmat::testing::corpus(name).rank);
        const GenFun g = build_genfun(spec);
        const VertexSet vs = enumerate_vertices(spec);
        Integer bound = Integer(vs.size()) << spec.r;
        for (int k = 0; k < spec.r; ++k) bound *= spec.n - k;
        EXPECT_LE(Integer(g.terms.size()), bound) << name;
    }
}

TEST(Brion, RationalFunctionsSumToThePolytope) {
    expect_brion(PolytopeSpec(Family::Bases, k4()), 2);
    expect_brion(PolytopeSpec(Family::Bases, RankFunction::uniform(4, 2)), 3);
    expect_brion(PolytopeSpec(Family::Independence, RankFunction::uniform(3, 2)), 3);
    expect_brion(PolytopeSpec(Family::Independence, k4()), 1);
    std::map<Subset, int> t;
    for (Subset a = 1; a < 8; ++a) t[a] = std::min(2 * cardinality(a), 3);
    expect_brion(PolytopeSpec(Family::Polymatroid, RankFunction::polymatroid_table(3, t)), 3);
}

TEST(Brion, BundledMatroidsUpToSixElements) {
    for (const auto& name : ehrmat::testing::corpus_names(6)) {
        SCOPED_TRACE(name);
        expect_brion(PolytopeSpec(Family::Bases, ehrmat::testing::corpus(name).rank), 1);
    }
}

TEST(Dilate, MovesNumeratorsAlongTheApex) {
    const GenFun g = build_genfun(PolytopeSpec(Family::Bases, k4()));
    const GenFun same = dilate(g, 1);
    ASSERT_EQ(same.terms.size(), g.terms.size());
    for (std::size_t i = 0; i < g.terms.size(); ++i) EXPECT_EQ(same.terms[i].numerator, g.terms[i].numerator);
    const GenFun twice = dilate(g, 3);
    for (std::size_t i = 0; i < g.terms.size(); ++i) {
        const auto& t = g.terms[i];
        EXPECT_EQ(twice.terms[i].numerator, t.numerator + t.apex * Integer(2));
        EXPECT_EQ(twice.terms[i].denominators, t.denominators);
    }
    EXPECT_THROW(dilate(g, 0), std::invalid_argument);
}
