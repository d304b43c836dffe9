#include "ehrmat/hstar.hpp"
#include "ehrmat/specialize.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ehrmat;
using ehrmat::testing::random_rational;

namespace {

RankFunction k4() { return RankFunction::graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Json ehrhart_golden(const std::string& name) { return ehrmat::testing::golden(name); }

}  // namespace

TEST(Todd, FirstCoefficients) {
    const auto c = todd_c(10);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], 1);
    EXPECT_EQ(c[2], 1);
    EXPECT_EQ(todd_b(1), make_rational(1, 2));
    EXPECT_EQ(todd_b(2), make_rational(1, 12));
    EXPECT_EQ(todd_b(3), 0);
    EXPECT_EQ(todd_b(4), make_rational(-1, 720));
}

TEST(Todd, CoefficientsMatchSeriesDivision) {
    const auto h = ehrmat::testing::todd_by_division(12);
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(todd_b(n), h[n]) << n;
}

TEST(Todd, CoefficientBound) {
    const auto c = todd_c(10);
    for (std::size_t n = 0; n <= 10; ++n) {
        Integer bound = 1;
        const Integer f = factorial(n + 1);
        for (std::size_t k = 0; k < 2 * n; ++k) bound *= f;
        EXPECT_LE(abs(c[n]), bound) << n;
    }
}

TEST(Todd, EvalMatchesDivisionOracle) {
    std::mt19937 rng(31);
    for (std::size_t s = 0; s <= 6; ++s)
        for (std::size_t m = 0; m <= 6; ++m)
            for (int t = 0; t < 4; ++t) {
                std::vector<Rational> xi(s);
                for (auto& x : xi) x = random_rational(rng);
                EXPECT_EQ(todd_eval(xi, m), ehrmat::testing::todd_oracle(xi, m)) << s << ' ' << m;
                const RationalPolynomial a = todd_series(xi, m), b = todd_series_power_sums(xi, m);
                EXPECT_EQ(a, b);
            }
}

TEST(Todd, LowOrders) {
    const std::vector<Rational> xi{3, make_rational(-1, 2), 5};
    EXPECT_EQ(todd_eval(xi, 0), 1);
    EXPECT_EQ(todd_eval(xi, 1), (xi[0] + xi[1] + xi[2]) / 2);
    const std::vector<Rational> ones{1, 1};
    EXPECT_EQ(todd_eval(ones, 2), make_rational(5, 12));
}

TEST(Lambda, MomentCurve) {
    EXPECT_EQ(find_lambda({IntVec{1, 0, 0}}, 3), (IntVec{1, 0, 0}));
    EXPECT_EQ(find_lambda({IntVec{1, -1}}, 2), (IntVec{1, 0}));
    EXPECT_EQ(find_lambda({IntVec{-1, 1}, IntVec{1, -1}}, 2), (IntVec{1, 0}));
    EXPECT_EQ(find_lambda({IntVec{0, 1}}, 2), (IntVec{1, 1}));
    const IntVec l = find_lambda({IntVec{1, -1, 0}, IntVec{0, 1, -1}, IntVec{1, 0, -1}, IntVec{0, 1, 0}}, 3);
    for (const IntVec& b : {IntVec{1, -1, 0}, IntVec{0, 1, -1}, IntVec{1, 0, -1}, IntVec{0, 1, 0}}) EXPECT_NE(dot(l, b), 0);
}

TEST(Weights, ClosedForms) {
    EXPECT_EQ(weights(std::vector<Integer>{}), std::vector<Rational>{1});
    for (long beta : {1L, -1L, 3L, -7L}) {
        const std::vector<Integer> b{beta};
        const auto w = weights(b);
        ASSERT_EQ(w.size(), 2U);
        EXPECT_EQ(w[0], make_rational(1, 2));
        EXPECT_EQ(w[1], make_rational(-1, beta));
        EXPECT_EQ(weights(b, ToddMethod::PowerSums), w);
    }
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> e(-9, 9);
    for (int t = 0; t < 100; ++t) {
        std::vector<Integer> b(1 + t % 7);
        for (auto& x : b)
            do x = e(rng);
            while (x == 0);
        EXPECT_EQ(weights(b), weights(b, ToddMethod::PowerSums));
    }
}

TEST(Count, SmallPolytopes) {
    const GenFun seg = build_genfun(PolytopeSpec(Family::Bases, RankFunction::uniform(2, 1)));
    EXPECT_EQ(count(seg), 2);
    EXPECT_EQ(count_dilation(seg, 2), 3);
    EXPECT_EQ(count_dilation(seg, 0), 1);
    const GenFun g = build_genfun(PolytopeSpec(Family::Bases, k4()));
    EXPECT_EQ(count(g), 16);
    EXPECT_EQ(count_dilation(g, 2), 101);  // brute-force count of 2P
    EXPECT_EQ(count(build_genfun(PolytopeSpec(Family::Bases, RankFunction::uniform(4, 2)))), 6);
}

TEST(Ehrhart, K4MatchesThePublishedRow) {
    const GenFun g = build_genfun(PolytopeSpec(Family::Bases, k4()));
    const RationalPolynomial p = ehrhart_polynomial(g);
    EXPECT_EQ(p, (RationalPolynomial{1, make_rational(107, 30), make_rational(21, 4), make_rational(49, 12),
                                     make_rational(7, 4), make_rational(7, 20)}));
    EXPECT_EQ(p, ehrhart_polynomial(g, ToddMethod::PowerSums));
    for (long k = 1; k <= 5; ++k) EXPECT_EQ(p(Rational(k)), Rational(count_dilation(g, k)));
}

TEST(Ehrhart, UniformAndPoint) {
    EXPECT_EQ(ehrhart_polynomial(build_genfun(PolytopeSpec(Family::Bases, RankFunction::uniform(4, 2)))), uniform_ehrhart(4, 2));
    // C(2k+3, 3) - 4 C(k+2, 3)
    const RationalPolynomial direct = binomial_polynomial(2, 3, 3) - binomial_polynomial(1, 2, 3) * Rational(4);
    EXPECT_EQ(uniform_ehrhart(4, 2), direct);
    EXPECT_EQ(ehrhart_polynomial(build_genfun(PolytopeSpec(Family::Bases, RankFunction::uniform(3, 3)))),
              RationalPolynomial::constant(1));
}

TEST(Ehrhart, EvaluationMatchesDilatedCounts) {
    for (const auto& name : {"P6", "W3", "F7"}) {
        const GenFun g = build_genfun(PolytopeSpec(Family::Bases, ehrmat::testing::corpus(name).rank));
        const RationalPolynomial p = ehrhart_polynomial(g);
        EXPECT_EQ(p.coefficient(0), 1) << name;
        EXPECT_GT(p.leading(), 0) << name;
        EXPECT_EQ(static_cast<std::size_t>(p.degree()), g.dimension);
        for (long k = 1; k <= static_cast<long>(g.dimension); ++k) EXPECT_EQ(p(Rational(k)), Rational(count_dilation(g, k))) << name;
    }
}

TEST(Ehrhart, StreamedEqualsAssembled) {
    std::vector<PolytopeSpec> specs{PolytopeSpec(Family::Bases, k4()), PolytopeSpec(Family::Independence, k4()),
                                    PolytopeSpec(Family::Bases, ehrmat::testing::corpus("R6").rank),
                                    PolytopeSpec(Family::Independence, RankFunction::uniform(5, 3))};
    std::map<Subset, int> t;
    for (Subset a = 1; a < 16; ++a) t[a] = std::min(2 * cardinality(a), 5);
    specs.emplace_back(Family::Polymatroid, RankFunction::polymatroid_table(4, t));
    for (const auto& spec : specs) {
        const RationalPolynomial assembled = ehrhart_polynomial(build_genfun(spec));
        for (const auto method : {ToddMethod::SuccessiveProducts, ToddMethod::PowerSums}) {
            EXPECT_EQ(ehrhart_polynomial_streamed(spec, {}, method).ehrhart, assembled);
            ConeOptions fast{Visibility::Barycentric,
                             spec.family == Family::Bases ? AdjacencyMode::BasisExchange : AdjacencyMode::LinearProgram};
            EXPECT_EQ(ehrhart_polynomial_streamed(spec, fast, method).ehrhart, assembled);
        }
    }
}

TEST(Ehrhart, GoldensForSixElementMatroids) {
    for (const auto& name : {"K4", "W3", "Q6", "P6", "R6"}) {
        const GenFun g = build_genfun(PolytopeSpec(Family::Bases, ehrmat::testing::corpus(name).rank));
        EXPECT_EQ(ehrhart_polynomial(g), ehrmat::testing::polynomial_of(ehrhart_golden(name)["coefficients"])) << name;
    }
}
