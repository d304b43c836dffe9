#include "ehrmat/bruteforce.hpp"
#include "ehrmat/hstar.hpp"
#include "ehrmat/specialize.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ehrmat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RationalPolynomial k4_polynomial() {
    return {1, make_rational(107, 30), make_rational(21, 4), make_rational(49, 12), make_rational(7, 4), make_rational(7, 20)};
}

// (1 + T + .. + T^(r-1))^n by repeated polynomial multiplication.
std::vector<Integer> katzman_by_expansion(std::size_t n, std::size_t r) {
    std::vector<Integer> a{1};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Integer> next(a.size() + r - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < r; ++j) next[i + j] += a[i];
        a = std::move(next);
    }
    return a;
}

RationalPolynomial pipeline(const RankFunction& f) {
    return ehrhart_polynomial_streamed(PolytopeSpec(Family::Bases, f), {Visibility::Barycentric, AdjacencyMode::BasisExchange},
                                       ToddMethod::PowerSums)
        .ehrhart;
}

}  // namespace

TEST(Transform, PublishedRows) {
    EXPECT_EQ(ehrhart_to_hstar(k4_polynomial(), 5), ints({1, 10, 20, 10, 1, 0}));
    EXPECT_EQ(ehrhart_to_hstar(RationalPolynomial::constant(1), 0), ints({1}));
    const RationalPolynomial q6 = ehrmat::testing::polynomial_of(ehrmat::testing::golden("Q6")["coefficients"]);
    EXPECT_EQ(ehrhart_to_hstar(q6, 5), ints({1, 12, 28, 12, 1, 0}));
}

TEST(Transform, RejectsNonEhrhartInput) {
    EXPECT_THROW(ehrhart_to_hstar(RationalPolynomial{1, make_rational(1, 3)}, 1), std::domain_error);
    EXPECT_THROW(ehrhart_to_hstar(RationalPolynomial{1, -3}, 1), std::domain_error);
}

TEST(Transform, SumIsNormalizedVolume) {
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t r = 1; r < n; ++r) {
            const RationalPolynomial p = uniform_ehrhart(n, r);
            const auto h = ehrhart_to_hstar(p, n - 1);
            Integer s = 0;
            for (const auto& x : h) s += x;
            EXPECT_EQ(Rational(s), p.leading() * Rational(factorial(n - 1)));
            EXPECT_EQ(h[0], 1);
        }
}

TEST(Katzman, Examples) {
    EXPECT_EQ(katzman(2, 3), ints({1, 2, 3, 2, 1}));
    EXPECT_EQ(katzman(7, 1), ints({1}));
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto a = katzman(n, 2);
        for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(a[j], binomial(n, j));
    }
}

TEST(Katzman, ThreeRoutesAgree) {
    for (std::size_t n = 1; n <= 10; ++n)
        for (std::size_t r = 1; r <= 5; ++r) {
            const auto a = katzman(n, r);
            EXPECT_EQ(a, katzman_multinomial(n, r)) << n << ' ' << r;
            EXPECT_EQ(a, katzman_rank_recurrence(n, r)) << n << ' ' << r;
            EXPECT_EQ(a, katzman_by_expansion(n, r)) << n << ' ' << r;
        }
}

TEST(Katzman, SymmetricAndUnimodal) {
    for (std::size_t n = 1; n <= 30; ++n)
        for (std::size_t r = 1; r <= 6; ++r) {
            const auto a = katzman(n, r);
            ASSERT_EQ(a.size(), n * (r - 1) + 1);
            for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], a[a.size() - 1 - i]);
            EXPECT_TRUE(is_unimodal(a));
        }
    EXPECT_EQ(katzman_at(katzman(3, 2), -1), 0);
    EXPECT_EQ(katzman_at(katzman(3, 2), 4), 0);
}

TEST(UniformEhrhart, SmallCases) {
    EXPECT_EQ(uniform_ehrhart(4, 2)(Rational(1)), 6);
    EXPECT_EQ(uniform_ehrhart(2, 1), (RationalPolynomial{1, 1}));
    EXPECT_EQ(uniform_ehrhart(5, 5), RationalPolynomial::constant(1));
    const PolytopeSpec u36(Family::Bases, RankFunction::uniform(6, 3));
    const RationalPolynomial p = uniform_ehrhart(6, 3);
    EXPECT_EQ(p.coefficient(0), 1);
    for (long k = 1; k <= 6; ++k) EXPECT_EQ(p(Rational(k)), Rational(count_direct(u36, k))) << k;
}

TEST(UniformHstar, ClosedForms) {
    EXPECT_EQ(uniform_hstar(4, 2), ints({1, 2, 1, 0}));
    for (std::size_t n = 3; n <= 30; ++n) EXPECT_EQ(uniform_hstar(n, 2), uniform_hstar_rank2(n)) << n;
    for (std::size_t n = 4; n <= 12; ++n) EXPECT_EQ(uniform_hstar(n, 3), uniform_hstar_rank3(n)) << n;
}

TEST(UniformHstar, MatchesTransformOfTheEhrhartFormula) {
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t r = 1; r < n; ++r)
            EXPECT_EQ(uniform_hstar(n, r), ehrhart_to_hstar(uniform_ehrhart(n, r), n - 1)) << n << ' ' << r;
    // U^{n,n} is a point.
    EXPECT_EQ(ehrhart_to_hstar(uniform_ehrhart(6, 6), 0), ints({1}));
}

TEST(UniformHstar, AllRanksAtOnce) {
    const KatzmanTable table(20);
    for (std::size_t n = 2; n <= 20; ++n) {
        const auto all = uniform_hstar_all_ranks(n, table);
        ASSERT_EQ(all.size(), n - 1);
        for (std::size_t r = 1; r < n; ++r) EXPECT_EQ(all[r - 1], uniform_hstar(n, r)) << n << ' ' << r;
    }
}

TEST(Unimodal, Definition) {
    EXPECT_TRUE(is_unimodal(ints({1, 10, 20, 10, 1})));
    EXPECT_FALSE(is_unimodal(ints({1, 2, 1, 2})));
    EXPECT_TRUE(is_unimodal(ints({5})));
    EXPECT_TRUE(is_unimodal(ints({})));
    EXPECT_TRUE(is_unimodal(ints({3, 3, 1, 0})));
    EXPECT_TRUE(is_unimodal(ints({0, 1, 1, 0})));
    EXPECT_FALSE(is_unimodal(ints({2, 1, 2})));
}

TEST(Conjecture, Reports) {
    const auto h = ehrhart_to_hstar(k4_polynomial(), 5);
    const ConjectureReport k4 = conjecture_report(k4_polynomial(), h);
    EXPECT_TRUE(k4.hstar_unimodal);
    EXPECT_TRUE(k4.ehrhart_positive);
    EXPECT_EQ(k4.hstar_witness, -1);
    const ConjectureReport bad = conjecture_report(RationalPolynomial{1, -1, 1}, ints({1, 2, 1, 2}));
    EXPECT_FALSE(bad.hstar_unimodal);
    EXPECT_FALSE(bad.ehrhart_positive);
    EXPECT_EQ(bad.hstar_witness, 3);
    EXPECT_EQ(bad.ehrhart_witness, 1);
}

TEST(Conjecture, RankTwoPositivity) {
    for (std::size_t n = 3; n <= 30; ++n) {
        const RationalPolynomial p = uniform_ehrhart(n, 2);
        for (const auto& c : p.coefficients()) EXPECT_GT(c, 0) << n;
    }
}

TEST(PartialUnimodality, Thresholds) {
    const auto t = partial_unimodality_scan(6, 4, 40);
    ASSERT_EQ(t.size(), 7U);
    ASSERT_TRUE(t[0].has_value());
    EXPECT_EQ(*t[0], 4U);
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] && t[i - 1]) EXPECT_GE(*t[i], *t[i - 1]);
    // Check the reported thresholds directly.
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i]) continue;
        for (std::size_t n = *t[i]; n <= 40; ++n) {
            const auto h = uniform_hstar(n, 3);
            for (std::size_t j = 0; j < i && j + 1 < h.size(); ++j) EXPECT_LE(h[j], h[j + 1]) << i << ' ' << n;
        }
    }
}

TEST(Invariance, DualOfBundledMatroids) {
    for (const auto& name : ehrmat::testing::corpus_names(7)) {
        const RankFunction f = ehrmat::testing::corpus(name).rank;
        EXPECT_EQ(pipeline(dual(f)), pipeline(f)) << name;
    }
}

TEST(Invariance, DirectSumMultiplies) {
    const RankFunction k4 = ehrmat::testing::corpus("K4").rank;
    const std::vector<std::pair<RankFunction, RankFunction>> pairs{
        {RankFunction::uniform(3, 1), RankFunction::uniform(4, 2)},
        {RankFunction::uniform(2, 1), k4},
        {RankFunction::uniform(3, 2), RankFunction::uniform(3, 1)}};
    for (const auto& [a, b] : pairs) EXPECT_EQ(pipeline(direct_sum(a, b)), pipeline(a) * pipeline(b));
}
