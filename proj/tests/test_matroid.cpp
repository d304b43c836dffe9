#include "ehrmat/matroid.hpp"
#include "ehrmat/vertices.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ehrmat;

namespace {

RankFunction k4() { return RankFunction::graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// Bases of M(K4) as printed in Oxley's example: every 3-edge spanning tree.
std::vector<Subset> k4_bases() {
    std::vector<Subset> out;
    for (const auto& b : std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                                       {1, 4, 6}, {1, 5, 6}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6},
                                                       {2, 5, 6}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}})
        out.push_back(subset_of(b));
    return out;
}

}  // namespace

TEST(Rank, Uniform) {
    const RankFunction u = RankFunction::uniform(6, 3);
    EXPECT_EQ(u(subset_of({1, 2, 3, 4})), 3);
    EXPECT_EQ(u(subset_of({5})), 1);
    EXPECT_EQ(u(0), 0);
    EXPECT_THROW(u(subset_of({7})), std::out_of_range);
}

TEST(Rank, GraphicK4) {
    const RankFunction g = k4();
    EXPECT_EQ(g(full_set(6)), 3);
    EXPECT_EQ(g(subset_of({1, 2, 4})), 2);  // triangle 1-2-3
    EXPECT_EQ(g(subset_of({1, 2, 3})), 3);
}

TEST(Rank, ExplicitBasesMatchesGraphic) {
    const RankFunction b = RankFunction::from_bases(6, k4_bases());
    const RankFunction g = k4();
    EXPECT_EQ(b(subset_of({1, 2, 3})), 3);
    for (Subset a = 0; a < 64; ++a) EXPECT_EQ(b(a), g(a)) << a;
}

TEST(Rank, MonotoneOnRandomChains) {
    std::mt19937 rng(23);
    const std::vector<RankFunction> fs{RankFunction::uniform(8, 3), k4(), ehrmat::testing::corpus("F8").rank};
    for (const auto& f : fs) {
        const std::size_t n = f.ground_size();
        for (int t = 0; t < 50; ++t) {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            Subset a = 0;
            int prev = 0;
            for (std::size_t e : order) {
                a |= Subset{1} << e;
                EXPECT_GE(f(a), prev);
                EXPECT_LE(f(a), prev + 1);
                prev = f(a);
            }
        }
    }
}

TEST(Axioms, Matroids) {
    EXPECT_TRUE(check_matroid_axioms(RankFunction::uniform(4, 2)).ok);
    EXPECT_TRUE(check_matroid_axioms(k4()).ok);
    const AxiomReport bad = check_matroid_axioms(RankFunction::polymatroid_table(1, {{subset_of({1}), 2}}));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.axiom, 1);
}

TEST(Axioms, EveryBundledMatroidPasses) {
    for (const auto& name : ehrmat::testing::corpus_names()) {
        const AxiomReport r = check_matroid_axioms(ehrmat::testing::corpus(name).rank);
        EXPECT_TRUE(r.ok) << name << ": " << r.message;
    }
}

TEST(Axioms, Polymatroids) {
    EXPECT_TRUE(check_polymatroid_axioms(k4()).ok);
    EXPECT_TRUE(check_polymatroid_axioms(RankFunction::uniform(5, 2)).ok);
    std::map<Subset, int> modular;
    for (Subset a = 1; a < 8; ++a) modular[a] = 2 * cardinality(a);
    EXPECT_TRUE(check_polymatroid_axioms(RankFunction::polymatroid_table(3, modular)).ok);
    const AxiomReport bad = check_polymatroid_axioms(
        RankFunction::polymatroid_table(2, {{subset_of({1}), 1}, {subset_of({2}), 1}, {subset_of({1, 2}), 3}}));
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.axiom, 3);
}

TEST(Axioms, GuardOnLargeGroundSet) {
    EXPECT_THROW(check_matroid_axioms(RankFunction::uniform(30, 2)), BudgetExceeded);
}

TEST(Construction, RejectsMalformedInput) {
    EXPECT_THROW(RankFunction::uniform(3, 4), ValidationError);
    EXPECT_THROW(RankFunction::from_bases(3, {subset_of({1, 2}), subset_of({3})}), ValidationError);
    EXPECT_THROW(RankFunction::polymatroid_table(2, {{subset_of({1}), 1}}), ValidationError);
}

TEST(Dual, Uniform) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (std::size_t r = 0; r <= n; ++r) {
            const RankFunction d = dual(RankFunction::uniform(n, r));
            const RankFunction u = RankFunction::uniform(n, n - r);
            for (Subset a = 0; a <= full_set(n); ++a) EXPECT_EQ(d(a), u(a));
        }
}

TEST(Dual, IsAnInvolution) {
    for (const auto& name : ehrmat::testing::corpus_names(10)) {
        const RankFunction f = ehrmat::testing::corpus(name).rank;
        const RankFunction dd = dual(dual(f));
        for (Subset a = 0; a <= full_set(f.ground_size()); ++a) ASSERT_EQ(dd(a), f(a)) << name;
        EXPECT_TRUE(check_matroid_axioms(dual(f)).ok) << name;
    }
}

TEST(Dual, K4AndTables) {
    EXPECT_EQ(dual(k4()).total_rank(), 3);
    EXPECT_THROW(dual(RankFunction::polymatroid_table(1, {{1, 1}})), std::invalid_argument);
}

TEST(DirectSum, RanksAndBases) {
    const RankFunction one = RankFunction::uniform(1, 1);
    const RankFunction s = direct_sum(one, one);
    EXPECT_EQ(s(subset_of({1, 2})), 2);
    const RankFunction a = RankFunction::uniform(3, 2), b = k4();
    const RankFunction ab = direct_sum(a, b);
    EXPECT_EQ(ab.ground_size(), 9U);
    EXPECT_TRUE(check_matroid_axioms(ab).ok);
    EXPECT_EQ(enumerate_bases(ab).size(), enumerate_bases(a).size() * enumerate_bases(b).size());
    EXPECT_EQ(ab(subset_of({1, 4, 5})), 3);
}
