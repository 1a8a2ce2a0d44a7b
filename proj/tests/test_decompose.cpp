#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace tilt;
using namespace testing_support;

namespace {

Matrix random_invertible(std::size_t n, std::mt19937& rng) {
    while (true) {
        Matrix m(n, n, 2);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = rng() & 1u;
        if (is_invertible(m)) return m;
    }
}

Module change_basis(const Module& m, std::mt19937& rng) {
    const auto& q = m.algebra().quiver();
    std::vector<Matrix> g, ginv;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        g.push_back(random_invertible(m.dim(v), rng));
        ginv.push_back(*inverse(g.back()));
    }
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        arrows.push_back(g[q.arrows[a].target] * m.arrow_map(a) * ginv[q.arrows[a].source]);
    return Module(m.algebra_ptr(), m.dims(), arrows);
}

std::set<std::string> labels(const std::vector<Module>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(module_label(m));
    return out;
}

}  // namespace

TEST(Decompose, IndecomposablesOfFixtures) {
    EXPECT_EQ(labels(catalog("threecycle").indecomposables),
              (std::set<std::string>{"1", "2", "3", "1/2", "2/3", "3/1", "1/2/3", "2/3/1", "3/1/2"}));
    EXPECT_EQ(labels(catalog("a2").indecomposables), (std::set<std::string>{"1", "2", "1/2"}));
    EXPECT_EQ(labels(catalog("point").indecomposables), (std::set<std::string>{"1"}));
}

TEST(Decompose, IndecomposableTest) {
    const auto& cat = catalog("threecycle");
    for (const auto& m : cat.indecomposables) EXPECT_TRUE(is_indecomposable(m));
    EXPECT_FALSE(is_indecomposable(direct_sum(indec(cat, "1"), indec(cat, "1"))));
    EXPECT_FALSE(is_indecomposable(direct_sum(indec(cat, "2/3"), indec(cat, "1"))));
}

TEST(Decompose, SumsSplitIntoTheirSummands) {
    const auto& cat = catalog("threecycle");
    const auto& ind = cat.indecomposables;
    for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t j = i; j < ind.size(); ++j) {
            auto parts = decompose(direct_sum(ind[i], ind[j]));
            std::size_t total = 0;
            for (const auto& s : parts) total += s.multiplicity;
            EXPECT_EQ(total, 2u);
            if (i == j) {
                ASSERT_EQ(parts.size(), 1u);
                EXPECT_TRUE(is_isomorphic(parts[0].module, ind[i]));
            } else {
                ASSERT_EQ(parts.size(), 2u);
            }
        }
}

TEST(Decompose, IsomorphismSurvivesBaseChange) {
    std::mt19937 rng(7);
    const auto& cat = catalog("threecycle");
    const auto& ind = cat.indecomposables;
    for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t j = i; j < ind.size(); ++j) {
            auto s = direct_sum(ind[i], ind[j]);
            auto t = change_basis(s, rng);
            EXPECT_TRUE(is_isomorphic(s, t));
            if (i != j) {
                EXPECT_FALSE(is_isomorphic(s, direct_sum(ind[i], ind[i])));
            }
        }
    EXPECT_FALSE(is_isomorphic(indec(cat, "1/2"), indec(cat, "2/3")));
}

TEST(Tau, ThreeCycleTranslatesFollowTheMeshes) {
    const auto& cat = catalog("threecycle");
    std::map<std::string, std::string> expected{{"1", "2"},     {"2", "3"},     {"3", "1"},
                                                {"2/3", "3/1"}, {"1/2", "2/3"}, {"3/1", "1/2"},
                                                {"1/2/3", "0"}, {"2/3/1", "0"}, {"3/1/2", "0"}};
    for (const auto& m : cat.indecomposables) {
        EXPECT_EQ(module_label(tau(m)), expected.at(module_label(m))) << module_label(m);
        EXPECT_TRUE(is_tau_rigid(m));
    }
}

TEST(Tau, A2AndSupportTauTilting) {
    const auto& cat = catalog("a2");
    EXPECT_EQ(module_label(tau(indec(cat, "1"))), "2");
    EXPECT_TRUE(tau(indec(cat, "1/2")).is_zero());
    EXPECT_TRUE(is_support_tau_tilting(direct_sum(indec(cat, "1/2"), indec(cat, "2"))));
    EXPECT_TRUE(is_support_tau_tilting(indec(cat, "2")));
    EXPECT_TRUE(is_support_tau_tilting(Module::zero(cat.algebra)));
    EXPECT_FALSE(is_support_tau_tilting(direct_sum(indec(cat, "1"), indec(cat, "2"))));  // Hom(S_2, τS_1) ≠ 0
    EXPECT_FALSE(is_support_tau_tilting(indec(cat, "1/2")));  // support 2 vertices, one summand
}

TEST(Decompose, DefaultBound) {
    EXPECT_EQ(default_dim_bound(fixture("threecycle")), 3u);
    EXPECT_EQ(default_dim_bound(fixture("a2")), 2u);
    EXPECT_EQ(default_dim_bound(fixture("point")), 1u);
}
