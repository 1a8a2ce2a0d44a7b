#include <gtest/gtest.h>

#include "support.hpp"

using namespace tilt;
using namespace testing_support;

namespace {

std::vector<Module> small_modules(const Catalog& cat) {
    std::vector<Module> out = cat.indecomposables;
    for (std::size_t i = 0; i < cat.indecomposables.size(); ++i)
        for (std::size_t j = i; j < cat.indecomposables.size(); ++j)
            if (cat.indecomposables[i].total_dim() + cat.indecomposables[j].total_dim() <= 4)
                out.push_back(direct_sum(cat.indecomposables[i], cat.indecomposables[j]));
    return out;
}

}  // namespace

TEST(Module, StandardModuleDimensions) {
    auto tc = fixture("threecycle");
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(standard_module(tc, StandardKind::projective, i).dims(), (DimVector{1, 1, 1}));
        EXPECT_EQ(standard_module(tc, StandardKind::injective, i).dims(), (DimVector{1, 1, 1}));
    }
    EXPECT_EQ(module_label(standard_module(tc, StandardKind::projective, 0)), "1/2/3");
    EXPECT_EQ(module_label(standard_module(tc, StandardKind::injective, 0)), "2/3/1");
    EXPECT_EQ(standard_module(tc, StandardKind::simple, 1).dims(), (DimVector{0, 1, 0}));

    auto a2 = fixture("a2");
    EXPECT_EQ(standard_module(a2, StandardKind::projective, 0).dims(), (DimVector{1, 1}));
    EXPECT_EQ(standard_module(a2, StandardKind::projective, 1).dims(), (DimVector{0, 1}));
    EXPECT_EQ(standard_module(a2, StandardKind::injective, 0).dims(), (DimVector{1, 0}));
    EXPECT_EQ(standard_module(a2, StandardKind::injective, 1).dims(), (DimVector{1, 1}));
    EXPECT_THROW(standard_module(a2, StandardKind::simple, 7), InputError);
}

TEST(Module, RadicalOfProjective) {
    auto tc = fixture("threecycle");
    auto tr = top_and_radical(standard_module(tc, StandardKind::projective, 1));
    EXPECT_EQ(tr.top, (std::vector<std::size_t>{0, 1, 0}));
    EXPECT_EQ(tr.radical.dims(), (DimVector{1, 0, 1}));
    EXPECT_EQ(module_label(tr.radical), "3/1");
}

TEST(Module, HomDimensionMatchesBruteForce) {
    for (auto name : {"threecycle", "a2", "point"}) {
        auto mods = small_modules(catalog(name));
        for (const auto& m : mods)
            for (const auto& n : mods) EXPECT_EQ(hom_dim(m, n), brute_hom_dim(m, n)) << module_label(m) << " -> " << module_label(n);
    }
}

TEST(Module, HomBasisElementsAreMorphisms) {
    const auto& cat = catalog("threecycle");
    for (const auto& m : cat.indecomposables)
        for (const auto& n : cat.indecomposables)
            for (const auto& f : hom_space(m, n).basis) EXPECT_TRUE(is_morphism(m, n, f));
}

TEST(Module, SubmoduleDimsMatchBruteForce) {
    for (auto name : {"threecycle", "a2"}) {
        const auto& cat = catalog(name);
        for (const auto& m : cat.indecomposables)
            for (const auto& n : cat.indecomposables) {
                auto s = direct_sum(m, n);
                EXPECT_EQ(submodule_dim_vectors(s), brute_submodule_dims(s)) << module_label(m) << " + " << module_label(n);
            }
    }
}

TEST(Module, SubmoduleEnumerationGuard) {
    auto tc = fixture("threecycle");
    std::vector<Module> parts(5, standard_module(tc, StandardKind::projective, 0));
    EXPECT_THROW(submodule_dim_vectors(direct_sum(parts, tc)), LimitError);
}

TEST(Module, FacAndSub) {
    const auto& cat = catalog("threecycle");
    auto tc = cat.algebra;
    const auto& p1 = indec(cat, "1/2/3");
    EXPECT_TRUE(fac_membership(p1, indec(cat, "1/2")));
    EXPECT_TRUE(fac_membership(p1, indec(cat, "1")));
    EXPECT_FALSE(fac_membership(p1, indec(cat, "2")));
    EXPECT_TRUE(fac_membership(indec(cat, "1/2"), direct_sum(indec(cat, "1"), indec(cat, "1/2"))));
    EXPECT_TRUE(sub_membership(p1, indec(cat, "3")));
    EXPECT_TRUE(sub_membership(p1, indec(cat, "2/3")));
    EXPECT_FALSE(sub_membership(p1, indec(cat, "1")));
    // Λ generates and DΛ cogenerates everything
    Module lambda = projective_sum(tc, {0, 1, 2});
    Module dual = injective_sum(tc, {0, 1, 2});
    for (const auto& m : cat.indecomposables) {
        EXPECT_TRUE(fac_membership(lambda, m));
        EXPECT_TRUE(sub_membership(dual, m));
        EXPECT_TRUE(fac_membership(m, m));
        EXPECT_TRUE(sub_membership(m, m));
    }
    EXPECT_TRUE(fac_membership(indec(cat, "2"), Module::zero(tc)));
}

TEST(Module, JsonRoundTrip) {
    const auto& cat = catalog("threecycle");
    for (const auto& m : cat.indecomposables) EXPECT_EQ(module_from_json(cat.algebra, module_to_json(m)), m);
    auto bad = nlohmann::json::parse(R"({"dims":[1,1,1],"arrows":{"a":[[1]],"b":[[1]],"c":[[1]]}})");
    EXPECT_THROW(module_from_json(cat.algebra, bad), InputError);  // abc acts nonzero
    auto shape = nlohmann::json::parse(R"({"dims":[1,1,1],"arrows":{"a":[[1,0]],"b":[[1]],"c":[[0]]}})");
    EXPECT_THROW(module_from_json(cat.algebra, shape), InputError);
}

TEST(Module, LabelsOfZeroAndSums) {
    const auto& cat = catalog("a2");
    EXPECT_EQ(module_label(Module::zero(cat.algebra)), "0");
    EXPECT_EQ(module_label(direct_sum(indec(cat, "1"), indec(cat, "2"))), "1+2");
}
