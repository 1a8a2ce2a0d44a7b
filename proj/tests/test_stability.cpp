#include <gtest/gtest.h>

#include "support.hpp"

using namespace tilt;
using namespace testing_support;

namespace {

using R = Rational;

// Oracle: semistability straight from brute-force submodule dimension vectors.
bool oracle_semistable(const std::vector<R>& theta, const Module& m) {
    auto val = [&](const DimVector& d) {
        R s(0);
        for (std::size_t i = 0; i < d.size(); ++i) s += theta[i] * R(static_cast<long long>(d[i]));
        return s;
    };
    if (val(m.dims()) != R(0)) return false;
    for (const auto& d : brute_submodule_dims(m))
        if (val(d) > R(0)) return false;
    return true;
}

std::set<std::string> semistable_labels(const Catalog& cat, const StabilityForm& th) {
    std::set<std::string> out;
    for (const auto& m : cat.indecomposables)
        if (is_semistable(th, m).semistable) out.insert(module_label(m));
    return out;
}

}  // namespace

TEST(Stability, RationalParsing) {
    EXPECT_EQ(parse_rational("-3/2"), R(-3, 2));
    EXPECT_EQ(parse_rational(" 4 "), R(4));
    EXPECT_EQ(rational_string(R(-3, 2)), "-3/2");
    EXPECT_EQ(rational_string(R(6, 3)), "2");
    EXPECT_EQ(parse_rational_list("-1,1/2,3"), (std::vector<R>{R(-1), R(1, 2), R(3)}));
    EXPECT_THROW(parse_rational("1/0"), QueryError);
    EXPECT_THROW(parse_rational("x"), QueryError);
    EXPECT_THROW(parse_rational("1/2/3"), QueryError);
    EXPECT_THROW(parse_rational_list(""), QueryError);
}

TEST(Stability, ThetaFromPresilting) {
    const auto& cat = catalog("threecycle");
    auto u = object(cat, {"P_2 - P_3", "-P_1"});
    auto th = theta_from_presilting(u, {R(1), R(1)}, cat.algebra);
    EXPECT_EQ(th.coeffs, (std::vector<R>{R(-1), R(1), R(-1)}));
    EXPECT_TRUE(th.source.has_value());
    EXPECT_EQ(theta_from_presilting(SiltingObject{}, {}, cat.algebra).coeffs, std::vector<R>(3, R(0)));
    EXPECT_THROW(theta_from_presilting(u, {R(1), R(0)}, cat.algebra), QueryError);
    EXPECT_THROW(theta_from_presilting(u, {R(1)}, cat.algebra), QueryError);
    auto bad = object(cat, {"P_1", "-P_1"});
    EXPECT_THROW(theta_from_presilting(bad, {R(1), R(1)}, cat.algebra), QueryError);
}

TEST(Stability, ThetaTableOfTheWorkedExample) {
    const auto& cat = catalog("threecycle");
    auto u = object(cat, {"P_2 - P_3", "-P_1"});
    for (auto [a1, a2] : {std::pair{R(1), R(1)}, std::pair{R(1), R(2)}, std::pair{R(3, 4), R(5)}}) {
        auto th = theta_from_presilting(u, {a1, a2}, cat.algebra);
        auto v = [&](const char* l) { return theta_value(th, indec(cat, l).dims()); };
        EXPECT_EQ(v("1/2/3"), -a2);
        EXPECT_EQ(v("2/3/1"), -a2);
        EXPECT_EQ(v("3/1/2"), -a2);
        EXPECT_EQ(v("3/1"), -a1 - a2);
        EXPECT_EQ(v("2/3"), R(0));
        EXPECT_EQ(v("1/2"), a1 - a2);
        EXPECT_EQ(v("1"), -a2);
        EXPECT_EQ(v("3"), -a1);
        EXPECT_EQ(v("2"), a1);
    }
    EXPECT_EQ(theta_value(theta_from_presilting(u, {R(1), R(1)}, cat.algebra), DimVector{0, 0, 0}), R(0));
}

TEST(Stability, SemistableExamples) {
    const auto& cat = catalog("threecycle");
    auto u = object(cat, {"P_2 - P_3", "-P_1"});
    auto th = theta_from_presilting(u, {R(1), R(1)}, cat.algebra);
    EXPECT_TRUE(is_semistable(th, indec(cat, "2/3")).semistable);
    auto r = is_semistable(th, indec(cat, "1/2"));
    EXPECT_FALSE(r.semistable);
    ASSERT_TRUE(r.violating_submodule.has_value());
    EXPECT_EQ(*r.violating_submodule, (DimVector{0, 1, 0}));
    EXPECT_EQ(theta_value(th, *r.violating_submodule), R(1));
    EXPECT_TRUE(is_semistable(th, Module::zero(cat.algebra)).semistable);
    EXPECT_EQ(semistable_labels(cat, th), (std::set<std::string>{"2/3"}));

    StabilityForm zero{{R(0), R(0), R(0)}, std::nullopt, {}};
    EXPECT_EQ(semistable_labels(cat, zero).size(), 9u);
    StabilityForm ones{{R(1), R(1), R(1)}, std::nullopt, {}};
    EXPECT_TRUE(semistable_labels(cat, ones).empty());
}

TEST(Stability, SemistabilityMatchesBruteForceOracle) {
    const auto& cat = catalog("threecycle");
    std::vector<std::vector<R>> thetas{{R(-1), R(1), R(-1)}, {R(0), R(1), R(-1)}, {R(1), R(-1), R(0)},
                                       {R(1), R(1), R(-2)},  {R(-2), R(1), R(1)}, {R(1, 2), R(-1), R(1, 2)}};
    for (const auto& t : thetas) {
        StabilityForm th{t, std::nullopt, {}};
        for (const auto& a : cat.indecomposables)
            for (const auto& b : cat.indecomposables) {
                auto m = direct_sum(a, b);
                EXPECT_EQ(is_semistable(th, m).semistable, oracle_semistable(t, m));
            }
    }
}

TEST(Stability, TorsionPairMembershipExamples) {
    const auto& cat = catalog("threecycle");
    auto alg = cat.algebra;
    auto u = total_complex(object(cat, {"P_2 - P_3", "-P_1"}), alg);
    EXPECT_TRUE(in_T_plus(u, indec(cat, "2/3")));
    EXPECT_TRUE(in_F_minus(u, indec(cat, "2/3")));
    EXPECT_FALSE(in_F_minus(u, indec(cat, "2")));
    EXPECT_TRUE(in_T_minus(u, indec(cat, "2")));
    EXPECT_TRUE(in_T_minus(u, H0(u)));
    EXPECT_TRUE(in_F_plus(u, Hminus1_nu(u)));
    auto zero = Module::zero(alg);
    EXPECT_TRUE(in_T_plus(u, zero));
    EXPECT_TRUE(in_F_minus(u, zero));
    std::set<std::string> w;
    for (const auto& m : cat.indecomposables)
        if (in_W_U(u, m)) w.insert(module_label(m));
    EXPECT_EQ(w, (std::set<std::string>{"2/3"}));

    auto empty = TwoTermComplex(alg, ProjMap::zero(*alg, {}, {}));
    auto shift = TwoTermComplex::shifted(alg, {0, 1, 2});
    for (const auto& m : cat.indecomposables) {
        EXPECT_TRUE(in_W_U(empty, m));
        EXPECT_FALSE(in_W_U(shift, m));
    }
}

TEST(Stability, TorsionContainmentsForAllFaces) {
    const auto& cat = catalog("threecycle");
    for (const auto& f : cat.faces) {
        auto u = total_complex(cat.object(f), cat.algebra);
        for (const auto& m : cat.indecomposables) {
            if (in_T_minus(u, m)) EXPECT_TRUE(in_T_plus(u, m));
            if (in_F_plus(u, m)) EXPECT_TRUE(in_F_minus(u, m));
        }
    }
}

TEST(Stability, WideSubcategoryOfSilting) {
    const auto& cat = catalog("threecycle");
    auto lambda = object(cat, {"P_1", "P_2", "P_3"});
    auto shift = object(cat, {"-P_1", "-P_2", "-P_3"});
    auto t = object(cat, {"P_2 - P_3", "-P_1", "P_2 - P_1"});
    std::set<std::string> w;
    for (const auto& m : cat.indecomposables) {
        EXPECT_TRUE(in_W_T(lambda, m, cat.algebra));
        EXPECT_FALSE(in_W_T(shift, m, cat.algebra));
        if (in_W_T(t, m, cat.algebra)) w.insert(module_label(m));
    }
    EXPECT_EQ(w, (std::set<std::string>{"2/3"}));
    EXPECT_THROW(in_W_T(object(cat, {"P_1"}), indec(cat, "1"), cat.algebra), QueryError);
}

TEST(Stability, MembershipReport) {
    const auto& cat = catalog("threecycle");
    auto uo = object(cat, {"P_2 - P_3", "-P_1"});
    auto u = total_complex(uo, cat.algebra);
    auto th = theta_from_presilting(uo, {R(1), R(1)}, cat.algebra);
    auto r = membership_report(u, th, indec(cat, "1/2"), "1/2");
    EXPECT_EQ(r.in_W_U, r.in_T_plus && r.in_F_minus);
    EXPECT_FALSE(r.is_semistable);
    EXPECT_TRUE(r.witness.contains("is_semistable"));
    auto j = report_to_json(membership_report(u, th, indec(cat, "2/3"), "2/3"));
    EXPECT_TRUE(j["in_W_U"].get<bool>());
    EXPECT_TRUE(j["is_semistable"].get<bool>());
    EXPECT_EQ(j["theta_value"], "0");
}

TEST(Stability, LocateCone) {
    const auto& cat = catalog("threecycle");
    const auto& q = cat.algebra->quiver();
    auto names = [&](const ConeLocation& l) {
        std::set<std::string> s;
        for (auto i : l.summands) s.insert(gvector_string(cat.g[i], q));
        return s;
    };
    auto a = locate_cone(cat, {R(-1), R(1), R(-1)});
    EXPECT_EQ(names(a), (std::set<std::string>{"P_2 - P_3", "-P_1"}));
    EXPECT_EQ(a.weights, (std::vector<R>{R(1), R(1)}));
    EXPECT_TRUE(locate_cone(cat, {R(0), R(0), R(0)}).summands.empty());
    EXPECT_EQ(names(locate_cone(cat, {R(1), R(1), R(1)})), (std::set<std::string>{"P_1", "P_2", "P_3"}));
    EXPECT_EQ(names(locate_cone(cat, {R(0), R(1), R(-1)})), (std::set<std::string>{"P_2 - P_3"}));
    EXPECT_THROW(locate_cone(cat, {R(1)}), QueryError);
}

TEST(Stability, SemistableSetIsWeightIndependentInsideACone) {
    const auto& cat = catalog("threecycle");
    for (const auto& f : cat.faces) {
        auto obj = cat.object(f);
        std::optional<std::set<std::string>> first;
        for (auto w : {R(1), R(2, 3), R(7)}) {
            std::vector<R> ws(f.size(), R(1));
            if (!ws.empty()) ws.back() = w;
            auto s = semistable_labels(cat, theta_from_presilting(obj, ws, cat.algebra));
            if (!first) first = s;
            EXPECT_EQ(s, *first);
        }
    }
}
