#include <gtest/gtest.h>

#include "support.hpp"

using namespace tilt;
using namespace testing_support;

namespace {

VerificationPlan plan_for(const std::string& name) {
    VerificationPlan p;
    p.algebra_file = fixture_path(name + ".json");
    return p;
}

const CheckResult& check(const Verdict& v, const std::string& name) {
    for (const auto& c : v.checks)
        if (c.name == name) return c;
    throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Verify, FullSuitePassesOnSmallAlgebras) {
    for (auto name : {"point", "a2"}) {
        auto v = run_suite(plan_for(name));
        EXPECT_TRUE(v.passed()) << v.to_json().dump(2);
        EXPECT_EQ(v.checks.size(), all_check_names().size());
        EXPECT_TRUE(check(v, "table").note.empty());  // golden was found and compared
    }
}

TEST(Verify, FullSuitePassesOnThreeCycle) {
    auto v = run_suite(plan_for("threecycle"));
    EXPECT_TRUE(v.passed()) << v.to_json().dump(2);
    EXPECT_EQ(v.indecomposables, 9u);
    EXPECT_EQ(v.presilting, 12u);
    EXPECT_EQ(v.silting, 20u);
    EXPECT_EQ(v.test_modules, 54u);
}

TEST(Verify, DeterministicJson) {
    auto p = plan_for("a2");
    p.seed = 42;
    EXPECT_EQ(run_suite(p).to_json().dump(), run_suite(p).to_json().dump());
    auto q = p;
    q.record_timing = true;
    EXPECT_TRUE(run_suite(q).to_json().contains("seconds"));
    EXPECT_FALSE(run_suite(p).to_json().contains("seconds"));
}

TEST(Verify, CorruptedGoldenReportsFirstDifferingRow) {
    auto p = plan_for("threecycle");
    p.golden = fixture_path("threecycle_corrupt.golden.json");
    p.checks = {"table"};
    auto v = run_suite(p);
    EXPECT_FALSE(v.passed());
    const auto& c = check(v, "table");
    EXPECT_FALSE(c.passed);
    EXPECT_EQ(c.counterexample["golden"]["summands"], (nlohmann::json{"P_1", "P_2", "P_2 - P_3"}));
}

TEST(Verify, MissingGoldenIsNotedNotFailed) {
    auto p = plan_for("a2");
    p.golden = fixture_path("nothing_here.golden.json");
    p.checks = {"table"};
    auto v = run_suite(p);
    EXPECT_TRUE(v.passed());
    EXPECT_FALSE(check(v, "table").note.empty());
}

TEST(Verify, UnknownCheckIsAQueryError) {
    auto p = plan_for("point");
    p.checks = {"lemma99"};
    EXPECT_THROW(run_suite(p), QueryError);
}

TEST(Verify, InconclusiveEnumerationPropagates) {
    auto p = plan_for("threecycle");
    p.dim_bound = 1;
    EXPECT_THROW(run_suite(p), InconclusiveError);
}

TEST(Verify, CheckThm14Examples) {
    const auto& cat = catalog("threecycle");
    auto mods = test_modules(cat, ModulePolicy::with_pairwise_sums);
    ASSERT_EQ(mods.size(), 54u);
    auto u = object(cat, {"P_2 - P_3", "-P_1"});
    std::set<std::string> ss;
    for (const auto& r : check_thm14(u, {Rational(1), Rational(1)}, mods, cat.algebra)) {
        EXPECT_EQ(r.in_W_U, r.semistable) << r.module_id;
        if (r.semistable) ss.insert(r.module_id);
    }
    EXPECT_EQ(ss, (std::set<std::string>{"2/3", "2/3 + 2/3"}));

    for (const auto& r : check_thm14(SiltingObject{}, {}, mods, cat.algebra)) {
        EXPECT_TRUE(r.in_W_U);
        EXPECT_TRUE(r.semistable);
    }
    auto shift = object(cat, {"-P_1", "-P_2", "-P_3"});
    for (const auto& r : check_thm14(shift, {Rational(1), Rational(2), Rational(3)}, mods, cat.algebra)) {
        EXPECT_FALSE(r.in_W_U);
        EXPECT_FALSE(r.semistable);
    }
}

TEST(Verify, TableRowsOfThreeCycle) {
    const auto& cat = catalog("threecycle");
    auto rows = table_rows(cat);
    ASSERT_EQ(rows.size(), 20u);
    for (const auto& r : rows) {
        if (r.summands == std::vector<std::string>{"P_1", "P_2", "P_3"}) {
            EXPECT_TRUE(r.rho.empty());
            EXPECT_EQ(r.wide.size(), 9u);
        }
        if (r.summands == std::vector<std::string>{"-P_1", "-P_2", "-P_3"}) EXPECT_TRUE(r.wide.empty());
        if (r.summands == std::vector<std::string>{"P_1", "P_2", "P_2 - P_3"})
            EXPECT_EQ(r.rho, std::vector<std::string>{"P_2 - P_3"});
    }
    EXPECT_EQ(default_golden_path("/x/threecycle.json"), std::filesystem::path("/x/threecycle.golden.json"));
}
