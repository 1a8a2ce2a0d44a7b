// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "tilt/tilt.hpp"

using namespace tilt;
using R = Rational;
using Clock = std::chrono::steady_clock;

namespace {

std::string fixture(const std::string& name) { return std::string(TILT_FIXTURE_DIR) + "/" + name; }

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

const Module& indec(const Catalog& cat, const std::string& label) {
    for (const auto& m : cat.indecomposables)
        if (module_label(m) == label) return m;
    throw std::runtime_error("no indecomposable " + label);
}

SiltingObject object(const Catalog& cat, const std::vector<std::string>& gs) {
    std::vector<std::size_t> idx;
    for (const auto& g : gs) idx.push_back(*cat.find_gvector(parse_gvector(g, cat.algebra->quiver())));
    return cat.object(idx);
}

using RowKey = std::pair<std::vector<std::string>, std::vector<std::string>>;

void criterion1(const Quiver& q) {
    auto t0 = Clock::now();
    int status = 0;
    auto out = run_capture(std::string(TILT_CLI_PATH) + " --algebra " + fixture("threecycle.json") + " silt --format json",
                           status);
    double secs = since(t0);
    if (status != 0) return report(1, false, "table reproduction", "silt exited with status " + std::to_string(status));
    auto j = nlohmann::json::parse(out);
    std::multiset<RowKey> computed, expected;
    for (const auto& row : j) {
        RowKey k;
        for (std::size_t i = 0; i < row["names"].size(); ++i) {
            auto name = row["names"][i].get<std::string>();
            k.first.push_back(name);
            if (row["rho_flags"][i].get<bool>()) k.second.push_back(name);
        }
        std::sort(k.first.begin(), k.first.end());
        std::sort(k.second.begin(), k.second.end());
        computed.insert(k);
    }
    for (const auto& row : load_golden(fixture("threecycle.golden.json"), q)) expected.insert({row.summands, row.rho});
    bool ok = j.size() == 20 && computed == expected && secs < 60.0;
    report(1, ok, "20 silting complexes with matching g-vectors and T_rho marks",
           std::to_string(j.size()) + " rows, " + std::to_string(secs) + " s");
}

void criterion2(const Catalog& cat) {
    auto u = object(cat, {"P_2 - P_3", "-P_1"});
    bool ok = true;
    for (auto [a1, a2] : {std::pair{R(1), R(1)}, std::pair{R(1), R(2)}}) {
        auto th = theta_from_presilting(u, {a1, a2}, cat.algebra);
        std::map<std::string, R> expect{{"1/2/3", -a2},     {"2/3/1", -a2}, {"3/1/2", -a2}, {"3/1", -a1 - a2}, {"2/3", R(0)},
                                        {"1/2", a1 - a2}, {"1", -a2},     {"3", -a1},     {"2", a1}};
        for (const auto& [label, v] : expect)
            if (theta_value(th, indec(cat, label).dims()) != v) ok = false;
    }
    report(2, ok, "theta values of the worked example", "");
}

void criterion3(const Catalog& cat, const std::vector<TestModule>& mods) {
    std::mt19937_64 rng(20261016);
    std::size_t cases = 0, mismatches = 0;
    for (const auto& f : cat.faces)
        for (int d = 0; d < 5; ++d) {
            std::vector<R> w;
            for (std::size_t k = 0; k < f.size(); ++k)
                w.emplace_back(static_cast<long long>(rng() % 16 + 1), static_cast<long long>(rng() % 16 + 1));
            for (const auto& r : check_thm14(cat.object(f), w, mods, cat.algebra)) {
                ++cases;
                if (r.in_W_U != r.semistable) ++mismatches;
            }
        }
    report(3, mismatches == 0 && cat.faces.size() == 63 && mods.size() == 54, "W_U equals theta_U-semistable",
           std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches");
}

void criterion4(const Catalog& cat) {
    bool ok = true;
    for (const auto& s : cat.silting) {
        auto t = cat.object(s);
        auto dec = silting_decompose(t, cat.algebra);
        SiltingObject rho;
        for (auto k : dec.rho) rho.summands.push_back(t.summands[k]);
        auto th = theta_from_presilting(rho, std::vector<R>(dec.rho.size(), R(1)), cat.algebra);
        auto rho_total = total_complex(rho, cat.algebra);
        for (const auto& m : cat.indecomposables) {
            bool a = in_W_T(t, dec, m, cat.algebra), b = in_W_U(rho_total, m), c = is_semistable(th, m).semistable;
            if (a != b || b != c) ok = false;
        }
    }
    const auto& q = cat.algebra->quiver();
    std::vector<std::string> names{"P_2 - P_3", "-P_1", "P_2 - P_1"};
    auto t = object(cat, names);
    std::set<std::string> wide;
    for (const auto& m : cat.indecomposables)
        if (in_W_T(t, m, cat.algebra)) wide.insert(module_label(m));
    auto dec = silting_decompose(t, cat.algebra);
    std::multiset<std::string> tp, tpp;
    for (std::size_t k = 0; k < names.size(); ++k) {
        auto name = gvector_string(cat.g[*cat.find_gvector(parse_gvector(names[k], q))], q);
        for (std::size_t r = 0; r < dec.t_prime[k]; ++r) tp.insert(name);
        for (std::size_t r = 0; r < dec.t_double_prime[k]; ++r) tpp.insert(name);
    }
    bool example = wide == std::set<std::string>{"2/3"} && tp == std::multiset<std::string>{"P_2 - P_1", "P_2 - P_1"} &&
                   tpp == std::multiset<std::string>{"P_2 - P_3", "-P_1", "-P_1", "-P_1"};
    report(4, ok && example, "W^T, W_{T_rho} and semistable sets agree; worked triangle",
           std::to_string(cat.silting.size()) + " silting objects");
}

CheckResult run_one(const std::string& file, const std::string& check) {
    VerificationPlan p;
    p.algebra_file = fixture(file);
    p.checks = {check};
    return run_suite(p).checks.at(0);
}

void criterion5() {
    auto c = run_one("threecycle.json", "prop33");
    report(5, c.passed, "sign implications", std::to_string(c.cases) + " cases");
}

void criterion6(const Catalog& cat) {
    auto s = run_one("threecycle.json", "serre");
    auto l = run_one("threecycle.json", "lemma31");
    bool delta = true;
    const auto n = cat.algebra->num_vertices();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (euler_form(TwoTermComplex::stalk(cat.algebra, {i}), simple_module(cat.algebra, j)) != (i == j ? 1 : 0))
                delta = false;
    report(6, s.passed && l.passed && delta && s.cases >= 100 && l.cases >= 100, "Serre duality and euler form identities",
           std::to_string(s.cases) + " + " + std::to_string(l.cases) + " cases");
}

void criterion7() {
    auto t0 = Clock::now();
    auto c = run_one("threecycle.json", "fan");
    double secs = since(t0);
    report(7, c.passed && c.cases >= 1000 && secs < 120.0, "fan partition and cone round trip",
           std::to_string(c.cases) + " cases, " + std::to_string(secs) + " s");
}

void criterion8() {
    std::string detail;
    bool ok = true;
    for (auto name : {"point", "a2"}) {
        VerificationPlan p;
        p.algebra_file = fixture(std::string(name) + ".json");
        auto v = run_suite(p);
        ok = ok && v.passed() && v.checks.size() == all_check_names().size();
        detail += std::string(detail.empty() ? "" : ", ") + name + (v.passed() ? " ok" : " failed");
    }
    report(8, ok, "full suite on other algebras", detail);
}

}  // namespace

int main() {
    try {
        auto alg = Algebra::build(load_algebra(fixture("threecycle.json")));
        auto cat = build_catalog(alg, default_dim_bound(alg));
        auto mods = test_modules(cat, ModulePolicy::with_pairwise_sums);
        criterion1(alg->quiver());
        criterion2(cat);
        criterion3(cat, mods);
        criterion4(cat);
        criterion5();
        criterion6(cat);
        criterion7();
        criterion8();
    } catch (const std::exception& e) {
        std::cout << "FAIL acceptance run aborted: " << e.what() << std::endl;
        return 2;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
