#pragma once

/**
 * @file verify.hpp
 * @brief Verification harness: replays the wide/semistable correspondence and
 *        its supporting identities over explicitly enumerated finite sets and
 *        produces a deterministic JSON verdict.
 *
 * Every check is a universally quantified statement over the catalog, seeded
 * weight draws, and the test modules. A failing check carries the violating
 * case with the smallest module dimension.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tilt/complex.hpp"
#include "tilt/decompose.hpp"
#include "tilt/silting.hpp"
#include "tilt/stability.hpp"

namespace tilt {

inline const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{"serre", "lemma31", "prop33", "thm14", "lemma34",
                                                "lemma35", "thm13", "table", "fan"};
    return names;
}

enum class ModulePolicy { indecomposables, with_pairwise_sums };

struct VerificationPlan {
    std::filesystem::path algebra_file;  ///< used by the file-based run_suite overload
    std::size_t dim_bound = 0;           ///< 0: default_dim_bound
    std::size_t weight_draws = 5;
    std::uint64_t seed = 1;
    ModulePolicy policy = ModulePolicy::with_pairwise_sums;
    std::set<std::string> checks;        ///< empty: all
    std::optional<std::filesystem::path> golden;
    std::size_t random_pairs = 100;      ///< extra seeded (complex, module) pairs for serre/lemma31
    std::size_t fan_samples = 1000;
    bool record_timing = false;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    nlohmann::json counterexample;  ///< null when passed
    std::string note;
};

struct Verdict {
    std::uint64_t seed = 0;
    std::size_t dim_bound = 0;
    std::size_t indecomposables = 0, presilting = 0, basic_presilting = 0, silting = 0, test_modules = 0;
    std::vector<CheckResult> checks;
    std::optional<double> seconds;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["seed"] = seed;
        j["dim_bound"] = dim_bound;
        j["catalog"] = {{"indecomposables", indecomposables},
                        {"indecomposable_presilting", presilting},
                        {"basic_presilting", basic_presilting},
                        {"silting", silting}};
        j["test_modules"] = test_modules;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json r{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
            if (!c.passed) r["counterexample"] = c.counterexample;
            if (!c.note.empty()) r["note"] = c.note;
            j["checks"].push_back(r);
        }
        j["passed"] = passed();
        if (seconds) j["seconds"] = *seconds;
        return j;
    }
};

// ---- test modules -----------------------------------------------------------

struct TestModule {
    std::string id;
    Module module;
};

/// Indecomposables sorted by dimension, then (optionally) every pairwise sum M ⊕ N with M <= N.
inline std::vector<TestModule> test_modules(const Catalog& cat, ModulePolicy policy) {
    std::vector<TestModule> base;
    for (const auto& m : cat.indecomposables) base.push_back({module_label(m), m});
    std::stable_sort(base.begin(), base.end(),
                     [](const TestModule& a, const TestModule& b) { return a.module.total_dim() < b.module.total_dim(); });
    std::vector<TestModule> out = base;
    if (policy == ModulePolicy::with_pairwise_sums)
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = i; j < base.size(); ++j)
                out.push_back({base[i].id + " + " + base[j].id, direct_sum(base[i].module, base[j].module)});
    std::stable_sort(out.begin(), out.end(),
                     [](const TestModule& a, const TestModule& b) { return a.module.total_dim() < b.module.total_dim(); });
    return out;
}

// ---- seeded draws -------------------------------------------------------------

namespace detail {

/// Uniform-ish integer in [lo, hi] from the raw engine output, so draws do not depend on the library's distributions.
inline long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational draw_positive(std::mt19937_64& rng) { return Rational(draw_int(rng, 1, 16), draw_int(rng, 1, 16)); }

inline std::vector<Rational> draw_weights(std::mt19937_64& rng, std::size_t k) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i < k; ++i) w.push_back(draw_positive(rng));
    return w;
}

inline nlohmann::json rationals_json(const std::vector<Rational>& v) { return theta_to_json(v); }

inline nlohmann::json face_json(const Catalog& cat, const std::vector<std::size_t>& face) {
    nlohmann::json out = nlohmann::json::array();
    for (auto i : face) out.push_back(gvector_string(cat.g[i], cat.algebra->quiver()));
    return out;
}

/// Keeps the violation on the smallest module.
struct Violation {
    std::optional<std::size_t> dim;
    nlohmann::json payload;
    std::size_t count = 0;

    void offer(std::size_t d, nlohmann::json j) {
        ++count;
        if (!dim || d < *dim) {
            dim = d;
            payload = std::move(j);
        }
    }
    void close(CheckResult& r) const {
        if (count == 0) return;
        r.passed = false;
        r.counterexample = payload;
        r.counterexample["violations"] = count;
    }
};

/// Rank over Q of integer vectors.
inline std::size_t rational_rank(const std::vector<GVector>& vs) {
    if (vs.empty()) return 0;
    std::vector<std::vector<Rational>> a;
    for (const auto& v : vs) a.emplace_back(v.begin(), v.end());
    std::size_t r = 0;
    const std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t sel = r;
        while (sel < a.size() && a[sel][c] == Rational(0)) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[r]);
        for (std::size_t k = 0; k < a.size(); ++k)
            if (k != r && a[k][c] != Rational(0)) {
                Rational f = a[k][c] / a[r][c];
                for (std::size_t cc = 0; cc < cols; ++cc) a[k][cc] -= f * a[r][cc];
            }
        ++r;
    }
    return r;
}

}  // namespace detail

// ---- per-(U, M) data ----------------------------------------------------------

/// Everything about one presilting U that does not depend on the weights.
struct PresiltingData {
    std::vector<std::size_t> face;
    TwoTermComplex total;
    Module h0;
    Module hminus1_nu;
};

struct Membership {
    bool t_plus = false, t_minus = false, f_plus = false, f_minus = false;
    bool w_u() const { return t_plus && f_minus; }
};

inline PresiltingData presilting_data(const Catalog& cat, const std::vector<std::size_t>& face) {
    auto total = total_complex(cat.object(face), cat.algebra);
    return {face, total, H0(total), Hminus1_nu(total)};
}

/// Membership through the raw definitions; cross-route disagreements surface as std::logic_error.
inline Membership membership(const PresiltingData& u, const Module& m) {
    Membership r;
    r.t_plus = in_T_plus(u.total, m);
    r.f_minus = in_F_minus(u.total, m);
    r.t_minus = fac_membership(u.h0, m);
    r.f_plus = sub_membership(u.hminus1_nu, m);
    return r;
}

// ---- W_U against semistability for one U ------------------------------------

struct EquivalenceRecord {
    std::string module_id;
    bool in_W_U = false;
    bool semistable = false;
    std::optional<DimVector> witness;
};

/// in_W_U(U, M) against is_semistable(θ_U, M) for each module.
inline std::vector<EquivalenceRecord> check_thm14(const SiltingObject& u, const std::vector<Rational>& weights,
                                                  const std::vector<TestModule>& modules, const AlgebraPtr& alg) {
    auto theta = theta_from_presilting(u, weights, alg);
    auto total = total_complex(u, alg);
    std::vector<EquivalenceRecord> out;
    for (const auto& tm : modules) {
        auto ss = is_semistable(theta, tm.module);
        out.push_back({tm.id, in_W_U(total, tm.module), ss.semistable, ss.violating_submodule});
    }
    return out;
}

// ---- Table rows -------------------------------------------------------------------

struct TableRow {
    std::vector<std::string> summands;  ///< g-vector strings, sorted
    std::vector<std::string> rho;
    std::vector<std::string> stau;      ///< labels of the indecomposable summands of H^0(T)
    std::vector<std::string> stau_rho;  ///< those coming from T_ρ
    std::vector<std::string> torsion;   ///< indecomposables in Fac H^0(T)
    std::vector<std::string> wide;      ///< indecomposables in W^T

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline nlohmann::json row_to_json(const TableRow& r) {
    return {{"summands", r.summands}, {"rho", r.rho},         {"stau", r.stau},
            {"stau_rho", r.stau_rho}, {"torsion", r.torsion}, {"wide", r.wide}};
}

inline TableRow table_row(const Catalog& cat, const std::vector<std::size_t>& s, const SiltingDecomposition& dec) {
    const auto& q = cat.algebra->quiver();
    TableRow row;
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto g = gvector_string(cat.g[s[k]], q);
        row.summands.push_back(g);
        const bool in_rho = dec.t_double_prime[k] > 0;
        if (in_rho) row.rho.push_back(g);
        if (!cat.h0[s[k]].is_zero()) {
            row.stau.push_back(module_label(cat.h0[s[k]]));
            if (in_rho) row.stau_rho.push_back(module_label(cat.h0[s[k]]));
        }
    }
    auto obj = cat.object(s);
    Module h0 = H0(total_complex(obj, cat.algebra));
    for (const auto& m : cat.indecomposables) {
        if (fac_membership(h0, m)) row.torsion.push_back(module_label(m));
        if (in_W_T(obj, dec, m, cat.algebra)) row.wide.push_back(module_label(m));
    }
    for (auto* v : {&row.summands, &row.rho, &row.stau, &row.stau_rho, &row.torsion, &row.wide})
        std::sort(v->begin(), v->end());
    return row;
}

inline std::vector<TableRow> table_rows(const Catalog& cat) {
    std::vector<TableRow> rows;
    for (const auto& s : cat.silting) rows.push_back(table_row(cat, s, silting_decompose(cat.object(s), cat.algebra)));
    return rows;
}

/// Golden rows; g-vector strings are normalised through the parser so any spacing is accepted.
inline std::vector<TableRow> load_golden(const std::filesystem::path& file, const Quiver& q) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open golden file " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("golden file " + file.string() + ": " + e.what());
    }
    auto norm = [&](const nlohmann::json& arr) {
        std::vector<std::string> out;
        for (const auto& s : arr) out.push_back(gvector_string(parse_gvector(s.get<std::string>(), q), q));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto labels = [](const nlohmann::json& arr) {
        auto out = arr.get<std::vector<std::string>>();
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<TableRow> rows;
    try {
        for (const auto& r : j.at("rows"))
            rows.push_back({norm(r.at("summands")), norm(r.at("rho")), labels(r.at("stau")), labels(r.at("stau_rho")),
                            labels(r.at("torsion")), labels(r.at("wide"))});
    } catch (const nlohmann::json::exception& e) {
        throw InputError("golden file " + file.string() + ": " + e.what());
    }
    return rows;
}

/// First differing row between computed and golden tables (as multisets), or nullopt.
inline std::optional<nlohmann::json> compare_table(std::vector<TableRow> computed, std::vector<TableRow> golden) {
    auto by_summands = [](const TableRow& a, const TableRow& b) { return a.summands < b.summands; };
    std::sort(computed.begin(), computed.end(), by_summands);
    std::sort(golden.begin(), golden.end(), by_summands);
    std::size_t i = 0, k = 0;
    while (i < computed.size() || k < golden.size()) {
        if (k == golden.size() || (i < computed.size() && computed[i].summands < golden[k].summands))
            return nlohmann::json{{"row", i}, {"computed", row_to_json(computed[i])}, {"golden", nullptr}};
        if (i == computed.size() || golden[k].summands < computed[i].summands)
            return nlohmann::json{{"row", i}, {"computed", nullptr}, {"golden", row_to_json(golden[k])}};
        if (!(computed[i] == golden[k]))
            return nlohmann::json{{"row", i}, {"computed", row_to_json(computed[i])}, {"golden", row_to_json(golden[k])}};
        ++i;
        ++k;
    }
    return std::nullopt;
}

/// name.json -> name.golden.json next to it.
inline std::filesystem::path default_golden_path(const std::filesystem::path& algebra_file) {
    auto p = algebra_file;
    p.replace_extension(".golden.json");
    return p;
}

// ---- the suite -----------------------------------------------------------------------

namespace detail {

class Suite {
public:
    Suite(const Catalog& cat, const VerificationPlan& plan)
        : cat_(cat), plan_(plan), alg_(cat.algebra), modules_(test_modules(cat, plan.policy)) {}

    const std::vector<TestModule>& modules() const { return modules_; }

    CheckResult run(const std::string& name) {
        CheckResult r;
        r.name = name;
        try {
            if (name == "serre") serre(r);
            else if (name == "lemma31") lemma31(r);
            else if (name == "prop33") prop33(r);
            else if (name == "thm14") thm14(r);
            else if (name == "lemma34") lemma34(r);
            else if (name == "lemma35") lemma35(r);
            else if (name == "thm13") thm13(r);
            else if (name == "table") table(r);
            else if (name == "fan") fan(r);
            else throw QueryError("unknown check '" + name + "'");
        } catch (const std::logic_error& e) {
            // internal cross-checks (two routes disagreeing) are failures of the check, not crashes
            r.passed = false;
            r.counterexample = {{"internal", e.what()}};
        }
        return r;
    }

private:
    const Catalog& cat_;
    const VerificationPlan& plan_;
    AlgebraPtr alg_;
    std::vector<TestModule> modules_;
    std::map<std::size_t, std::set<DimVector>> subdims_;
    std::vector<PresiltingData> faces_;
    std::vector<std::vector<Membership>> member_;  // [face][module]
    std::vector<std::vector<std::vector<Rational>>> weights_;  // [face][draw]

    std::mt19937_64 rng(std::uint64_t salt) const { return std::mt19937_64(plan_.seed * 0x9E3779B97F4A7C15ULL + salt); }

    const std::set<DimVector>& subdims(std::size_t k) {
        auto it = subdims_.find(k);
        if (it == subdims_.end()) it = subdims_.emplace(k, submodule_dim_vectors(modules_[k].module)).first;
        return it->second;
    }

    void prepare_faces() {
        if (!faces_.empty()) return;
        auto gen = rng(1);
        for (const auto& f : cat_.faces) {
            faces_.push_back(presilting_data(cat_, f));
            std::vector<Membership> row;
            for (const auto& tm : modules_) row.push_back(membership(faces_.back(), tm.module));
            member_.push_back(std::move(row));
            std::vector<std::vector<Rational>> ws;
            for (std::size_t d = 0; d < plan_.weight_draws; ++d) ws.push_back(draw_weights(gen, f.size()));
            weights_.push_back(std::move(ws));
        }
    }

    StabilityForm theta_for(std::size_t fi, std::size_t draw) const {
        return theta_from_presilting(cat_.object(faces_[fi].face), weights_[fi][draw], alg_);
    }

    nlohmann::json case_json(std::size_t fi, std::optional<std::size_t> draw, std::size_t k) const {
        nlohmann::json j{{"U", face_json(cat_, faces_[fi].face)}, {"module", modules_[k].id},
                         {"module_json", module_to_json(modules_[k].module)}};
        if (draw) {
            j["weights"] = rationals_json(weights_[fi][*draw]);
            j["theta"] = rationals_json(theta_for(fi, *draw).coeffs);
        }
        return j;
    }

    /// Catalog complexes plus seeded random sums of them, each paired with modules.
    template <class F>
    void for_complex_module_pairs(CheckResult& r, F&& body) {
        std::vector<std::pair<TwoTermComplex, std::string>> complexes;
        for (std::size_t i = 0; i < cat_.presilting.size(); ++i)
            complexes.push_back({cat_.presilting[i], gvector_string(cat_.g[i], alg_->quiver())});
        for (std::size_t a = 0; a < complexes.size(); ++a)
            for (std::size_t k = 0; k < modules_.size(); ++k) {
                ++r.cases;
                body(complexes[a].first, complexes[a].second, k);
            }
        auto gen = rng(2);
        for (std::size_t t = 0; t < plan_.random_pairs; ++t) {
            std::size_t parts = static_cast<std::size_t>(draw_int(gen, 1, 3));
            std::vector<TwoTermComplex> chosen;
            std::string id;
            for (std::size_t s = 0; s < parts; ++s) {
                auto i = static_cast<std::size_t>(draw_int(gen, 0, static_cast<long long>(cat_.presilting.size()) - 1));
                chosen.push_back(cat_.presilting[i]);
                id += (id.empty() ? "" : " (+) ") + gvector_string(cat_.g[i], alg_->quiver());
            }
            auto k = static_cast<std::size_t>(draw_int(gen, 0, static_cast<long long>(modules_.size()) - 1));
            ++r.cases;
            body(direct_sum(chosen, alg_), id, k);
        }
    }

    void serre(CheckResult& r) {
        Violation v;
        for_complex_module_pairs(r, [&](const TwoTermComplex& p, const std::string& id, std::size_t k) {
            const Module& m = modules_[k].module;
            auto from = derived_hom_from(p, m);
            auto to = derived_hom_to_nu(m, p);
            if (from.degree0 != to.degree0 || from.degree1 != to.degree_minus1)
                v.offer(m.total_dim(), {{"P", id}, {"module", modules_[k].id},
                                        {"Hom_D(P,M)", from.degree0}, {"Hom_D(M,nuP)", to.degree0},
                                        {"Hom_D(P,M[1])", from.degree1}, {"Hom_D(M,nuP[-1])", to.degree_minus1}});
        });
        v.close(r);
    }

    void lemma31(CheckResult& r) {
        Violation v;
        for_complex_module_pairs(r, [&](const TwoTermComplex& p, const std::string& id, std::size_t k) {
            const Module& m = modules_[k].module;
            long long eg = euler_form_gvector(p, m);
            long long eh = euler_form_hom(p, m);
            long long via_h0 = static_cast<long long>(hom_dim(H0(p), m)) -
                               static_cast<long long>(derived_hom_from(p, m).degree1);
            long long via_nu = static_cast<long long>(derived_hom_to_nu(m, p).degree0) -
                               static_cast<long long>(hom_dim(m, Hminus1_nu(p)));
            if (eg != eh || eg != via_h0 || eg != via_nu)
                v.offer(m.total_dim(), {{"P", id}, {"module", modules_[k].id}, {"g_dot_dim", eg},
                                        {"hom_difference", eh}, {"hom_H0_minus_ext", via_h0}, {"hom_nu_minus_hom_Hminus1_nu", via_nu}});
        });
        const std::size_t n = alg_->num_vertices();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ++r.cases;
                auto e = euler_form_hom(TwoTermComplex::stalk(alg_, {i}), simple_module(alg_, j));
                if (e != (i == j ? 1 : 0))
                    v.offer(1, {{"P", "P_" + alg_->quiver().vertices[i]}, {"module", "S_" + alg_->quiver().vertices[j]},
                                {"pairing", e}});
            }
        v.close(r);
    }

    void prop33(CheckResult& r) {
        prepare_faces();
        Violation v;
        for (std::size_t fi = 0; fi < faces_.size(); ++fi)
            for (std::size_t d = 0; d < plan_.weight_draws; ++d) {
                auto theta = theta_for(fi, d);
                for (std::size_t k = 0; k < modules_.size(); ++k) {
                    ++r.cases;
                    const auto& mb = member_[fi][k];
                    const Module& m = modules_[k].module;
                    Rational t = theta_value(theta, m.dims());
                    const bool nz = !m.is_zero();
                    std::vector<std::string> broken;
                    if (mb.t_plus && t < Rational(0)) broken.push_back("T+ => theta >= 0");
                    if (nz && mb.t_minus && t <= Rational(0)) broken.push_back("T- => theta > 0");
                    if (mb.f_minus && t > Rational(0)) broken.push_back("F- => theta <= 0");
                    if (nz && mb.f_plus && t >= Rational(0)) broken.push_back("F+ => theta < 0");
                    if (mb.t_minus && !mb.t_plus) broken.push_back("T- subset of T+");
                    if (mb.f_plus && !mb.f_minus) broken.push_back("F+ subset of F-");
                    if (!broken.empty()) {
                        auto j = case_json(fi, d, k);
                        j["broken"] = broken;
                        j["theta_of_module"] = rational_string(t);
                        v.offer(m.total_dim(), j);
                    }
                }
            }
        v.close(r);
    }

    void thm14(CheckResult& r) {
        prepare_faces();
        Violation v;
        for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
            std::optional<std::vector<bool>> first_draw;
            for (std::size_t d = 0; d < plan_.weight_draws; ++d) {
                auto theta = theta_for(fi, d);
                std::vector<bool> ss_set;
                for (std::size_t k = 0; k < modules_.size(); ++k) {
                    ++r.cases;
                    auto ss = semistability_from_subdims(theta, modules_[k].module.dims(), subdims(k));
                    ss_set.push_back(ss.semistable);
                    if (ss.semistable != member_[fi][k].w_u()) {
                        auto j = case_json(fi, d, k);
                        j["in_W_U"] = member_[fi][k].w_u();
                        j["is_semistable"] = ss.semistable;
                        if (ss.violating_submodule) j["violating_submodule"] = *ss.violating_submodule;
                        v.offer(modules_[k].module.total_dim(), j);
                    }
                }
                if (!first_draw) {
                    first_draw = ss_set;
                } else if (*first_draw != ss_set) {
                    for (std::size_t k = 0; k < modules_.size(); ++k)
                        if ((*first_draw)[k] != ss_set[k]) {
                            auto j = case_json(fi, d, k);
                            j["weight_dependent"] = true;
                            v.offer(modules_[k].module.total_dim(), j);
                            break;
                        }
                }
            }
        }
        v.close(r);
    }

    struct SiltingParts {
        std::vector<std::size_t> face;
        SiltingDecomposition dec;
        PresiltingData whole, lambda, rho;
    };

    std::vector<SiltingParts> silting_parts() const {
        std::vector<SiltingParts> out;
        for (const auto& s : cat_.silting) {
            auto dec = silting_decompose(cat_.object(s), alg_);
            std::vector<std::size_t> l, rh;
            for (auto k : dec.lambda) l.push_back(s[k]);
            for (auto k : dec.rho) rh.push_back(s[k]);
            out.push_back({s, dec, presilting_data(cat_, s), presilting_data(cat_, l), presilting_data(cat_, rh)});
        }
        return out;
    }

    void lemma34(CheckResult& r) {
        Violation v;
        for (const auto& sp : silting_parts()) {
            ++r.cases;
            if (!fac_membership(sp.lambda.h0, sp.rho.h0))
                v.offer(sp.rho.h0.total_dim(), {{"T", face_json(cat_, sp.face)}, {"H0(T_rho)", module_label(sp.rho.h0)},
                                                {"broken", "H0(T_rho) in Fac H0(T_lambda)"}});
            for (std::size_t k = 0; k < modules_.size(); ++k) {
                ++r.cases;
                const Module& m = modules_[k].module;
                auto whole = membership(sp.whole, m);
                bool fac_lambda = fac_membership(sp.lambda.h0, m);
                bool perp_rho = hom_dim(m, sp.rho.hminus1_nu) == 0;
                bool lambda_perp = hom_dim(sp.lambda.h0, m) == 0;
                bool sub_rho = sub_membership(sp.rho.hminus1_nu, m);
                bool a = whole.t_plus == whole.t_minus && whole.t_minus == fac_lambda && fac_lambda == perp_rho;
                bool b = whole.f_plus == whole.f_minus && whole.f_minus == lambda_perp && lambda_perp == sub_rho;
                if (!a || !b)
                    v.offer(m.total_dim(),
                            {{"T", face_json(cat_, sp.face)}, {"module", modules_[k].id},
                             {"T_plus", whole.t_plus}, {"T_minus", whole.t_minus}, {"Fac_H0_lambda", fac_lambda},
                             {"perp_Hm1_nu_rho", perp_rho}, {"F_plus", whole.f_plus}, {"F_minus", whole.f_minus},
                             {"H0_lambda_perp", lambda_perp}, {"Sub_Hm1_nu_rho", sub_rho}});
            }
        }
        v.close(r);
    }

    void lemma35(CheckResult& r) {
        Violation v;
        for (const auto& sp : silting_parts())
            for (std::size_t k = 0; k < modules_.size(); ++k) {
                ++r.cases;
                const Module& m = modules_[k].module;
                bool wt = in_W_T(cat_.object(sp.face), sp.dec, m, alg_);
                bool wu = membership(sp.rho, m).w_u();
                if (wt != wu)
                    v.offer(m.total_dim(), {{"T", face_json(cat_, sp.face)}, {"T_rho", face_json(cat_, sp.rho.face)},
                                            {"module", modules_[k].id}, {"in_W_T", wt}, {"in_W_T_rho", wu}});
            }
        v.close(r);
    }

    void thm13(CheckResult& r) {
        Violation v;
        auto gen = rng(3);
        for (const auto& sp : silting_parts()) {
            auto rho = cat_.object(sp.rho.face);
            for (std::size_t d = 0; d < plan_.weight_draws; ++d) {
                auto w = draw_weights(gen, sp.rho.face.size());
                auto theta = theta_from_presilting(rho, w, alg_);
                for (std::size_t k = 0; k < modules_.size(); ++k) {
                    ++r.cases;
                    const Module& m = modules_[k].module;
                    bool wt = in_W_T(cat_.object(sp.face), sp.dec, m, alg_);
                    auto ss = semistability_from_subdims(theta, m.dims(), subdims(k));
                    if (wt != ss.semistable)
                        v.offer(m.total_dim(), {{"T", face_json(cat_, sp.face)}, {"T_rho", face_json(cat_, sp.rho.face)},
                                                {"weights", rationals_json(w)}, {"theta", rationals_json(theta.coeffs)},
                                                {"module", modules_[k].id}, {"in_W_T", wt},
                                                {"is_semistable", ss.semistable}});
                }
            }
        }
        v.close(r);
    }

    void table(CheckResult& r) {
        auto rows = table_rows(cat_);
        r.cases = rows.size();
        if (!plan_.golden) {
            r.note = "no golden file; rows computed but not compared";
            return;
        }
        if (!std::filesystem::exists(*plan_.golden)) {
            r.note = "golden file " + plan_.golden->string() + " not found; rows computed but not compared";
            return;
        }
        auto diff = compare_table(rows, load_golden(*plan_.golden, alg_->quiver()));
        if (diff) {
            r.passed = false;
            r.counterexample = *diff;
        }
    }

    void fan(CheckResult& r) {
        Violation v;
        const std::size_t n = alg_->num_vertices();
        for (const auto& s : cat_.silting) {
            ++r.cases;
            std::vector<GVector> gs;
            for (auto i : s) gs.push_back(cat_.g[i]);
            if (rational_rank(gs) != n) v.offer(0, {{"T", face_json(cat_, s)}, {"broken", "g-vectors not a basis"}});
        }
        ++r.cases;
        if (auto defect = fan_closure_defect(cat_)) v.offer(0, {{"broken", *defect}});

        auto gen = rng(4);
        for (std::size_t t = 0; t < plan_.fan_samples; ++t) {
            std::vector<Rational> theta;
            for (std::size_t i = 0; i < n; ++i) theta.push_back(Rational(draw_int(gen, -16, 16), draw_int(gen, 1, 16)));
            ++r.cases;
            try {
                locate_cone(cat_, theta);
            } catch (const InconclusiveError& e) {
                v.offer(0, {{"theta", rationals_json(theta)}, {"broken", e.what()}});
            }
        }
        for (const auto& f : cat_.faces) {
            ++r.cases;
            std::vector<Rational> unit(f.size(), Rational(1));
            auto theta = theta_from_presilting(cat_.object(f), unit, alg_);
            try {
                auto loc = locate_cone(cat_, theta.coeffs);
                if (loc.summands != f || loc.weights != unit)
                    v.offer(0, {{"U", face_json(cat_, f)}, {"located", face_json(cat_, loc.summands)},
                                {"weights", rationals_json(loc.weights)}, {"broken", "round trip"}});
            } catch (const InconclusiveError& e) {
                v.offer(0, {{"U", face_json(cat_, f)}, {"broken", e.what()}});
            }
        }
        v.close(r);
    }
};

}  // namespace detail

/// Runs the requested checks on a prepared catalog.
inline Verdict run_suite(const Catalog& cat, const VerificationPlan& plan) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> names;
    for (const auto& c : plan.checks)
        if (std::find(all_check_names().begin(), all_check_names().end(), c) == all_check_names().end())
            throw QueryError("unknown check '" + c + "'");
    for (const auto& c : all_check_names())
        if (plan.checks.empty() || plan.checks.count(c)) names.push_back(c);

    detail::Suite suite(cat, plan);
    Verdict v;
    v.seed = plan.seed;
    v.dim_bound = cat.dim_bound;
    v.indecomposables = cat.indecomposables.size();
    v.presilting = cat.presilting.size();
    v.basic_presilting = cat.faces.size();
    v.silting = cat.silting.size();
    v.test_modules = suite.modules().size();
    for (const auto& name : names) v.checks.push_back(suite.run(name));
    if (plan.record_timing)
        v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

/// Loads plan.algebra_file, builds the catalog (InconclusiveError propagates) and runs the suite.
inline Verdict run_suite(const VerificationPlan& plan) {
    auto alg = Algebra::build(load_algebra(plan.algebra_file));
    auto bound = plan.dim_bound ? plan.dim_bound : default_dim_bound(alg);
    auto cat = build_catalog(alg, bound);
    VerificationPlan p = plan;
    if (!p.golden) p.golden = default_golden_path(plan.algebra_file);
    return run_suite(cat, p);
}

}  // namespace tilt
