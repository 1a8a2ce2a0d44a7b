// tilt_cli: command-line driver for the two-term silting / stability library.
//
// Exit codes: 0 ok, 1 verification failed, 2 input error, 3 inconclusive or
// limit exceeded, 4 bad query.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tilt/tilt.hpp"

using nlohmann::json;
using namespace tilt;

namespace {

struct Globals {
    std::string algebra;
    std::uint64_t seed = 1;
    std::size_t dim_bound = 0;
    std::string format = "text";
};

struct Context {
    AlgebraPtr alg;
    std::size_t bound = 0;

    explicit Context(const Globals& g) {
        alg = Algebra::build(load_algebra(g.algebra));
        bound = g.dim_bound ? g.dim_bound : default_dim_bound(alg);
    }
    const Quiver& quiver() const { return alg->quiver(); }
};

std::string dims_string(const DimVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string rationals_string(const std::vector<Rational>& v) {
    std::vector<std::string> parts;
    for (const auto& r : v) parts.push_back(rational_string(r));
    return join(parts, ",");
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

/// "P_2 - P_3; -P_1" -> catalog indices; "" or "0" is the zero complex.
std::vector<std::size_t> parse_presilting(const Catalog& cat, const std::string& spec) {
    std::vector<std::size_t> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto g = parse_gvector(item, cat.algebra->quiver());
        if (std::all_of(g.begin(), g.end(), [](long long x) { return x == 0; })) continue;
        auto idx = cat.find_gvector(g);
        if (!idx) throw QueryError("'" + item + "' is not an indecomposable presilting complex of this algebra");
        if (std::find(out.begin(), out.end(), *idx) != out.end()) throw QueryError("repeated summand '" + item + "'");
        out.push_back(*idx);
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (!cat.compatible[out[a]][out[b]]) throw QueryError("summands are not compatible: not presilting");
    return out;
}

json face_names(const Catalog& cat, const std::vector<std::size_t>& face) {
    json out = json::array();
    for (auto i : face) out.push_back(gvector_string(cat.g[i], cat.algebra->quiver()));
    return out;
}

std::vector<std::string> face_strings(const Catalog& cat, const std::vector<std::size_t>& face) {
    return face_names(cat, face).get<std::vector<std::string>>();
}

// ---- commands ----------------------------------------------------------------

int cmd_inspect(const Globals& g) {
    Context ctx(g);
    const auto& alg = *ctx.alg;
    const auto& q = ctx.quiver();
    json j;
    j["characteristic"] = alg.modulus();
    j["vertices"] = q.vertices;
    j["arrows"] = json::array();
    for (const auto& a : q.arrows) j["arrows"].push_back({{"name", a.name}, {"from", q.vertices[a.source]}, {"to", q.vertices[a.target]}});
    j["dimension"] = alg.dim();
    j["basis"] = json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k) j["basis"].push_back(alg.element_name(alg.basis_element(k)));
    j["default_dim_bound"] = default_dim_bound(ctx.alg);
    j["standard_modules"] = json::array();
    std::ostringstream t;
    t << "field F_" << alg.modulus() << ", " << q.num_vertices() << " vertices, " << q.arrows.size()
      << " arrows, dim " << alg.dim() << "\n";
    for (std::size_t i = 0; i < q.num_vertices(); ++i) {
        auto p = standard_module(ctx.alg, StandardKind::projective, i);
        auto in = standard_module(ctx.alg, StandardKind::injective, i);
        j["standard_modules"].push_back({{"vertex", q.vertices[i]},
                                         {"projective", {{"dims", p.dims()}, {"label", module_label(p)}}},
                                         {"injective", {{"dims", in.dims()}, {"label", module_label(in)}}}});
        t << "  P_" << q.vertices[i] << " = " << module_label(p) << " " << dims_string(p.dims()) << "   I_"
          << q.vertices[i] << " = " << module_label(in) << " " << dims_string(in.dims()) << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_indecs(const Globals& g) {
    Context ctx(g);
    auto mods = enumerate_indecomposables(ctx.alg, ctx.bound);
    json j = json::array();
    std::ostringstream t;
    for (const auto& m : mods) {
        auto tm = tau(m);
        bool rigid = hom_dim(m, tm) == 0;
        j.push_back({{"label", module_label(m)}, {"dims", m.dims()}, {"tau", module_label(tm)},
                     {"tau_rigid", rigid}, {"module", module_to_json(m)}});
        t << module_label(m) << " " << dims_string(m.dims()) << "  tau = " << module_label(tm)
          << (rigid ? "" : "  (not tau-rigid)") << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_presilt(const Globals& g) {
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    json j = json::array();
    std::ostringstream t;
    for (std::size_t i = 0; i < cat.presilting.size(); ++i) {
        j.push_back({{"g_vector", cat.g[i]}, {"name", gvector_string(cat.g[i], ctx.quiver())},
                     {"H0", module_label(cat.h0[i])}, {"complex", complex_to_json(cat.presilting[i])}});
        t << gvector_string(cat.g[i], ctx.quiver()) << "   H0 = " << module_label(cat.h0[i]) << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_silt(const Globals& g) {
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    json j = silting_catalog_json(cat);
    std::ostringstream t;
    for (std::size_t r = 0; r < cat.silting.size(); ++r) {
        const auto& s = cat.silting[r];
        std::vector<std::string> parts;
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto name = gvector_string(cat.g[s[k]], ctx.quiver());
            parts.push_back(j[r]["rho_flags"][k].get<bool>() ? "*" + name : name);
            j[r]["names"].push_back(name);
        }
        t << join(parts) << "\n";
    }
    t << cat.silting.size() << " two-term silting complexes (* marks T_rho summands)\n";
    emit(g, j, t.str());
    return 0;
}

struct ThetaInput {
    std::string theta;
    std::string presilting;
    std::string weights;
    bool reports = false;
};

/// θ from --theta, or from --presilting with --weights (default all 1).
StabilityForm resolve_theta(const Catalog& cat, const ThetaInput& in, std::optional<std::vector<std::size_t>>& face) {
    if (!in.theta.empty() && !in.presilting.empty()) throw QueryError("give either --theta or --presilting, not both");
    if (!in.theta.empty()) {
        StabilityForm th;
        th.coeffs = parse_rational_list(in.theta);
        if (th.coeffs.size() != cat.rank()) throw QueryError("θ must have " + std::to_string(cat.rank()) + " entries");
        return th;
    }
    if (in.presilting.empty()) throw QueryError("need --theta or --presilting");
    auto idx = parse_presilting(cat, in.presilting == "0" ? "" : in.presilting);
    std::vector<Rational> w = in.weights.empty() ? std::vector<Rational>(idx.size(), Rational(1))
                                                 : (idx.empty() ? std::vector<Rational>{} : parse_rational_list(in.weights));
    face = idx;
    return theta_from_presilting(cat.object(idx), w, cat.algebra);
}

int cmd_theta(const Globals& g, const ThetaInput& in) {
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    std::optional<std::vector<std::size_t>> face;
    auto th = resolve_theta(cat, in, face);
    json j;
    j["theta"] = theta_to_json(th.coeffs);
    if (face) {
        j["presilting"] = face_names(cat, *face);
        j["weights"] = theta_to_json(th.weights);
    }
    j["values"] = json::array();
    std::ostringstream t;
    t << "theta = (" << rationals_string(th.coeffs) << ")\n";
    for (const auto& m : cat.indecomposables) {
        auto v = theta_value(th, m.dims());
        j["values"].push_back({{"module", module_label(m)}, {"dims", m.dims()}, {"theta", rational_string(v)}});
        t << "  theta(" << module_label(m) << ") = " << rational_string(v) << "\n";
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_semistable(const Globals& g, const ThetaInput& in) {
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    std::optional<std::vector<std::size_t>> face;
    auto th = resolve_theta(cat, in, face);
    if (in.reports && !face) face = locate_cone(cat, th.coeffs).summands;
    json j;
    j["theta"] = theta_to_json(th.coeffs);
    j["semistable"] = json::array();
    std::vector<std::string> names;
    for (const auto& m : cat.indecomposables)
        if (is_semistable(th, m).semistable) {
            j["semistable"].push_back(module_label(m));
            names.push_back(module_label(m));
        }
    std::ostringstream t;
    t << "theta = (" << rationals_string(th.coeffs) << ")\nsemistable indecomposables: {" << join(names) << "}\n";
    if (in.reports) {
        auto u = total_complex(cat.object(*face), ctx.alg);
        j["U"] = face_names(cat, *face);
        j["reports"] = json::array();
        for (const auto& m : cat.indecomposables) {
            auto rep = report_to_json(membership_report(u, th, m, module_label(m)));
            j["reports"].push_back(rep);
            t << "  " << rep.dump() << "\n";
        }
    }
    emit(g, j, t.str());
    return 0;
}

int cmd_cone(const Globals& g, const ThetaInput& in) {
    if (in.theta.empty()) throw QueryError("cone needs --theta");
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    auto theta = parse_rational_list(in.theta);
    auto loc = locate_cone(cat, theta);
    auto u = total_complex(cat.object(loc.summands), ctx.alg);
    std::vector<std::string> wide;
    for (const auto& m : cat.indecomposables)
        if (in_W_U(u, m)) wide.push_back(module_label(m));
    json j{{"theta", theta_to_json(theta)}, {"U", face_names(cat, loc.summands)},
           {"weights", theta_to_json(loc.weights)}, {"W_U", wide}};
    std::ostringstream t;
    t << "U = {" << join(face_strings(cat, loc.summands)) << "}\nweights = (" << rationals_string(loc.weights)
      << ")\nW_U indecomposables: {" << join(wide) << "}\n";
    emit(g, j, t.str());
    return 0;
}

int cmd_table(const Globals& g) {
    Context ctx(g);
    auto cat = build_catalog(ctx.alg, ctx.bound);
    auto rows = table_rows(cat);
    json j{{"rows", json::array()}};
    std::ostringstream t;
    for (const auto& r : rows) {
        j["rows"].push_back(row_to_json(r));
        std::vector<std::string> marked;
        for (const auto& s : r.summands)
            marked.push_back(std::find(r.rho.begin(), r.rho.end(), s) != r.rho.end() ? "*" + s : s);
        t << "{" << join(marked) << "}  stau {" << join(r.stau) << "}  tors {" << join(r.torsion) << "}  wide {"
          << join(r.wide) << "}\n";
    }
    emit(g, j, t.str());
    return 0;
}

struct VerifyInput {
    std::string checks;
    std::string golden;
    std::size_t draws = 5;
    std::string policy = "sums";
    bool timing = false;
};

int cmd_verify(const Globals& g, const VerifyInput& in) {
    VerificationPlan plan;
    plan.algebra_file = g.algebra;
    plan.dim_bound = g.dim_bound;
    plan.seed = g.seed;
    plan.weight_draws = in.draws;
    plan.policy = in.policy == "indecs" ? ModulePolicy::indecomposables : ModulePolicy::with_pairwise_sums;
    plan.record_timing = in.timing;
    if (!in.golden.empty()) plan.golden = in.golden;
    std::stringstream ss(in.checks);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) plan.checks.insert(item);
    auto verdict = run_suite(plan);
    std::ostringstream t;
    for (const auto& c : verdict.checks) {
        t << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.note.empty()) t << "  " << c.note;
        t << "\n";
        if (!c.passed) t << "  counterexample: " << c.counterexample.dump() << "\n";
    }
    t << "catalog: " << verdict.indecomposables << " indecomposables, " << verdict.presilting
      << " indecomposable presilting, " << verdict.silting << " silting; seed " << verdict.seed << "\n";
    emit(g, verdict.to_json(), t.str());
    return verdict.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-term silting complexes, wide subcategories and semistability"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--algebra", g.algebra, "algebra definition (JSON)")->required();
    app.add_option("--seed", g.seed, "RNG seed for weight draws and sampling");
    app.add_option("--dim-bound", g.dim_bound, "dimension bound for module enumeration (default: max dim of P_i, I_i)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));

    ThetaInput theta_in;
    auto add_theta = [&](CLI::App* sub, bool with_presilting) {
        sub->add_option("--theta", theta_in.theta, "comma-separated rationals, e.g. \"-1,1/2,3\"");
        if (with_presilting) {
            sub->add_option("--presilting", theta_in.presilting, "';'-separated g-vectors, e.g. \"P_2 - P_3; -P_1\"");
            sub->add_option("--weights", theta_in.weights, "positive weights, one per summand (default 1)");
        }
    };
    VerifyInput verify_in;

    auto* inspect = app.add_subcommand("inspect", "algebra summary and standard modules");
    auto* indecs = app.add_subcommand("indecs", "indecomposable modules up to the dimension bound");
    auto* presilt = app.add_subcommand("presilt", "indecomposable two-term presilting complexes");
    auto* silt = app.add_subcommand("silt", "basic two-term silting complexes");
    auto* theta = app.add_subcommand("theta", "stability form and its values on indecomposables");
    add_theta(theta, true);
    auto* semistable = app.add_subcommand("semistable", "theta-semistable indecomposables");
    add_theta(semistable, true);
    semistable->add_flag("--reports", theta_in.reports, "full membership reports");
    auto* cone = app.add_subcommand("cone", "the cone C(U) containing theta");
    add_theta(cone, false);
    auto* table = app.add_subcommand("table", "per-silting summary: T_rho, H0 summands, torsion class, W^T");
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--checks", verify_in.checks, "comma-separated subset of: serre,lemma31,prop33,thm14,lemma34,lemma35,thm13,table,fan");
    verify->add_option("--golden", verify_in.golden, "golden table file (default: <algebra>.golden.json)");
    verify->add_option("--draws", verify_in.draws, "weight draws per presilting complex");
    verify->add_option("--modules", verify_in.policy, "test modules: indecs or sums")->check(CLI::IsMember({"indecs", "sums"}));
    verify->add_flag("--timing", verify_in.timing, "include wall time in the verdict");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }

    try {
        if (*inspect) return cmd_inspect(g);
        if (*indecs) return cmd_indecs(g);
        if (*presilt) return cmd_presilt(g);
        if (*silt) return cmd_silt(g);
        if (*theta) return cmd_theta(g, theta_in);
        if (*semistable) return cmd_semistable(g, theta_in);
        if (*cone) return cmd_cone(g, theta_in);
        if (*table) return cmd_table(g);
        if (*verify) return cmd_verify(g, verify_in);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const LimitError& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 3;
    } catch (const QueryError& e) {
        std::cerr << "bad query: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
