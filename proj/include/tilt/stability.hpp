#pragma once

/**
 * @file stability.hpp
 * @brief Stability forms θ on K_0(mod Λ), semistability, the torsion pairs
 *        attached to a two-term presilting complex, and cone location in the
 *        g-vector fan.
 *
 * Sign convention: M is θ-semistable when θ(M) = 0 and θ(L) <= 0 for every
 * submodule L of M.
 */

#include <boost/rational.hpp>

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tilt/complex.hpp"
#include "tilt/silting.hpp"

namespace tilt {

using Rational = boost::rational<long long>;

inline std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? "" : t.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw QueryError("empty rational");
    try {
        std::size_t used = 0;
        auto slash = s.find('/');
        long long num = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash)) throw QueryError("malformed rational '" + s + "'");
        long long den = 1;
        if (slash != std::string::npos) {
            std::string d = s.substr(slash + 1);
            den = std::stoll(d, &used);
            if (used != d.size()) throw QueryError("malformed rational '" + s + "'");
        }
        if (den == 0) throw QueryError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw QueryError("malformed rational '" + s + "'");
    }
}

/// Comma-separated rationals, e.g. "-1,1/2,3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw QueryError("empty rational list");
    return out;
}

struct StabilityForm {
    std::vector<Rational> coeffs;
    /// Set when θ comes from a presilting complex: its summands and positive weights.
    std::optional<SiltingObject> source;
    std::vector<Rational> weights;
};

inline StabilityForm theta_from_presilting(const SiltingObject& u, const std::vector<Rational>& weights,
                                           const AlgebraPtr& alg) {
    if (weights.size() != u.summands.size())
        throw QueryError("need one weight per summand (" + std::to_string(u.summands.size()) + ")");
    for (const auto& w : weights)
        if (w <= Rational(0)) throw QueryError("weights must be strictly positive");
    if (!is_presilting(total_complex(u, alg))) throw QueryError("complex is not presilting");
    StabilityForm theta;
    theta.coeffs.assign(alg->num_vertices(), Rational(0));
    for (std::size_t k = 0; k < u.summands.size(); ++k) {
        auto g = g_vector(u.summands[k]);
        for (std::size_t i = 0; i < g.size(); ++i) theta.coeffs[i] += weights[k] * g[i];
    }
    theta.source = u;
    theta.weights = weights;
    return theta;
}

inline Rational theta_value(const StabilityForm& theta, const DimVector& v) {
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += theta.coeffs[i] * static_cast<long long>(v[i]);
    return s;
}

struct SemistabilityResult {
    bool semistable = false;
    Rational theta_of_module;
    std::optional<DimVector> violating_submodule;  ///< a submodule with θ > 0, when that is the obstruction
};

inline SemistabilityResult semistability_from_subdims(const StabilityForm& theta, const DimVector& dims,
                                                      const std::set<DimVector>& subdims) {
    SemistabilityResult r;
    r.theta_of_module = theta_value(theta, dims);
    if (r.theta_of_module != Rational(0)) return r;
    for (const auto& v : subdims)
        if (theta_value(theta, v) > Rational(0)) {
            r.violating_submodule = v;
            return r;
        }
    r.semistable = true;
    return r;
}

inline SemistabilityResult is_semistable(const StabilityForm& theta, const Module& m,
                                         std::size_t bound = kDefaultSubmoduleBound) {
    return semistability_from_subdims(theta, m.dims(), submodule_dim_vectors(m, bound));
}

// ---- torsion pairs of a presilting complex U --------------------------------

/// M ∈ T_U^+ : Hom_D(U, M[1]) = 0, cross-checked against Hom(M, H^{-1}(νU)) = 0.
inline bool in_T_plus(const TwoTermComplex& u, const Module& m) {
    bool a = derived_hom_from(u, m).degree1 == 0;
    bool b = hom_dim(m, Hminus1_nu(u)) == 0;
    if (a != b) throw std::logic_error("in_T_plus: Hom_D(U,M[1]) and Hom(M,H^{-1}(νU)) disagree");
    return a;
}

/// M ∈ F_U^- : Hom_D(M, νU) = 0, cross-checked against Hom(H^0(U), M) = 0.
inline bool in_F_minus(const TwoTermComplex& u, const Module& m) {
    bool a = derived_hom_to_nu(m, u).degree0 == 0;
    bool b = hom_dim(H0(u), m) == 0;
    if (a != b) throw std::logic_error("in_F_minus: Hom_D(M,νU) and Hom(H^0(U),M) disagree");
    return a;
}

/// M ∈ T_U^- = Fac H^0(U).
inline bool in_T_minus(const TwoTermComplex& u, const Module& m) { return fac_membership(H0(u), m); }

/// M ∈ F_U^+ = Sub H^{-1}(νU).
inline bool in_F_plus(const TwoTermComplex& u, const Module& m) { return sub_membership(Hminus1_nu(u), m); }

inline bool in_W_U(const TwoTermComplex& u, const Module& m) { return in_T_plus(u, m) && in_F_minus(u, m); }

/// M ∈ W^T = Fac H^0(T) ∩ H^0(T_ρ)^⊥.
inline bool in_W_T(const SiltingObject& t, const SiltingDecomposition& dec, const Module& m, const AlgebraPtr& alg) {
    SiltingObject rho;
    for (auto j : dec.rho) rho.summands.push_back(t.summands[j]);
    return fac_membership(H0(total_complex(t, alg)), m) && hom_dim(H0(total_complex(rho, alg)), m) == 0;
}

inline bool in_W_T(const SiltingObject& t, const Module& m, const AlgebraPtr& alg) {
    if (!is_silting(t, alg)) throw QueryError("in_W_T: not a two-term silting complex");
    return in_W_T(t, silting_decompose(t, alg), m, alg);
}

// ---- membership reports ----------------------------------------------------

struct MembershipReport {
    std::string module_id;
    bool in_T_plus = false;
    bool in_T_minus = false;
    bool in_F_plus = false;
    bool in_F_minus = false;
    bool in_W_U = false;
    bool is_semistable = false;
    Rational theta_value;
    nlohmann::json witness = nlohmann::json::object();
};

inline MembershipReport membership_report(const TwoTermComplex& u, const StabilityForm& theta, const Module& m,
                                          std::string id) {
    MembershipReport r;
    r.module_id = std::move(id);
    auto from = derived_hom_from(u, m);
    auto to_nu = derived_hom_to_nu(m, u);
    r.in_T_plus = in_T_plus(u, m);
    r.in_F_minus = in_F_minus(u, m);
    r.in_T_minus = in_T_minus(u, m);
    r.in_F_plus = in_F_plus(u, m);
    r.in_W_U = r.in_T_plus && r.in_F_minus;
    auto ss = is_semistable(theta, m);
    r.is_semistable = ss.semistable;
    r.theta_value = ss.theta_of_module;
    if (!r.in_T_plus) r.witness["in_T_plus"] = {{"dim_Hom_D(U,M[1])", from.degree1}};
    if (!r.in_F_minus) r.witness["in_F_minus"] = {{"dim_Hom_D(M,nuU)", to_nu.degree0}};
    if (!r.in_T_minus) r.witness["in_T_minus"] = {{"not_generated_by", module_label(H0(u))}};
    if (!r.in_F_plus) r.witness["in_F_plus"] = {{"not_cogenerated_by", module_label(Hminus1_nu(u))}};
    if (!r.in_W_U) r.witness["in_W_U"] = "fails T_U^+ or F_U^-";
    if (!r.is_semistable) {
        if (ss.violating_submodule)
            r.witness["is_semistable"] = {{"submodule_dims", *ss.violating_submodule},
                                          {"theta", rational_string(theta_value(theta, *ss.violating_submodule))}};
        else
            r.witness["is_semistable"] = {{"theta_of_module", rational_string(r.theta_value)}};
    }
    return r;
}

inline nlohmann::json report_to_json(const MembershipReport& r) {
    return {{"module", r.module_id},        {"in_T_plus", r.in_T_plus}, {"in_T_minus", r.in_T_minus},
            {"in_F_plus", r.in_F_plus},     {"in_F_minus", r.in_F_minus}, {"in_W_U", r.in_W_U},
            {"is_semistable", r.is_semistable}, {"theta_value", rational_string(r.theta_value)},
            {"witness", r.witness}};
}

inline nlohmann::json theta_to_json(const std::vector<Rational>& coeffs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : coeffs) out.push_back(rational_string(c));
    return out;
}

// ---- cone location -----------------------------------------------------------

namespace detail {

/// Unique solution of G a = θ when the columns of G are independent; nullopt otherwise.
inline std::optional<std::vector<Rational>> solve_rational(const std::vector<GVector>& columns,
                                                           const std::vector<Rational>& theta) {
    const std::size_t n = theta.size(), k = columns.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) a[i][c] = columns[c][i];
        a[i][k] = theta[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t sel = row;
        while (sel < n && a[sel][c] == Rational(0)) ++sel;
        if (sel == n) return std::nullopt;  // dependent columns
        std::swap(a[sel], a[row]);
        Rational inv = Rational(1) / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != row && a[r][c] != Rational(0)) {
                Rational f = a[r][c];
                for (std::size_t cc = 0; cc <= k; ++cc) a[r][cc] -= f * a[row][cc];
            }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (a[r][k] != Rational(0)) return std::nullopt;  // inconsistent
    std::vector<Rational> out(k);
    for (std::size_t r = 0; r < row; ++r) out[pivot_col[r]] = a[r][k];
    return out;
}

}  // namespace detail

struct ConeLocation {
    std::vector<std::size_t> summands;  ///< catalog indices of U
    std::vector<Rational> weights;
};

/// The unique basic presilting U with θ ∈ C(U), and the positive weights.
inline ConeLocation locate_cone(const Catalog& cat, const std::vector<Rational>& theta) {
    if (theta.size() != cat.rank()) throw QueryError("θ must have " + std::to_string(cat.rank()) + " entries");
    std::vector<ConeLocation> hits;
    for (const auto& face : cat.faces) {
        std::vector<GVector> cols;
        for (auto i : face) cols.push_back(cat.g[i]);
        auto sol = detail::solve_rational(cols, theta);
        if (!sol) continue;
        bool positive = true;
        for (const auto& a : *sol) positive = positive && a > Rational(0);
        if (positive) hits.push_back({face, *sol});
    }
    if (hits.empty()) throw InconclusiveError("no cone found within catalog");
    if (hits.size() > 1) throw InconclusiveError("θ lies in " + std::to_string(hits.size()) + " cones");
    return hits.front();
}

}  // namespace tilt
