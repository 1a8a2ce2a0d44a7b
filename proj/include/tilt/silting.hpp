#pragma once

/**
 * @file silting.hpp
 * @brief Catalog of indecomposable two-term presilting complexes, the basic
 *        two-term silting complexes built from it, and the T_λ ⊕ T_ρ split.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tilt/complex.hpp"
#include "tilt/decompose.hpp"
#include "tilt/tau.hpp"

namespace tilt {

/// A basic direct sum of indecomposable two-term complexes.
struct SiltingObject {
    std::vector<TwoTermComplex> summands;
};

inline TwoTermComplex total_complex(const SiltingObject& s, const AlgebraPtr& alg) {
    return direct_sum(s.summands, alg);
}

inline bool compatible(const TwoTermComplex& p, const TwoTermComplex& q) {
    return hom_K(p, q, 1) == 0 && hom_K(q, p, 1) == 0;
}

/// Two-term presilting with as many summands as vertices.
inline bool is_silting(const SiltingObject& s, const AlgebraPtr& alg) {
    if (s.summands.size() != alg->num_vertices()) return false;
    return is_presilting(total_complex(s, alg));
}

/**
 * Everything derived from one algebra at one dimension bound: the
 * indecomposables, the indecomposable presilting complexes (canonical order:
 * g-vectors in descending lexicographic order), their compatibility, every
 * basic presilting complex as an index set, and the silting ones.
 */
struct Catalog {
    AlgebraPtr algebra;
    std::size_t dim_bound = 0;
    std::vector<Module> indecomposables;
    std::vector<TwoTermComplex> presilting;
    std::vector<GVector> g;
    std::vector<Module> h0;
    std::vector<std::vector<bool>> compatible;
    std::vector<std::vector<std::size_t>> faces;    ///< all basic presilting, including the empty one
    std::vector<std::vector<std::size_t>> silting;  ///< faces with n summands

    std::size_t rank() const { return algebra->num_vertices(); }

    SiltingObject object(const std::vector<std::size_t>& idx) const {
        SiltingObject s;
        for (auto i : idx) s.summands.push_back(presilting[i]);
        return s;
    }

    /// Catalog index of an indecomposable presilting complex, if present.
    std::optional<std::size_t> find(const TwoTermComplex& c) const {
        auto gc = g_vector(c);
        for (std::size_t i = 0; i < presilting.size(); ++i)
            if (g[i] == gc && is_isomorphic(h0[i], H0(c))) return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_gvector(const GVector& gv) const {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] == gv) return i;
        return std::nullopt;
    }
};

namespace detail {

inline void extend_cliques(const std::vector<std::vector<bool>>& compat, std::size_t max_size,
                           std::vector<std::size_t>& current, std::size_t start,
                           std::vector<std::vector<std::size_t>>& out) {
    out.push_back(current);
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < compat.size(); ++i) {
        bool ok = true;
        for (auto j : current)
            if (!compat[i][j]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(i);
        extend_cliques(compat, max_size, current, i + 1, out);
        current.pop_back();
    }
}

/// Sort key of a set of summands: its g-vectors in descending order.
inline std::vector<GVector> gvector_key(const std::vector<GVector>& g, const std::vector<std::size_t>& idx) {
    std::vector<GVector> key;
    for (auto i : idx) key.push_back(g[i]);
    std::sort(key.begin(), key.end(), std::greater<>());
    return key;
}

}  // namespace detail

/// Every (n-1)-face of a silting complex lies in exactly two silting complexes.
inline std::optional<std::string> fan_closure_defect(const Catalog& cat) {
    std::map<std::vector<std::size_t>, std::size_t> count;
    for (const auto& s : cat.silting)
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) face.push_back(s[k]);
            ++count[face];
        }
    for (const auto& [face, c] : count)
        if (c != 2) {
            std::string names;
            for (auto i : face) names += (names.empty() ? "" : ", ") + gvector_string(cat.g[i], cat.algebra->quiver());
            return "almost complete presilting {" + names + "} has " + std::to_string(c) +
                   " completions in the catalog (expected 2)";
        }
    if (cat.silting.empty()) return std::string("no silting complexes found");
    return std::nullopt;
}

/**
 * Builds the catalog from the τ-rigid indecomposables up to the bound. The
 * result is certified complete by the closed-fan test; otherwise the
 * enumeration is reported as inconclusive.
 */
inline Catalog build_catalog(const AlgebraPtr& alg, std::size_t dim_bound) {
    Catalog cat;
    cat.algebra = alg;
    cat.dim_bound = dim_bound;
    cat.indecomposables = enumerate_indecomposables(alg, dim_bound);
    const std::size_t n = alg->num_vertices();

    std::vector<TwoTermComplex> found;
    for (const auto& m : cat.indecomposables)
        if (is_tau_rigid(m)) found.push_back(min_projective_presentation(m));
    for (std::size_t i = 0; i < n; ++i) found.push_back(TwoTermComplex::shifted(alg, {i}));

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<GVector> gs;
    for (const auto& c : found) gs.push_back(g_vector(c));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gs[a] > gs[b]; });
    for (auto i : order) {
        if (!is_presilting(found[i])) throw std::logic_error("catalog: presentation of a τ-rigid module is not presilting");
        for (const auto& existing : cat.g)
            if (existing == gs[i])
                throw std::logic_error("catalog: two indecomposable presilting complexes share a g-vector");
        cat.presilting.push_back(found[i]);
        cat.g.push_back(gs[i]);
        cat.h0.push_back(H0(found[i]));
    }

    const std::size_t m = cat.presilting.size();
    cat.compatible.assign(m, std::vector<bool>(m, true));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            cat.compatible[i][j] = cat.compatible[j][i] = compatible(cat.presilting[i], cat.presilting[j]);

    std::vector<std::size_t> current;
    detail::extend_cliques(cat.compatible, n, current, 0, cat.faces);
    for (const auto& f : cat.faces)
        if (f.size() == n) cat.silting.push_back(f);
    std::sort(cat.silting.begin(), cat.silting.end(), [&](const auto& a, const auto& b) {
        return detail::gvector_key(cat.g, a) > detail::gvector_key(cat.g, b);
    });
    for (auto& s : cat.silting)
        std::sort(s.begin(), s.end());

    if (auto defect = fan_closure_defect(cat))
        throw InconclusiveError("dimension bound " + std::to_string(dim_bound) +
                                " reached with new τ-rigid modules still appearing: " + *defect);
    return cat;
}

inline std::vector<TwoTermComplex> enumerate_indec_presilting(const AlgebraPtr& alg, std::size_t dim_bound) {
    return build_catalog(alg, dim_bound).presilting;
}

inline std::vector<SiltingObject> enumerate_2silt(const AlgebraPtr& alg, std::size_t dim_bound) {
    auto cat = build_catalog(alg, dim_bound);
    std::vector<SiltingObject> out;
    for (const auto& s : cat.silting) out.push_back(cat.object(s));
    return out;
}

// ---- T = T_λ ⊕ T_ρ ---------------------------------------------------------

/// Triangle Λ -> T' -> T'' -> Λ[1] with T' -> Λ a minimal left add T-approximation.
struct SiltingDecomposition {
    std::vector<std::size_t> lambda;            ///< summand positions forming T_λ
    std::vector<std::size_t> rho;               ///< summand positions forming T_ρ
    std::vector<std::size_t> t_prime;           ///< multiplicity of each summand in T'
    std::vector<std::size_t> t_double_prime;    ///< multiplicity of each summand in T''
    ProjMap approximation;                      ///< degree-0 component Λ -> T'^0
    TwoTermComplex cone;                        ///< T'' before reduction
};

inline SiltingDecomposition silting_decompose(const SiltingObject& t, const AlgebraPtr& alg) {
    const std::size_t n = alg->num_vertices();
    const std::uint32_t p = alg->modulus();
    const std::size_t m = t.summands.size();
    for (const auto& s : t.summands) {
        auto parts = decompose_complex(s);
        if (parts.size() != 1 || parts[0].multiplicity != 1)
            throw QueryError("silting_decompose: summands must be indecomposable");
    }

    std::vector<Projection> h0;
    for (const auto& s : t.summands)
        h0.push_back(cokernel_of(projective_sum(alg, s.p_zero()), projective_morphism(*alg, s.differential())));

    struct Copy {
        std::size_t summand;
        std::size_t vertex;
        Matrix lift;  // column in (T_j^0)_vertex
    };
    std::vector<Copy> copies;
    for (std::size_t j = 0; j < m; ++j) {
        const Module& hj = h0[j].quotient;
        if (hj.is_zero()) continue;
        auto end = hom_space(hj, hj);
        auto rad = local_radical(hj);
        std::vector<std::vector<Morphism>> into(m);
        for (std::size_t k = 0; k < m; ++k)
            if (k != j && !h0[k].quotient.is_zero()) into[k] = hom_space(h0[k].quotient, hj).basis;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t d = hj.dim(i);
            if (d == 0) continue;
            std::vector<Matrix> gens{Matrix(d, 0, p)};
            for (std::size_t k = 0; k < m; ++k)
                for (const auto& f : into[k]) gens.push_back(f.components[i]);
            for (const auto& r : rad) gens.push_back(r.components[i]);
            Matrix span = column_space(hstack(gens, d, p));
            for (std::size_t e = 0; e < d; ++e) {
                Matrix vec(d, 1, p);
                vec(e, 0) = 1;
                if (in_column_space(span, vec)) continue;
                std::vector<Matrix> orbit{span};
                for (const auto& phi : end.basis) orbit.push_back(phi.components[i] * vec);
                span = column_space(hstack(orbit, d, p));
                copies.push_back({j, i, h0[j].lifts[i] * vec});
            }
        }
    }
    std::stable_sort(copies.begin(), copies.end(), [](const Copy& a, const Copy& b) { return a.summand < b.summand; });

    SiltingDecomposition out;
    out.t_prime.assign(m, 0);
    out.t_double_prime.assign(m, 0);
    std::vector<TwoTermComplex> tp_parts;
    for (const auto& c : copies) {
        ++out.t_prime[c.summand];
        tp_parts.push_back(t.summands[c.summand]);
    }
    TwoTermComplex tp = direct_sum(tp_parts, alg);

    std::vector<std::size_t> lambda_vertices(n);
    for (std::size_t i = 0; i < n; ++i) lambda_vertices[i] = i;
    ProjMap f0 = ProjMap::zero(*alg, lambda_vertices, tp.p_zero());
    std::size_t row = 0;
    for (const auto& c : copies) {
        const auto& zero_terms = t.summands[c.summand].p_zero();
        std::size_t offset = 0;
        for (std::size_t r = 0; r < zero_terms.size(); ++r) {
            const auto& corner = alg->corner(zero_terms[r], c.vertex);
            Element x = alg->zero();
            for (std::size_t q = 0; q < corner.size(); ++q) x[corner[q]] = c.lift(offset + q, 0);
            offset += corner.size();
            f0.entries[row + r][c.vertex] = x;
        }
        row += zero_terms.size();
    }
    out.approximation = f0;

    // cone: Λ ⊕ T'^{-1} -> T'^0 with differential [f0 | d_{T'}]
    std::vector<std::size_t> src = lambda_vertices;
    src.insert(src.end(), tp.p_minus1().begin(), tp.p_minus1().end());
    ProjMap d = ProjMap::zero(*alg, src, tp.p_zero());
    for (std::size_t r = 0; r < tp.p_zero().size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) d.entries[r][c] = f0.entries[r][c];
        for (std::size_t c = 0; c < tp.p_minus1().size(); ++c) d.entries[r][n + c] = tp.differential().entries[r][c];
    }
    out.cone = TwoTermComplex(alg, std::move(d));

    for (const auto& s : decompose_complex(out.cone)) {
        bool matched = false;
        for (std::size_t j = 0; j < m && !matched; ++j)
            if (homotopy_equivalent(s.complex, t.summands[j])) {
                out.t_double_prime[j] += s.multiplicity;
                matched = true;
            }
        if (!matched) throw std::logic_error("silting_decompose: approximation not left-minimal (cone leaves add T)");
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (out.t_double_prime[j] > 0)
            out.rho.push_back(j);
        else
            out.lambda.push_back(j);
    }
    return out;
}

/// Catalog export: one record per silting complex.
inline nlohmann::json silting_catalog_json(const Catalog& cat) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : cat.silting) {
        auto dec = silting_decompose(cat.object(s), cat.algebra);
        nlohmann::json rec;
        rec["g_vectors"] = nlohmann::json::array();
        rec["H0_dims"] = nlohmann::json::array();
        rec["rho_flags"] = nlohmann::json::array();
        for (std::size_t k = 0; k < s.size(); ++k) {
            rec["g_vectors"].push_back(cat.g[s[k]]);
            rec["H0_dims"].push_back(cat.h0[s[k]].dims());
            rec["rho_flags"].push_back(dec.t_double_prime[k] > 0);
        }
        out.push_back(rec);
    }
    return out;
}

}  // namespace tilt
