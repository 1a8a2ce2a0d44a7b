#pragma once

/**
 * @file complex.hpp
 * @brief Two-term complexes of projectives P^{-1} -> P^0 and their homotopy
 *        invariants.
 *
 * A map ⊕_c P_{i_c} -> ⊕_r P_{j_r} is a matrix of algebra elements with
 * entry (r, c) in e_{j_r} Λ e_{i_c}, acting by left multiplication.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tilt/decompose.hpp"
#include "tilt/module.hpp"

namespace tilt {

using GVector = std::vector<long long>;

/// A morphism ⊕_c P_{source[c]} -> ⊕_r P_{target[r]}.
struct ProjMap {
    std::vector<std::size_t> source;
    std::vector<std::size_t> target;
    std::vector<std::vector<Element>> entries;  ///< entries[r][c] ∈ e_{target[r]} Λ e_{source[c]}

    static ProjMap zero(const Algebra& alg, std::vector<std::size_t> source, std::vector<std::size_t> target) {
        ProjMap m{std::move(source), std::move(target), {}};
        m.entries.assign(m.target.size(), std::vector<Element>(m.source.size(), alg.zero()));
        return m;
    }

    bool is_zero(const Algebra& alg) const {
        for (const auto& row : entries)
            for (const auto& x : row)
                if (!alg.is_zero(x)) return false;
        return true;
    }
};

/// Y ∘ X.
inline ProjMap compose(const Algebra& alg, const ProjMap& y, const ProjMap& x) {
    ProjMap out = ProjMap::zero(alg, x.source, y.target);
    for (std::size_t r = 0; r < y.target.size(); ++r)
        for (std::size_t c = 0; c < x.source.size(); ++c)
            for (std::size_t s = 0; s < x.target.size(); ++s)
                out.entries[r][c] = alg.add(out.entries[r][c], alg.multiply(y.entries[r][s], x.entries[s][c]));
    return out;
}

namespace detail {

inline std::size_t proj_hom_dim(const Algebra& alg, const std::vector<std::size_t>& source,
                                const std::vector<std::size_t>& target) {
    std::size_t d = 0;
    for (auto j : target)
        for (auto i : source) d += alg.corner(j, i).size();
    return d;
}

inline std::vector<Scalar> proj_coords(const Algebra& alg, const ProjMap& m) {
    std::vector<Scalar> out;
    for (std::size_t r = 0; r < m.target.size(); ++r)
        for (std::size_t c = 0; c < m.source.size(); ++c)
            for (auto k : alg.corner(m.target[r], m.source[c])) out.push_back(m.entries[r][c][k]);
    return out;
}

inline std::vector<ProjMap> proj_basis(const Algebra& alg, const std::vector<std::size_t>& source,
                                       const std::vector<std::size_t>& target) {
    std::vector<ProjMap> out;
    for (std::size_t r = 0; r < target.size(); ++r)
        for (std::size_t c = 0; c < source.size(); ++c)
            for (auto k : alg.corner(target[r], source[c])) {
                ProjMap m = ProjMap::zero(alg, source, target);
                m.entries[r][c] = alg.basis_element(k);
                out.push_back(std::move(m));
            }
    return out;
}

/// Matrix of g -> g ∘ x, from Hom(P(x.target), P(k)) to Hom(P(x.source), P(k)).
inline Matrix precompose_matrix(const Algebra& alg, const ProjMap& x, const std::vector<std::size_t>& k) {
    auto basis = proj_basis(alg, x.target, k);
    Matrix out(proj_hom_dim(alg, x.source, k), basis.size(), alg.modulus());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        auto coords = proj_coords(alg, compose(alg, basis[b], x));
        for (std::size_t r = 0; r < coords.size(); ++r) out(r, b) = coords[r];
    }
    return out;
}

/// Matrix of h -> y ∘ h, from Hom(P(i), P(y.source)) to Hom(P(i), P(y.target)).
inline Matrix postcompose_matrix(const Algebra& alg, const ProjMap& y, const std::vector<std::size_t>& i) {
    auto basis = proj_basis(alg, i, y.source);
    Matrix out(proj_hom_dim(alg, i, y.target), basis.size(), alg.modulus());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        auto coords = proj_coords(alg, compose(alg, y, basis[b]));
        for (std::size_t r = 0; r < coords.size(); ++r) out(r, b) = coords[r];
    }
    return out;
}

inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

}  // namespace detail

/// The module morphism ⊕P_{source} -> ⊕P_{target} induced by a ProjMap.
inline Morphism projective_morphism(const Algebra& alg, const ProjMap& x) {
    Morphism f;
    const std::uint32_t p = alg.modulus();
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        std::size_t cols = 0;
        for (auto i : x.source) cols += alg.corner(i, v).size();
        std::vector<Matrix> rows;
        for (std::size_t r = 0; r < x.target.size(); ++r) {
            std::vector<Matrix> blocks;
            for (std::size_t c = 0; c < x.source.size(); ++c)
                blocks.push_back(left_mult_matrix(alg, x.entries[r][c], x.target[r], x.source[c], v));
            rows.push_back(hstack(blocks, alg.corner(x.target[r], v).size(), p));
        }
        f.components.push_back(vstack(rows, cols, p));
    }
    return f;
}

/// ν applied to a ProjMap: the morphism ⊕I_{source} -> ⊕I_{target}.
inline Morphism nakayama_morphism(const Algebra& alg, const ProjMap& x) {
    Morphism f;
    const std::uint32_t p = alg.modulus();
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        std::size_t cols = 0;
        for (auto i : x.source) cols += alg.corner(v, i).size();
        std::vector<Matrix> rows;
        for (std::size_t r = 0; r < x.target.size(); ++r) {
            std::vector<Matrix> blocks;
            for (std::size_t c = 0; c < x.source.size(); ++c)
                blocks.push_back(right_mult_matrix(alg, x.entries[r][c], v, x.target[r], x.source[c]).transpose());
            rows.push_back(hstack(blocks, alg.corner(v, x.target[r]).size(), p));
        }
        f.components.push_back(vstack(rows, cols, p));
    }
    return f;
}

/// P^{-1} -> P^0 with both terms finite sums of indecomposable projectives.
class TwoTermComplex {
public:
    TwoTermComplex() = default;

    TwoTermComplex(AlgebraPtr alg, ProjMap d) : alg_(std::move(alg)), d_(std::move(d)) {
        if (d_.entries.size() != d_.target.size()) throw InputError("complex: differential has wrong row count");
        for (std::size_t r = 0; r < d_.target.size(); ++r) {
            if (d_.entries[r].size() != d_.source.size())
                throw InputError("complex: differential has wrong column count");
            for (std::size_t c = 0; c < d_.source.size(); ++c)
                if (!alg_->in_corner(d_.entries[r][c], d_.target[r], d_.source[c]))
                    throw InputError("complex: differential entry outside its corner e_j Λ e_i");
        }
        for (auto v : d_.source)
            if (v >= alg_->num_vertices()) throw InputError("complex: unknown vertex");
        for (auto v : d_.target)
            if (v >= alg_->num_vertices()) throw InputError("complex: unknown vertex");
    }

    /// 0 -> ⊕ P_v (stalk in degree 0).
    static TwoTermComplex stalk(AlgebraPtr alg, std::vector<std::size_t> vertices) {
        ProjMap d = ProjMap::zero(*alg, {}, std::move(vertices));
        return TwoTermComplex(std::move(alg), std::move(d));
    }

    /// ⊕ P_v -> 0 (stalk in degree -1).
    static TwoTermComplex shifted(AlgebraPtr alg, std::vector<std::size_t> vertices) {
        ProjMap d = ProjMap::zero(*alg, std::move(vertices), {});
        return TwoTermComplex(std::move(alg), std::move(d));
    }

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const std::vector<std::size_t>& p_minus1() const { return d_.source; }
    const std::vector<std::size_t>& p_zero() const { return d_.target; }
    const ProjMap& differential() const { return d_; }
    bool is_zero() const { return d_.source.empty() && d_.target.empty(); }

private:
    AlgebraPtr alg_;
    ProjMap d_;
};

inline GVector g_vector(const TwoTermComplex& c) {
    GVector g(c.algebra().num_vertices(), 0);
    for (auto v : c.p_zero()) ++g[v];
    for (auto v : c.p_minus1()) --g[v];
    return g;
}

inline TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts, const AlgebraPtr& alg) {
    std::vector<std::size_t> src, tgt;
    for (const auto& c : parts) {
        src.insert(src.end(), c.p_minus1().begin(), c.p_minus1().end());
        tgt.insert(tgt.end(), c.p_zero().begin(), c.p_zero().end());
    }
    ProjMap d = ProjMap::zero(*alg, src, tgt);
    std::size_t ro = 0, co = 0;
    for (const auto& c : parts) {
        for (std::size_t r = 0; r < c.p_zero().size(); ++r)
            for (std::size_t k = 0; k < c.p_minus1().size(); ++k)
                d.entries[ro + r][co + k] = c.differential().entries[r][k];
        ro += c.p_zero().size();
        co += c.p_minus1().size();
    }
    return TwoTermComplex(alg, std::move(d));
}

inline Module H0(const TwoTermComplex& c) {
    const auto& alg = c.algebra_ptr();
    Module p0 = projective_sum(alg, c.p_zero());
    return cokernel_of(p0, projective_morphism(*alg, c.differential())).quotient;
}

/// ν applied to a two-term complex: I^{-1} -> I^0 with I_i = D(Λ e_i).
struct InjectiveComplex {
    Module i_minus1;
    Module i_zero;
    Morphism d;
};

inline InjectiveComplex nu_complex(const TwoTermComplex& c) {
    const auto& alg = c.algebra_ptr();
    return {injective_sum(alg, c.p_minus1()), injective_sum(alg, c.p_zero()),
            nakayama_morphism(*alg, c.differential())};
}

inline Module Hminus1_nu(const TwoTermComplex& c) {
    auto nu = nu_complex(c);
    return kernel_of(nu.i_minus1, nu.d).sub;
}

/// dim Hom_{K^b(proj Λ)}(P, Q[shift]) for shift in {-1, 0, 1}.
inline std::size_t hom_K(const TwoTermComplex& p, const TwoTermComplex& q, int shift) {
    const Algebra& alg = p.algebra();
    const ProjMap& dp = p.differential();
    const ProjMap& dq = q.differential();
    const std::uint32_t mod = alg.modulus();
    if (shift == 1) {
        std::size_t total = detail::proj_hom_dim(alg, p.p_minus1(), q.p_zero());
        if (total == 0) return 0;
        Matrix a = detail::precompose_matrix(alg, dp, q.p_zero());
        Matrix b = detail::postcompose_matrix(alg, dq, p.p_minus1());
        return total - rank(hstack({a, b}, total, mod));
    }
    if (shift == 0) {
        Matrix post = detail::postcompose_matrix(alg, dq, p.p_minus1());  // f^{-1} -> d_Q f^{-1}
        Matrix pre = detail::precompose_matrix(alg, dp, q.p_zero());       // f^0 -> f^0 d_P
        Matrix eq = hstack({post, pre.scaled(mod - 1)}, post.rows(), mod);
        std::size_t chains = detail::nullity(eq);
        // null-homotopic: h -> (h d_P, d_Q h)
        Matrix h1 = detail::precompose_matrix(alg, dp, q.p_minus1());
        Matrix h0 = detail::postcompose_matrix(alg, dq, p.p_zero());
        return chains - rank(vstack({h1, h0}, h1.cols(), mod));
    }
    if (shift == -1) {
        Matrix a = detail::postcompose_matrix(alg, dq, p.p_zero());
        Matrix b = detail::precompose_matrix(alg, dp, q.p_minus1());
        return detail::nullity(vstack({a, b}, a.cols(), mod));
    }
    throw std::invalid_argument("hom_K: shift must be -1, 0 or 1");
}

inline bool is_presilting(const TwoTermComplex& c) { return hom_K(c, c, 1) == 0; }

/// Hom(P^0, M) -> Hom(P^{-1}, M) through Hom(P_i, M) ≅ M_i.
inline Matrix presentation_hom_map(const TwoTermComplex& c, const Module& m) {
    const auto& d = c.differential();
    std::size_t rows = 0, cols = 0;
    for (auto i : d.source) rows += m.dim(i);
    for (auto j : d.target) cols += m.dim(j);
    Matrix out(rows, cols, m.modulus());
    std::size_t ro = 0;
    for (std::size_t k = 0; k < d.source.size(); ++k) {
        std::size_t co = 0;
        for (std::size_t r = 0; r < d.target.size(); ++r) {
            Matrix block = m.element_action(d.entries[r][k], d.target[r], d.source[k]);
            for (std::size_t a = 0; a < block.rows(); ++a)
                for (std::size_t b = 0; b < block.cols(); ++b) out(ro + a, co + b) = block(a, b);
            co += m.dim(d.target[r]);
        }
        ro += m.dim(d.source[k]);
    }
    return out;
}

/// dim Hom_D(P, M) (= dim Hom(H^0 P, M)) and dim Hom_D(P, M[1]).
struct DerivedHomFromP {
    std::size_t degree0 = 0;
    std::size_t degree1 = 0;
};

inline DerivedHomFromP derived_hom_from(const TwoTermComplex& c, const Module& m) {
    Matrix a = presentation_hom_map(c, m);
    std::size_t r = rank(a);
    return {a.cols() - r, a.rows() - r};
}

/// dim Hom_D(M, νP) and dim Hom_D(M, νP[-1]) (= dim Hom(M, H^{-1} νP)), via Hom into injectives.
struct DerivedHomToNu {
    std::size_t degree0 = 0;
    std::size_t degree_minus1 = 0;
};

inline DerivedHomToNu derived_hom_to_nu(const Module& m, const TwoTermComplex& c) {
    auto nu = nu_complex(c);
    auto h1 = hom_space(m, nu.i_minus1);
    auto h0 = hom_space(m, nu.i_zero);
    const std::uint32_t p = m.modulus();
    std::size_t flat0 = 0;
    for (std::size_t v = 0; v < m.dims().size(); ++v) flat0 += nu.i_zero.dim(v) * m.dim(v);
    std::vector<Matrix> gens;
    for (const auto& g : h0.basis) gens.push_back(Matrix::column_vector(g.flatten(), p));
    Matrix g0 = hstack(gens, flat0, p);
    Matrix b(h0.dim(), h1.dim(), p);
    for (std::size_t k = 0; k < h1.dim(); ++k) {
        Morphism image = compose(nu.d, h1.basis[k]);
        if (image.is_zero()) continue;
        auto coords = solve(g0, Matrix::column_vector(image.flatten(), p));
        if (!coords) throw std::logic_error("derived_hom_to_nu: composite outside Hom(M, I^0)");
        for (std::size_t l = 0; l < h0.dim(); ++l) b(l, k) = (*coords)(l, 0);
    }
    std::size_t r = rank(b);
    return {h0.dim() - r, h1.dim() - r};
}

/// ⟨P, M⟩ through the g-vector.
inline long long euler_form_gvector(const TwoTermComplex& c, const Module& m) {
    long long s = 0;
    auto g = g_vector(c);
    for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * static_cast<long long>(m.dim(i));
    return s;
}

/// ⟨P, M⟩ as dim Hom(P^0, M) - dim Hom(P^{-1}, M) with explicit Hom spaces.
inline long long euler_form_hom(const TwoTermComplex& c, const Module& m) {
    const auto& alg = c.algebra_ptr();
    return static_cast<long long>(hom_dim(projective_sum(alg, c.p_zero()), m)) -
           static_cast<long long>(hom_dim(projective_sum(alg, c.p_minus1()), m));
}

inline long long euler_form(const TwoTermComplex& c, const Module& m) {
    long long a = euler_form_gvector(c, m);
    if (a != euler_form_hom(c, m)) throw std::logic_error("euler_form: the two computations disagree");
    return a;
}

/// Minimal projective presentation P^{-1} -> P^0 -> M -> 0.
inline TwoTermComplex min_projective_presentation(const Module& m) {
    const auto& alg = m.algebra_ptr();
    const std::uint32_t p = m.modulus();
    const std::size_t n = alg->num_vertices();
    if (m.is_zero()) return TwoTermComplex::stalk(alg, {});

    auto top = quotient_by(m, radical_bases(m));
    std::vector<std::size_t> gens_vertex;
    std::vector<Matrix> gens;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t k = 0; k < top.lifts[v].cols(); ++k) {
            gens_vertex.push_back(v);
            gens.push_back(top.lifts[v].column(k));
        }
    Module p0 = projective_sum(alg, gens_vertex);
    Morphism cover;
    for (std::size_t w = 0; w < n; ++w) {
        std::vector<Matrix> blocks;
        for (std::size_t r = 0; r < gens.size(); ++r) {
            const auto& corner = alg->corner(gens_vertex[r], w);
            Matrix block(m.dim(w), corner.size(), p);
            for (std::size_t c = 0; c < corner.size(); ++c) {
                Matrix img = m.path_action(alg->basis_path(corner[c])) * gens[r];
                for (std::size_t a = 0; a < m.dim(w); ++a) block(a, c) = img(a, 0);
            }
            blocks.push_back(block);
        }
        cover.components.push_back(hstack(blocks, m.dim(w), p));
    }

    auto ker = kernel_of(p0, cover);
    auto ktop = quotient_by(ker.sub, radical_bases(ker.sub));
    std::vector<std::size_t> rel_vertex;
    std::vector<std::vector<Element>> columns;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t k = 0; k < ktop.lifts[u].cols(); ++k) {
            Matrix vec = ker.inclusion.components[u] * ktop.lifts[u].column(k);
            std::vector<Element> col;
            std::size_t offset = 0;
            for (std::size_t r = 0; r < gens_vertex.size(); ++r) {
                const auto& corner = alg->corner(gens_vertex[r], u);
                Element x = alg->zero();
                for (std::size_t c = 0; c < corner.size(); ++c) x[corner[c]] = vec(offset + c, 0);
                offset += corner.size();
                col.push_back(std::move(x));
            }
            rel_vertex.push_back(u);
            columns.push_back(std::move(col));
        }
    ProjMap d = ProjMap::zero(*alg, rel_vertex, gens_vertex);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < gens_vertex.size(); ++r) d.entries[r][c] = columns[c][r];
    return TwoTermComplex(alg, std::move(d));
}

struct ComplexSummand {
    TwoTermComplex complex;
    std::size_t multiplicity = 1;
};

/**
 * Indecomposable summands in K^b(proj Λ): a two-term complex is homotopy
 * equivalent to P_{H^0} ⊕ Q[1], where P_{H^0} is the minimal presentation of
 * its zeroth cohomology and [Q] = g(P_{H^0}) - g(C).
 */
inline std::vector<ComplexSummand> decompose_complex(const TwoTermComplex& c) {
    const auto& alg = c.algebra_ptr();
    std::vector<ComplexSummand> out;
    GVector rest = g_vector(c);
    for (auto& s : decompose(H0(c))) {
        auto pres = min_projective_presentation(s.module);
        auto g = g_vector(pres);
        for (std::size_t i = 0; i < g.size(); ++i) rest[i] -= g[i] * static_cast<long long>(s.multiplicity);
        out.push_back({std::move(pres), s.multiplicity});
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] > 0) throw std::logic_error("decompose_complex: negative shifted part");
        if (rest[i] < 0) out.push_back({TwoTermComplex::shifted(alg, {i}), static_cast<std::size_t>(-rest[i])});
    }
    return out;
}

/// Homotopy equivalence, decided by the g-vector and the isomorphism class of H^0.
inline bool homotopy_equivalent(const TwoTermComplex& a, const TwoTermComplex& b) {
    return g_vector(a) == g_vector(b) && is_isomorphic(H0(a), H0(b));
}

/// Reduced representative: contractible summands removed.
inline TwoTermComplex reduce_complex(const TwoTermComplex& c) {
    std::vector<TwoTermComplex> parts;
    for (const auto& s : decompose_complex(c))
        for (std::size_t k = 0; k < s.multiplicity; ++k) parts.push_back(s.complex);
    return direct_sum(parts, c.algebra_ptr());
}

// ---- notation ------------------------------------------------------------

/// Text notation for a class in K_0(proj Λ), positive terms first: "P_2 - P_3", "-P_1", "2P_1", "0".
inline std::string gvector_string(const GVector& g, const Quiver& q) {
    std::string out;
    auto emit = [&](std::size_t i) {
        long long a = g[i] < 0 ? -g[i] : g[i];
        std::string term = (a == 1 ? "" : std::to_string(a)) + "P_" + q.vertices[i];
        if (out.empty())
            out = (g[i] < 0 ? "-" : "") + term;
        else
            out += (g[i] < 0 ? " - " : " + ") + term;
    };
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > 0) emit(i);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] < 0) emit(i);
    return out.empty() ? "0" : out;
}

/// Inverse of gvector_string; accepts "P_2 - P_3", "-P_1", "2P_1+P_3", "0".
inline GVector parse_gvector(std::string_view text, const Quiver& q) {
    GVector g(q.num_vertices(), 0);
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s == "0") return g;
    if (s.empty()) throw QueryError("empty g-vector");
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw QueryError("malformed g-vector '" + std::string(text) + "'");
        }
        long long coeff = 0;
        std::size_t digits = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = coeff * 10 + (s[pos++] - '0');
            ++digits;
        }
        if (!digits) coeff = 1;
        if (s.compare(pos, 2, "P_") != 0) throw QueryError("malformed g-vector '" + std::string(text) + "'");
        pos += 2;
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string label = s.substr(pos, end - pos);
        std::size_t v = 0;
        try {
            v = q.vertex_index(label);
        } catch (const InputError&) {
            throw QueryError("unknown vertex '" + label + "' in g-vector");
        }
        g[v] += sign * coeff;
        pos = end;
        first = false;
    }
    return g;
}

// ---- JSON exchange ---------------------------------------------------------

inline nlohmann::json element_to_json(const Algebra& alg, const Element& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (!x[k]) continue;
        nlohmann::json path = nlohmann::json::array();
        for (auto a : alg.basis_path(k).arrows) path.push_back(alg.quiver().arrows[a].name);
        terms.push_back({{"path", path}, {"coeff", x[k]}});
    }
    return terms;
}

inline nlohmann::json complex_to_json(const TwoTermComplex& c) {
    const Quiver& q = c.algebra().quiver();
    nlohmann::json j;
    j["p_minus1"] = nlohmann::json::array();
    j["p_zero"] = nlohmann::json::array();
    for (auto v : c.p_minus1()) j["p_minus1"].push_back(q.vertices[v]);
    for (auto v : c.p_zero()) j["p_zero"].push_back(q.vertices[v]);
    nlohmann::json d = nlohmann::json::array();
    for (const auto& row : c.differential().entries) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& x : row) jr.push_back(element_to_json(c.algebra(), x));
        d.push_back(jr);
    }
    j["d"] = d;
    return j;
}

namespace detail {

inline Element element_from_json(const Algebra& alg, const nlohmann::json& j, std::size_t row_vertex,
                                 std::size_t col_vertex) {
    const Quiver& q = alg.quiver();
    Element x = alg.zero();
    auto add_term = [&](const nlohmann::json& t) {
        auto names = t.at("path").get<std::vector<std::string>>();
        Scalar coeff = reduce_mod(t.contains("coeff") ? t.at("coeff").get<std::int64_t>() : 1, alg.modulus());
        Path path{row_vertex, row_vertex, {}};
        for (const auto& name : names) {
            std::size_t a = q.arrow_index(name);
            if (q.arrows[a].source != path.target) throw InputError("complex: path does not compose");
            path.arrows.push_back(a);
            path.target = q.arrows[a].target;
        }
        if (path.target != col_vertex) throw InputError("complex: entry path does not match its corner");
        x = alg.add(x, alg.scale(alg.normal_form(path), coeff));
    };
    if (j.is_object())
        add_term(j);
    else
        for (const auto& t : j) add_term(t);
    return x;
}

}  // namespace detail

inline TwoTermComplex complex_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
    try {
        const Quiver& q = alg->quiver();
        std::vector<std::size_t> src, tgt;
        for (const auto& v : j.at("p_minus1")) src.push_back(q.vertex_index(v.get<std::string>()));
        for (const auto& v : j.at("p_zero")) tgt.push_back(q.vertex_index(v.get<std::string>()));
        ProjMap d = ProjMap::zero(*alg, src, tgt);
        if (j.contains("d") && !src.empty() && !tgt.empty()) {
            const auto& rows = j.at("d");
            if (rows.size() != tgt.size()) throw InputError("complex: d must have one row per P^0 summand");
            for (std::size_t r = 0; r < tgt.size(); ++r) {
                if (rows[r].size() != src.size())
                    throw InputError("complex: d must have one column per P^{-1} summand");
                for (std::size_t c = 0; c < src.size(); ++c)
                    d.entries[r][c] = detail::element_from_json(*alg, rows[r][c], tgt[r], src[c]);
            }
        }
        return TwoTermComplex(alg, std::move(d));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed complex: ") + e.what());
    }
}

}  // namespace tilt
