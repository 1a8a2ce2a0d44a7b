#pragma once

/**
 * @file decompose.hpp
 * @brief Krull-Schmidt decomposition, isomorphism tests and enumeration of
 *        indecomposable modules by bounded search.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tilt/module.hpp"

namespace tilt {

/// Default bound on the number of elements of End(M)/R0 visited while searching.
inline constexpr std::uint64_t kDefaultEndSearchBound = 1u << 16;

namespace detail {

/// The induced endomorphisms of top M, one per End-basis element, flattened.
struct TopAction {
    HomSpace end;
    std::vector<Matrix> top;  ///< square matrix on top M, per End-basis element
    std::size_t top_dim = 0;
};

inline TopAction top_action(const Module& m) {
    TopAction out;
    out.end = hom_space(m, m);
    auto q = quotient_by(m, radical_bases(m));
    for (auto d : q.quotient.dims()) out.top_dim += d;
    for (const auto& f : out.end.basis) {
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < m.dims().size(); ++v)
            blocks.push_back(q.projection.components[v] * f.components[v] * q.lifts[v]);
        out.top.push_back(block_diagonal(blocks, m.modulus()));
    }
    return out;
}

inline Matrix flatten_column(const Matrix& m) {
    Matrix col(m.rows() * m.cols(), 1, m.modulus());
    for (std::size_t i = 0; i < m.data().size(); ++i) col(i, 0) = m.data()[i];
    return col;
}

inline bool is_nilpotent(const Matrix& a) { return a.rows() == 0 || power(a, a.rows()).is_zero(); }

/// Calls visit(coeffs) for every nonzero combination over the given index set.
template <typename Visit>
bool for_each_combination(std::size_t count, std::uint32_t p, std::uint64_t bound, Visit&& visit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < count; ++i) {
        total *= p;
        if (total > bound) throw LimitError("End ring too large to search");
    }
    std::vector<Scalar> coeffs(count, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < count; ++i) {
            coeffs[i] = static_cast<Scalar>(c % p);
            c /= p;
        }
        if (visit(coeffs)) return true;
    }
    return false;
}

/// Indices of End-basis elements whose top actions are linearly independent.
inline std::vector<std::size_t> independent_tops(const TopAction& ta, std::uint32_t p) {
    std::vector<std::size_t> chosen;
    Matrix acc(ta.top_dim * ta.top_dim, 0, p);
    for (std::size_t k = 0; k < ta.top.size(); ++k) {
        Matrix trial = hstack({acc, flatten_column(ta.top[k])}, acc.rows(), p);
        if (rank(trial) > acc.cols()) {
            acc = trial;
            chosen.push_back(k);
        }
    }
    return chosen;
}

inline Morphism combine(const HomSpace& hom, const std::vector<std::size_t>& idx, const std::vector<Scalar>& coeffs) {
    Morphism f = hom.basis[idx[0]].scaled(coeffs[0]);
    for (std::size_t i = 1; i < idx.size(); ++i) f = f + hom.basis[idx[i]].scaled(coeffs[i]);
    return f;
}

inline Matrix combine_top(const TopAction& ta, const std::vector<std::size_t>& idx, const std::vector<Scalar>& coeffs) {
    Matrix a = ta.top[idx[0]].scaled(coeffs[0]);
    for (std::size_t i = 1; i < idx.size(); ++i) a = a + ta.top[idx[i]].scaled(coeffs[i]);
    return a;
}

}  // namespace detail

/// An endomorphism that is neither nilpotent nor invertible, if End(M) is not local.
inline std::optional<Morphism> find_splitting_endomorphism(const Module& m,
                                                           std::uint64_t bound = kDefaultEndSearchBound) {
    if (m.is_zero()) return std::nullopt;
    auto ta = detail::top_action(m);
    if (ta.end.dim() <= 1) return std::nullopt;
    auto idx = detail::independent_tops(ta, m.modulus());
    std::optional<Morphism> found;
    detail::for_each_combination(idx.size(), m.modulus(), bound, [&](const std::vector<Scalar>& c) {
        Matrix a = detail::combine_top(ta, idx, c);
        if (detail::is_nilpotent(a) || is_invertible(a)) return false;
        found = detail::combine(ta.end, idx, c);
        return true;
    });
    return found;
}

inline bool is_indecomposable(const Module& m, std::uint64_t bound = kDefaultEndSearchBound) {
    return !m.is_zero() && !find_splitting_endomorphism(m, bound);
}

/// Basis of rad End(M) for an indecomposable M (End(M) local).
inline std::vector<Morphism> local_radical(const Module& m, std::uint64_t bound = kDefaultEndSearchBound) {
    auto ta = detail::top_action(m);
    const std::uint32_t p = m.modulus();
    std::vector<Morphism> gens;
    // R0: End-coefficients whose top action vanishes
    {
        std::vector<Matrix> cols;
        for (const auto& t : ta.top) cols.push_back(detail::flatten_column(t));
        Matrix sys = hstack(cols, ta.top_dim * ta.top_dim, p);
        Matrix ker = kernel(sys);
        for (std::size_t b = 0; b < ker.cols(); ++b) {
            Morphism f = zero_morphism(m, m);
            for (std::size_t k = 0; k < ta.end.dim(); ++k)
                if (ker(k, b)) f = f + ta.end.basis[k].scaled(ker(k, b));
            gens.push_back(f);
        }
    }
    auto idx = detail::independent_tops(ta, p);
    if (!idx.empty())
        detail::for_each_combination(idx.size(), p, bound, [&](const std::vector<Scalar>& c) {
            if (detail::is_nilpotent(detail::combine_top(ta, idx, c))) gens.push_back(detail::combine(ta.end, idx, c));
            return false;
        });
    // reduce to a basis
    std::vector<Morphism> basis;
    Matrix acc(0, 0, p);
    bool first = true;
    for (const auto& g : gens) {
        auto flat = g.flatten();
        Matrix col = Matrix::column_vector(flat, p);
        if (first) {
            acc = Matrix(col.rows(), 0, p);
            first = false;
        }
        Matrix trial = hstack({acc, col}, acc.rows(), p);
        if (rank(trial) > acc.cols()) {
            acc = trial;
            basis.push_back(g);
        }
    }
    return basis;
}

/// Isomorphism test for two indecomposable modules.
inline bool is_isomorphic_indecomposable(const Module& m, const Module& n) {
    if (m.dims() != n.dims()) return false;
    if (m.is_zero()) return true;
    auto mn = hom_space(m, n);
    if (mn.dim() == 0) return false;
    auto nm = hom_space(n, m);
    for (const auto& f : mn.basis)
        for (const auto& g : nm.basis)
            if (compose(g, f).is_isomorphism()) return true;
    return false;
}

struct Summand {
    Module module;
    std::size_t multiplicity = 1;
};

namespace detail {

inline void split_into(const Module& m, std::vector<Module>& out, std::uint64_t bound) {
    if (m.is_zero()) return;
    auto f = find_splitting_endomorphism(m, bound);
    if (!f) {
        out.push_back(m);
        return;
    }
    // Fitting: M = im f^N ⊕ ker f^N
    Morphism fn = identity_morphism(m);
    for (std::size_t k = 0; k < m.total_dim(); ++k) fn = compose(*f, fn);
    split_into(image_of(m, fn).sub, out, bound);
    split_into(kernel_of(m, fn).sub, out, bound);
}

inline bool canonical_less(const Module& a, const Module& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims() != b.dims()) return a.dims() > b.dims();
    return a.arrow_maps() < b.arrow_maps();
}

}  // namespace detail

/// Indecomposable summands with multiplicities, in a canonical order.
inline std::vector<Summand> decompose(const Module& m, std::uint64_t bound = kDefaultEndSearchBound) {
    std::vector<Module> pieces;
    detail::split_into(m, pieces, bound);
    std::sort(pieces.begin(), pieces.end(), detail::canonical_less);
    std::vector<Summand> out;
    for (const auto& piece : pieces) {
        bool merged = false;
        for (auto& s : out)
            if (is_isomorphic_indecomposable(s.module, piece)) {
                ++s.multiplicity;
                merged = true;
                break;
            }
        if (!merged) out.push_back({piece, 1});
    }
    return out;
}

inline bool is_isomorphic(const Module& m, const Module& n, std::uint64_t bound = kDefaultEndSearchBound) {
    if (m.dims() != n.dims()) return false;
    auto dm = decompose(m, bound);
    auto dn = decompose(n, bound);
    if (dm.size() != dn.size()) return false;
    std::vector<bool> used(dn.size(), false);
    for (const auto& s : dm) {
        bool matched = false;
        for (std::size_t k = 0; k < dn.size() && !matched; ++k)
            if (!used[k] && dn[k].multiplicity == s.multiplicity &&
                is_isomorphic_indecomposable(s.module, dn[k].module)) {
                used[k] = true;
                matched = true;
            }
        if (!matched) return false;
    }
    return true;
}

/// Default dimension bound: the largest total dimension of an indecomposable projective or injective.
inline std::size_t default_dim_bound(const AlgebraPtr& alg) {
    std::size_t bound = 1;
    for (std::size_t i = 0; i < alg->num_vertices(); ++i) {
        bound = std::max(bound, projective_sum(alg, {i}).total_dim());
        bound = std::max(bound, injective_sum(alg, {i}).total_dim());
    }
    return bound;
}

/// Limit on arrow-matrix tuples tried per dimension vector.
inline constexpr std::uint64_t kMaxRepresentationTuples = 1u << 22;

namespace detail {

inline void dim_vectors_upto(std::size_t n, std::size_t total, DimVector& cur, std::vector<DimVector>& out) {
    if (cur.size() == n) {
        std::size_t s = 0;
        for (auto d : cur) s += d;
        if (s > 0) out.push_back(cur);
        return;
    }
    std::size_t used = 0;
    for (auto d : cur) used += d;
    for (std::size_t d = 0; d + used <= total; ++d) {
        cur.push_back(d);
        dim_vectors_upto(n, total, cur, out);
        cur.pop_back();
    }
}

/// Support of d is connected in the underlying graph of the quiver.
inline bool connected_support(const Quiver& q, const DimVector& d) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v]) support.push_back(v);
    if (support.empty()) return false;
    std::vector<bool> seen(d.size(), false);
    std::vector<std::size_t> stack{support[0]};
    seen[support[0]] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& a : q.arrows) {
            std::size_t w = SIZE_MAX;
            if (a.source == v) w = a.target;
            if (a.target == v) w = a.source;
            if (w != SIZE_MAX && d[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    for (auto v : support)
        if (!seen[v]) return false;
    return true;
}

}  // namespace detail

/// Indecomposables for one dimension vector, up to isomorphism.
inline std::vector<Module> indecomposables_with_dims(const AlgebraPtr& alg, const DimVector& dims) {
    const Quiver& q = alg->quiver();
    const std::uint32_t p = alg->modulus();
    if (!detail::connected_support(q, dims)) return {};
    std::size_t entries = 0;
    for (const auto& a : q.arrows) entries += dims[a.target] * dims[a.source];
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        total *= p;
        if (total > kMaxRepresentationTuples)
            throw LimitError("too many representations to enumerate for a dimension vector; lower --dim-bound");
    }
    std::vector<Module> found;
    std::vector<Scalar> digits(entries, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < entries; ++i) {
            digits[i] = static_cast<Scalar>(c % p);
            c /= p;
        }
        std::vector<Matrix> arrows;
        std::size_t pos = 0;
        for (const auto& a : q.arrows) {
            Matrix m(dims[a.target], dims[a.source], p);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = digits[pos++];
            arrows.push_back(std::move(m));
        }
        Module m(alg, dims, std::move(arrows));
        try {
            m.check_relations();
        } catch (const InputError&) {
            continue;
        }
        if (!is_indecomposable(m)) continue;
        bool seen = false;
        for (const auto& f : found)
            if (is_isomorphic_indecomposable(f, m)) {
                seen = true;
                break;
            }
        if (!seen) found.push_back(std::move(m));
    }
    return found;
}

/// All indecomposables of total dimension <= bound, up to isomorphism, canonically ordered.
inline std::vector<Module> enumerate_indecomposables(const AlgebraPtr& alg, std::size_t bound) {
    std::vector<DimVector> dvs;
    DimVector cur;
    detail::dim_vectors_upto(alg->num_vertices(), bound, cur, dvs);
    std::vector<Module> out;
    for (const auto& d : dvs) {
        auto part = indecomposables_with_dims(alg, d);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::stable_sort(out.begin(), out.end(), detail::canonical_less);
    return out;
}

}  // namespace tilt
