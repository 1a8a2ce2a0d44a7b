#pragma once

/**
 * @file module.hpp
 * @brief Finite-dimensional right Λ-modules as quiver representations.
 *
 * A Module stores one vector space dimension per vertex and one matrix per
 * arrow (an arrow a: i -> j is a dims[j] x dims[i] matrix). Morphisms are
 * per-vertex matrices that intertwine the arrow maps. Everything here is
 * exact linear algebra over F_p.
 */

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tilt/algebra.hpp"
#include "tilt/errors.hpp"
#include "tilt/field.hpp"

namespace tilt {

using DimVector = std::vector<std::size_t>;

/// z -> z * y for y in e_j Λ e_k, as a map e_i Λ e_j -> e_i Λ e_k.
inline Matrix right_mult_matrix(const Algebra& alg, const Element& y, std::size_t i, std::size_t j, std::size_t k) {
    const auto& from = alg.corner(i, j);
    const auto& to = alg.corner(i, k);
    const std::uint32_t p = alg.modulus();
    Matrix m(to.size(), from.size(), p);
    for (std::size_t c = 0; c < from.size(); ++c)
        for (std::size_t l = 0; l < alg.dim(); ++l) {
            if (!y[l]) continue;
            for (auto [idx, coeff] : alg.basis_product(from[c], l))
                m(alg.corner_position(idx), c) = add_mod(m(alg.corner_position(idx), c), mul_mod(coeff, y[l], p), p);
        }
    return m;
}

/// z -> x * z for x in e_i Λ e_j, as a map e_j Λ e_k -> e_i Λ e_k.
inline Matrix left_mult_matrix(const Algebra& alg, const Element& x, std::size_t i, std::size_t j, std::size_t k) {
    const auto& from = alg.corner(j, k);
    const auto& to = alg.corner(i, k);
    const std::uint32_t p = alg.modulus();
    Matrix m(to.size(), from.size(), p);
    for (std::size_t c = 0; c < from.size(); ++c)
        for (std::size_t l = 0; l < alg.dim(); ++l) {
            if (!x[l]) continue;
            for (auto [idx, coeff] : alg.basis_product(l, from[c]))
                m(alg.corner_position(idx), c) = add_mod(m(alg.corner_position(idx), c), mul_mod(coeff, x[l], p), p);
        }
    return m;
}

class Module {
public:
    Module() = default;

    Module(AlgebraPtr alg, DimVector dims, std::vector<Matrix> arrow_maps)
        : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrow_maps)) {
        const Quiver& q = alg_->quiver();
        if (dims_.size() != q.num_vertices()) throw InputError("dimension vector has wrong length");
        if (arrows_.size() != q.arrows.size()) throw InputError("wrong number of arrow matrices");
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
            const Matrix& m = arrows_[a];
            if (m.rows() != dims_[q.arrows[a].target] || m.cols() != dims_[q.arrows[a].source])
                throw InputError("arrow matrix '" + q.arrows[a].name + "' has the wrong shape");
            if (m.modulus() != alg_->modulus()) throw InputError("arrow matrix over the wrong field");
        }
    }

    static Module zero(AlgebraPtr alg) {
        DimVector dims(alg->num_vertices(), 0);
        std::vector<Matrix> arrows;
        for (std::size_t a = 0; a < alg->quiver().arrows.size(); ++a) arrows.emplace_back(0, 0, alg->modulus());
        return Module(std::move(alg), std::move(dims), std::move(arrows));
    }

    const Algebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    std::uint32_t modulus() const { return alg_->modulus(); }
    const DimVector& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto d : dims_) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& arrow_map(std::size_t a) const { return arrows_[a]; }
    const std::vector<Matrix>& arrow_maps() const { return arrows_; }

    /// Action of an arbitrary path, M_source -> M_target.
    Matrix path_action(const Path& path) const {
        Matrix m = Matrix::identity(dims_[path.source], modulus());
        for (auto a : path.arrows) m = arrows_[a] * m;
        return m;
    }

    /// Action of x in e_i Λ e_j, as a map M_i -> M_j.
    Matrix element_action(const Element& x, std::size_t i, std::size_t j) const {
        Matrix m(dims_[j], dims_[i], modulus());
        for (auto k : alg_->corner(i, j))
            if (x[k]) m = m + path_action(alg_->basis_path(k)).scaled(x[k]);
        return m;
    }

    /// Throws InputError when some relation does not act as zero.
    void check_relations() const {
        for (std::size_t r = 0; r < alg_->presentation().relations.size(); ++r) {
            const auto& rel = alg_->presentation().relations[r];
            const auto& first = rel.terms.front().path;
            Matrix sum(dims_[first.target], dims_[first.source], modulus());
            for (const auto& t : rel.terms) sum = sum + path_action(t.path).scaled(t.coeff);
            if (!sum.is_zero()) throw InputError("relation " + std::to_string(r) + " does not act as zero");
        }
    }

    friend bool operator==(const Module& a, const Module& b) {
        return a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
    }

private:
    AlgebraPtr alg_;
    DimVector dims_;
    std::vector<Matrix> arrows_;
};

/// Per-vertex linear maps f_v: M_v -> N_v.
struct Morphism {
    std::vector<Matrix> components;

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_isomorphism() const {
        for (const auto& c : components)
            if (!is_invertible(c)) return false;
        return true;
    }

    std::vector<Scalar> flatten() const {
        std::vector<Scalar> out;
        for (const auto& c : components) out.insert(out.end(), c.data().begin(), c.data().end());
        return out;
    }

    Morphism operator+(const Morphism& o) const {
        Morphism out;
        for (std::size_t v = 0; v < components.size(); ++v) out.components.push_back(components[v] + o.components[v]);
        return out;
    }

    Morphism scaled(Scalar s) const {
        Morphism out;
        for (const auto& c : components) out.components.push_back(c.scaled(s));
        return out;
    }
};

/// g ∘ f.
inline Morphism compose(const Morphism& g, const Morphism& f) {
    Morphism out;
    for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
    return out;
}

inline Morphism identity_morphism(const Module& m) {
    Morphism out;
    for (auto d : m.dims()) out.components.push_back(Matrix::identity(d, m.modulus()));
    return out;
}

inline Morphism zero_morphism(const Module& from, const Module& to) {
    Morphism out;
    for (std::size_t v = 0; v < from.dims().size(); ++v)
        out.components.emplace_back(to.dim(v), from.dim(v), from.modulus());
    return out;
}

inline bool is_morphism(const Module& from, const Module& to, const Morphism& f) {
    const Quiver& q = from.algebra().quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto s = q.arrows[a].source, t = q.arrows[a].target;
        if (!(to.arrow_map(a) * f.components[s] == f.components[t] * from.arrow_map(a))) return false;
    }
    return true;
}

struct HomSpace {
    std::vector<Morphism> basis;
    std::size_t dim() const { return basis.size(); }
};

/// Hom_Λ(M, N) by solving the intertwining equations exactly.
inline HomSpace hom_space(const Module& m, const Module& n) {
    const Algebra& alg = m.algebra();
    const Quiver& q = alg.quiver();
    const std::uint32_t p = alg.modulus();
    const std::size_t nv = q.num_vertices();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const std::size_t unknowns = offset[nv];

    std::size_t equations = 0;
    for (const auto& a : q.arrows) equations += n.dim(a.target) * m.dim(a.source);
    Matrix sys(equations, unknowns, p);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto s = q.arrows[ai].source, t = q.arrows[ai].target;
        const Matrix& ma = m.arrow_map(ai);
        const Matrix& na = n.arrow_map(ai);
        for (std::size_t r = 0; r < n.dim(t); ++r)
            for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
                // (N_a f_s)[r][c] - (f_t M_a)[r][c]
                for (std::size_t k = 0; k < n.dim(s); ++k) {
                    std::size_t col = offset[s] + k * m.dim(s) + c;
                    sys(row, col) = add_mod(sys(row, col), na(r, k), p);
                }
                for (std::size_t k = 0; k < m.dim(t); ++k) {
                    std::size_t col = offset[t] + r * m.dim(t) + k;
                    sys(row, col) = sub_mod(sys(row, col), ma(k, c), p);
                }
            }
    }
    Matrix ker = kernel(sys);
    HomSpace out;
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        Morphism f;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix comp(n.dim(v), m.dim(v), p);
            for (std::size_t r = 0; r < n.dim(v); ++r)
                for (std::size_t c = 0; c < m.dim(v); ++c) comp(r, c) = ker(offset[v] + r * m.dim(v) + c, b);
            f.components.push_back(std::move(comp));
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).dim(); }

/// Submodule spanned per vertex by the columns of `bases` (assumed closed and independent).
struct Inclusion {
    Module sub;
    Morphism inclusion;
};

inline Inclusion restrict_to(const Module& m, const std::vector<Matrix>& bases) {
    const Quiver& q = m.algebra().quiver();
    const std::uint32_t p = m.modulus();
    DimVector dims;
    for (const auto& b : bases) dims.push_back(b.cols());
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto s = q.arrows[a].source, t = q.arrows[a].target;
        Matrix image = m.arrow_map(a) * bases[s];
        if (dims[t] == 0) {
            arrows.emplace_back(0, dims[s], p);
            continue;
        }
        auto coords = solve(bases[t], image);
        if (!coords) throw std::logic_error("restrict_to: subspace is not a submodule");
        arrows.push_back(*coords);
    }
    Morphism inc{bases};
    return {Module(m.algebra_ptr(), std::move(dims), std::move(arrows)), std::move(inc)};
}

struct Projection {
    Module quotient;
    Morphism projection;
    std::vector<Matrix> lifts;  ///< per vertex, columns in M lifting the quotient basis
};

inline Projection quotient_by(const Module& m, const std::vector<Matrix>& sub_bases) {
    const Quiver& q = m.algebra().quiver();
    const std::uint32_t p = m.modulus();
    const std::size_t nv = q.num_vertices();
    std::vector<Matrix> comps, proj;
    DimVector dims;
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix sub = sub_bases[v].cols() ? column_space(sub_bases[v]) : Matrix(m.dim(v), 0, p);
        Matrix comp = complement_basis(sub, m.dim(v), p);
        // coordinates w.r.t. [sub | comp]; keep the comp part
        Matrix full = hstack({sub, comp}, m.dim(v), p);
        Matrix inv = m.dim(v) ? *inverse(full) : Matrix(0, 0, p);
        proj.push_back(inv.rows_range(sub.cols(), comp.cols()));
        comps.push_back(comp);
        dims.push_back(comp.cols());
    }
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto s = q.arrows[a].source, t = q.arrows[a].target;
        arrows.push_back(proj[t] * m.arrow_map(a) * comps[s]);
    }
    return {Module(m.algebra_ptr(), std::move(dims), std::move(arrows)), Morphism{proj}, comps};
}

inline Inclusion kernel_of(const Module& from, const Morphism& f) {
    std::vector<Matrix> bases;
    for (const auto& c : f.components) bases.push_back(kernel(c));
    return restrict_to(from, bases);
}

inline std::vector<Matrix> image_bases(const Morphism& f, const Module& to) {
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < f.components.size(); ++v)
        bases.push_back(f.components[v].cols() ? column_space(f.components[v]) : Matrix(to.dim(v), 0, to.modulus()));
    return bases;
}

inline Inclusion image_of(const Module& to, const Morphism& f) { return restrict_to(to, image_bases(f, to)); }

inline Projection cokernel_of(const Module& to, const Morphism& f) { return quotient_by(to, image_bases(f, to)); }

inline Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& alg) {
    const Quiver& q = alg->quiver();
    DimVector dims(q.num_vertices(), 0);
    for (const auto& m : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += m.dim(v);
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& m : parts) blocks.push_back(m.arrow_map(a));
        arrows.push_back(block_diagonal(blocks, alg->modulus()));
    }
    return Module(alg, std::move(dims), std::move(arrows));
}

inline Module direct_sum(const Module& a, const Module& b) { return direct_sum({a, b}, a.algebra_ptr()); }

/// rad M at each vertex: the sum of the images of the incoming arrows.
inline std::vector<Matrix> radical_bases(const Module& m) {
    const Quiver& q = m.algebra().quiver();
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        std::vector<Matrix> images;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].target == v) images.push_back(m.arrow_map(a));
        Matrix all = hstack(images, m.dim(v), m.modulus());
        bases.push_back(all.cols() ? column_space(all) : Matrix(m.dim(v), 0, m.modulus()));
    }
    return bases;
}

struct TopAndRadical {
    std::vector<std::size_t> top;  ///< multiplicity of S_i in M / rad M
    Module radical;
};

inline TopAndRadical top_and_radical(const Module& m) {
    auto rad = radical_bases(m);
    TopAndRadical out;
    for (std::size_t v = 0; v < rad.size(); ++v) out.top.push_back(m.dim(v) - rad[v].cols());
    out.radical = restrict_to(m, rad).sub;
    return out;
}

/// Dimension vectors of the Loewy layers rad^k M / rad^{k+1} M.
inline std::vector<DimVector> loewy_layers(const Module& m) {
    std::vector<DimVector> layers;
    Module current = m;
    while (!current.is_zero()) {
        auto tr = top_and_radical(current);
        layers.push_back(tr.top);
        current = tr.radical;
    }
    return layers;
}

/// Human-readable label "1/2/3" listing Loewy layers top to bottom; "0" for the zero module.
inline std::string module_label(const Module& m) {
    if (m.is_zero()) return "0";
    const auto& labels = m.algebra().quiver().vertices;
    std::string out;
    for (const auto& layer : loewy_layers(m)) {
        if (!out.empty()) out += "/";
        std::string part;
        for (std::size_t v = 0; v < layer.size(); ++v)
            for (std::size_t k = 0; k < layer[v]; ++k) part += (part.empty() ? "" : "+") + labels[v];
        out += part;
    }
    return out;
}

// ---- standard modules -------------------------------------------------------

/// ⊕_r P_{vertices[r]}; at vertex w the block r has basis corner(vertices[r], w).
inline Module projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices) {
    const Quiver& q = alg->quiver();
    const std::uint32_t p = alg->modulus();
    DimVector dims(q.num_vertices(), 0);
    for (auto j : vertices)
        for (std::size_t w = 0; w < dims.size(); ++w) dims[w] += alg->corner(j, w).size();
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto s = q.arrows[a].source, t = q.arrows[a].target;
        Element arrow = alg->normal_form(Path{s, t, {a}});
        std::vector<Matrix> blocks;
        for (auto j : vertices) blocks.push_back(right_mult_matrix(*alg, arrow, j, s, t));
        arrows.push_back(block_diagonal(blocks, p));
    }
    return Module(alg, std::move(dims), std::move(arrows));
}

/// ⊕_c I_{vertices[c]} with I_i = D(Λ e_i); at vertex v the block c is dual to corner(v, vertices[c]).
inline Module injective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& vertices) {
    const Quiver& q = alg->quiver();
    const std::uint32_t p = alg->modulus();
    DimVector dims(q.num_vertices(), 0);
    for (auto i : vertices)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += alg->corner(v, i).size();
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto s = q.arrows[a].source, t = q.arrows[a].target;
        Element arrow = alg->normal_form(Path{s, t, {a}});
        std::vector<Matrix> blocks;
        for (auto i : vertices) blocks.push_back(left_mult_matrix(*alg, arrow, s, t, i).transpose());
        arrows.push_back(block_diagonal(blocks, p));
    }
    return Module(alg, std::move(dims), std::move(arrows));
}

inline Module simple_module(const AlgebraPtr& alg, std::size_t i) {
    const Quiver& q = alg->quiver();
    DimVector dims(q.num_vertices(), 0);
    dims[i] = 1;
    std::vector<Matrix> arrows;
    for (const auto& a : q.arrows) arrows.emplace_back(dims[a.target], dims[a.source], alg->modulus());
    return Module(alg, std::move(dims), std::move(arrows));
}

enum class StandardKind { simple, projective, injective };

inline Module standard_module(const AlgebraPtr& alg, StandardKind kind, std::size_t vertex) {
    if (vertex >= alg->num_vertices()) throw InputError("unknown vertex index " + std::to_string(vertex));
    switch (kind) {
    case StandardKind::simple: return simple_module(alg, vertex);
    case StandardKind::projective: return projective_sum(alg, {vertex});
    case StandardKind::injective: return injective_sum(alg, {vertex});
    }
    throw std::logic_error("unreachable");
}

inline Module standard_module(const AlgebraPtr& alg, StandardKind kind, std::string_view label) {
    return standard_module(alg, kind, alg->quiver().vertex_index(label));
}

// ---- Fac / Sub ---------------------------------------------------------------

/// N ∈ Fac M: the images of all morphisms M -> N jointly span N.
inline bool fac_membership(const Module& m, const Module& n) {
    auto hom = hom_space(m, n);
    for (std::size_t v = 0; v < n.dims().size(); ++v) {
        if (n.dim(v) == 0) continue;
        std::vector<Matrix> images;
        for (const auto& f : hom.basis) images.push_back(f.components[v]);
        if (rank(hstack(images, n.dim(v), n.modulus())) != n.dim(v)) return false;
    }
    return true;
}

/// N ∈ Sub M: the morphisms N -> M have zero joint kernel.
inline bool sub_membership(const Module& m, const Module& n) {
    auto hom = hom_space(n, m);
    for (std::size_t v = 0; v < n.dims().size(); ++v) {
        if (n.dim(v) == 0) continue;
        std::vector<Matrix> comps;
        for (const auto& f : hom.basis) comps.push_back(f.components[v]);
        if (rank(vstack(comps, n.dim(v), n.modulus())) != n.dim(v)) return false;
    }
    return true;
}

// ---- submodules ------------------------------------------------------------

/// Default guard on dim M for submodule enumeration.
inline constexpr std::size_t kDefaultSubmoduleBound = 12;

namespace detail {

using SubmoduleKey = std::vector<Matrix>;

inline SubmoduleKey canonical_key(const std::vector<Matrix>& bases) {
    SubmoduleKey key;
    for (const auto& b : bases) key.push_back(canonical_span(b));
    return key;
}

inline std::vector<Matrix> key_bases(const SubmoduleKey& key) {
    std::vector<Matrix> bases;
    for (const auto& k : key) bases.push_back(k.transpose());
    return bases;
}

}  // namespace detail

/// The submodule generated by a vector sitting at one vertex.
inline std::vector<Matrix> cyclic_submodule(const Module& m, std::size_t vertex, const Matrix& vec) {
    const Algebra& alg = m.algebra();
    std::vector<Matrix> bases;
    for (std::size_t w = 0; w < alg.num_vertices(); ++w) {
        std::vector<Matrix> images;
        for (auto k : alg.corner(vertex, w)) images.push_back(m.path_action(alg.basis_path(k)) * vec);
        Matrix all = hstack(images, m.dim(w), m.modulus());
        bases.push_back(all.cols() ? column_space(all) : Matrix(m.dim(w), 0, m.modulus()));
    }
    return bases;
}

/// Every submodule of M, as per-vertex bases, enumerated through cyclic generators.
inline std::vector<std::vector<Matrix>> all_submodules(const Module& m,
                                                       std::size_t bound = kDefaultSubmoduleBound) {
    if (m.total_dim() > bound)
        throw LimitError("module too large for submodule enumeration (dim " + std::to_string(m.total_dim()) + ")");
    const std::uint32_t p = m.modulus();
    const std::size_t nv = m.dims().size();

    std::vector<std::vector<Matrix>> cyclic;
    std::set<detail::SubmoduleKey> cyclic_seen;
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t d = m.dim(v);
        if (d == 0) continue;
        // nonzero vectors whose first nonzero coordinate is 1
        std::vector<Scalar> coords(d, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t code = 1; code < total; ++code) {
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                coords[i] = static_cast<Scalar>(c % p);
                c /= p;
            }
            auto lead = std::find_if(coords.begin(), coords.end(), [](Scalar x) { return x != 0; });
            if (*lead != 1) continue;
            auto gen = cyclic_submodule(m, v, Matrix::column_vector(coords, p));
            auto key = detail::canonical_key(gen);
            if (cyclic_seen.insert(key).second) cyclic.push_back(detail::key_bases(key));
        }
    }

    std::set<detail::SubmoduleKey> seen;
    std::vector<detail::SubmoduleKey> order;
    std::vector<Matrix> zero;
    for (std::size_t v = 0; v < nv; ++v) zero.emplace_back(m.dim(v), 0, p);
    auto zkey = detail::canonical_key(zero);
    seen.insert(zkey);
    order.push_back(zkey);
    for (std::size_t head = 0; head < order.size(); ++head) {
        auto bases = detail::key_bases(order[head]);
        for (const auto& c : cyclic) {
            std::vector<Matrix> sum;
            for (std::size_t v = 0; v < nv; ++v) sum.push_back(span_sum(bases[v], c[v]));
            auto key = detail::canonical_key(sum);
            if (seen.insert(key).second) order.push_back(key);
        }
    }
    std::vector<std::vector<Matrix>> out;
    for (const auto& key : order) out.push_back(detail::key_bases(key));
    return out;
}

inline std::set<DimVector> submodule_dim_vectors(const Module& m, std::size_t bound = kDefaultSubmoduleBound) {
    std::set<DimVector> out;
    for (const auto& bases : all_submodules(m, bound)) {
        DimVector d;
        for (const auto& b : bases) d.push_back(b.cols());
        out.insert(d);
    }
    return out;
}

// ---- JSON exchange ---------------------------------------------------------

inline nlohmann::json module_to_json(const Module& m) {
    nlohmann::json j;
    j["dims"] = m.dims();
    nlohmann::json arrows = nlohmann::json::object();
    const Quiver& q = m.algebra().quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& mat = m.arrow_map(a);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
            rows.push_back(row);
        }
        arrows[q.arrows[a].name] = rows;
    }
    j["arrows"] = arrows;
    return j;
}

inline Module module_from_json(const AlgebraPtr& alg, const nlohmann::json& j) {
    try {
        const Quiver& q = alg->quiver();
        auto dims = j.at("dims").get<DimVector>();
        if (dims.size() != q.num_vertices()) throw InputError("module: dims has wrong length");
        std::vector<Matrix> arrows;
        for (const auto& a : q.arrows) {
            Matrix m(dims[a.target], dims[a.source], alg->modulus());
            if (j.at("arrows").contains(a.name)) {
                const auto& rows = j.at("arrows").at(a.name);
                if (rows.size() != m.rows()) throw InputError("module: arrow '" + a.name + "' has wrong row count");
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (rows[r].size() != m.cols())
                        throw InputError("module: arrow '" + a.name + "' has wrong column count");
                    for (std::size_t c = 0; c < m.cols(); ++c)
                        m(r, c) = reduce_mod(rows[r][c].get<std::int64_t>(), alg->modulus());
                }
            } else if (m.rows() && m.cols()) {
                throw InputError("module: missing matrix for arrow '" + a.name + "'");
            }
            arrows.push_back(std::move(m));
        }
        Module out(alg, std::move(dims), std::move(arrows));
        out.check_relations();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed module: ") + e.what());
    }
}

}  // namespace tilt
