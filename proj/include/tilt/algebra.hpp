#pragma once

/**
 * @file algebra.hpp
 * @brief Quivers with admissible relations over F_p and the path basis of
 *        the finite-dimensional quotient algebra.
 *
 * Conventions (fixed throughout the library):
 *   - a path "ab" is arrow a followed by arrow b;
 *   - modules are right modules, so an arrow a: i -> j acts as a linear map
 *     M_i -> M_j and a path acts by the composite in reading order;
 *   - e_i Λ e_j is spanned by the residue paths starting at i and ending at j,
 *     which is also Hom(P_j, P_i) acting by left multiplication.
 */

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tilt/errors.hpp"
#include "tilt/field.hpp"

namespace tilt {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t num_vertices() const { return vertices.size(); }

    std::size_t vertex_index(std::string_view label) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == label) return i;
        throw InputError("unknown vertex '" + std::string(label) + "'");
    }

    std::size_t arrow_index(std::string_view name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name) return i;
        throw InputError("unknown arrow '" + std::string(name) + "'");
    }
};

/// A path in the quiver; trivial paths carry no arrows and source == target.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }

    friend bool operator<(const Path& a, const Path& b) {
        return std::tie(a.source, a.target, a.arrows) < std::tie(b.source, b.target, b.arrows);
    }
    friend bool operator==(const Path& a, const Path& b) {
        return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
    }
};

struct RelationTerm {
    Scalar coeff = 1;
    Path path;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct AlgebraPresentation {
    std::uint32_t characteristic = 2;
    Quiver quiver;
    std::vector<Relation> relations;
    std::size_t path_cap = 10;
};

namespace detail {

inline Path make_path(const Quiver& q, const std::vector<std::string>& names, std::size_t where) {
    if (names.empty()) throw InputError("relation " + std::to_string(where) + ": empty path");
    Path path;
    for (std::size_t k = 0; k < names.size(); ++k) {
        std::size_t a = q.arrow_index(names[k]);
        if (k == 0)
            path.source = q.arrows[a].source;
        else if (q.arrows[path.arrows.back()].target != q.arrows[a].source)
            throw InputError("relation " + std::to_string(where) + ": arrows do not compose");
        path.arrows.push_back(a);
    }
    path.target = q.arrows[path.arrows.back()].target;
    return path;
}

}  // namespace detail

/// Parse and validate the JSON algebra definition.
inline AlgebraPresentation parse_algebra(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed algebra file: ") + e.what());
    }
    AlgebraPresentation out;
    try {
        if (doc.contains("field")) out.characteristic = doc.at("field").at("p").get<std::uint32_t>();
        if (!is_prime(out.characteristic))
            throw InputError("field characteristic " + std::to_string(out.characteristic) + " is not prime");
        if (out.characteristic > 46337) throw InputError("field characteristic too large");
        for (const auto& v : doc.at("vertices")) {
            auto label = v.get<std::string>();
            for (const auto& existing : out.quiver.vertices)
                if (existing == label) throw InputError("duplicate vertex '" + label + "'");
            out.quiver.vertices.push_back(label);
        }
        if (out.quiver.vertices.empty()) throw InputError("quiver has no vertices");
        if (doc.contains("arrows")) {
            for (const auto& a : doc.at("arrows")) {
                Arrow arrow;
                arrow.name = a.at("name").get<std::string>();
                for (const auto& existing : out.quiver.arrows)
                    if (existing.name == arrow.name) throw InputError("duplicate arrow '" + arrow.name + "'");
                arrow.source = out.quiver.vertex_index(a.at("from").get<std::string>());
                arrow.target = out.quiver.vertex_index(a.at("to").get<std::string>());
                out.quiver.arrows.push_back(arrow);
            }
        }
        if (doc.contains("relations")) {
            std::size_t where = 0;
            for (const auto& r : doc.at("relations")) {
                Relation rel;
                for (const auto& t : r.at("terms")) {
                    RelationTerm term;
                    term.coeff = reduce_mod(t.at("coeff").get<std::int64_t>(), out.characteristic);
                    term.path = detail::make_path(out.quiver, t.at("path").get<std::vector<std::string>>(), where);
                    if (term.path.length() < 2)
                        throw InputError("non-admissible relation " + std::to_string(where) +
                                         ": paths must have length >= 2");
                    rel.terms.push_back(term);
                }
                if (rel.terms.empty()) throw InputError("relation " + std::to_string(where) + " has no terms");
                for (const auto& t : rel.terms)
                    if (t.path.source != rel.terms.front().path.source ||
                        t.path.target != rel.terms.front().path.target)
                        throw InputError("relation " + std::to_string(where) + ": paths are not parallel");
                out.relations.push_back(std::move(rel));
                ++where;
            }
        }
        if (doc.contains("path_cap")) out.path_cap = doc.at("path_cap").get<std::size_t>();
        if (out.path_cap == 0) throw InputError("path_cap must be positive");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed algebra file: ") + e.what());
    }
    return out;
}

inline AlgebraPresentation load_algebra(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open algebra file " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

/// Dense coordinates with respect to the path basis of Λ.
using Element = std::vector<Scalar>;

/**
 * The finite-dimensional algebra Λ = kQ/I with an explicit basis of residue
 * paths and its structure constants. Immutable once built.
 *
 * Basis order: trivial paths e_0..e_{n-1} first, then arrows in declaration
 * order, then longer residue paths by (length, arrow sequence).
 */
class Algebra {
public:
    /// Limit on the number of paths explored while building the basis.
    static constexpr std::size_t kMaxPaths = 200000;

    static std::shared_ptr<const Algebra> build(AlgebraPresentation presentation) {
        return std::shared_ptr<const Algebra>(new Algebra(std::move(presentation)));
    }

    const AlgebraPresentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver; }
    std::size_t num_vertices() const { return pres_.quiver.num_vertices(); }
    std::uint32_t modulus() const { return pres_.characteristic; }
    std::size_t dim() const { return basis_.size(); }

    const Path& basis_path(std::size_t k) const { return basis_[k]; }

    /// Basis indices of e_i Λ e_j (residue paths from i to j).
    const std::vector<std::size_t>& corner(std::size_t i, std::size_t j) const {
        return corners_[i * num_vertices() + j];
    }
    /// Position of basis element k inside its corner list.
    std::size_t corner_position(std::size_t k) const { return corner_pos_[k]; }

    Element zero() const { return Element(dim(), 0); }
    Element basis_element(std::size_t k) const {
        Element e = zero();
        e[k] = 1;
        return e;
    }
    Element idempotent(std::size_t vertex) const { return basis_element(vertex); }
    Element unit() const {
        Element e = zero();
        for (std::size_t i = 0; i < num_vertices(); ++i) e[i] = 1;
        return e;
    }

    /// Sparse product of two basis elements: (index, coefficient) pairs.
    const std::vector<std::pair<std::size_t, Scalar>>& basis_product(std::size_t k, std::size_t l) const {
        return table_[k * dim() + l];
    }

    Element multiply(const Element& x, const Element& y) const {
        const std::uint32_t p = modulus();
        Element out = zero();
        for (std::size_t k = 0; k < dim(); ++k) {
            if (!x[k]) continue;
            for (std::size_t l = 0; l < dim(); ++l) {
                if (!y[l]) continue;
                Scalar c = mul_mod(x[k], y[l], p);
                for (auto [idx, coeff] : basis_product(k, l)) out[idx] = add_mod(out[idx], mul_mod(c, coeff, p), p);
            }
        }
        return out;
    }

    Element add(const Element& x, const Element& y) const {
        Element out(x);
        for (std::size_t k = 0; k < dim(); ++k) out[k] = add_mod(out[k], y[k], modulus());
        return out;
    }

    Element scale(const Element& x, Scalar s) const {
        Element out(x);
        for (auto& c : out) c = mul_mod(c, s % modulus(), modulus());
        return out;
    }

    bool is_zero(const Element& x) const {
        return std::all_of(x.begin(), x.end(), [](Scalar c) { return c == 0; });
    }

    /// Residue of an arbitrary path in the basis.
    Element normal_form(const Path& path) const {
        Element out = zero();
        if (path.length() >= pres_.path_cap) return out;
        auto it = path_index_.find(path);
        if (it == path_index_.end()) return out;
        for (auto [idx, coeff] : normal_forms_[it->second]) out[idx] = coeff;
        return out;
    }

    Element evaluate(const Relation& r) const {
        Element out = zero();
        for (const auto& t : r.terms) out = add(out, scale(normal_form(t.path), t.coeff));
        return out;
    }

    /// True when x lies in e_i Λ e_j.
    bool in_corner(const Element& x, std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < dim(); ++k)
            if (x[k] && (basis_[k].source != i || basis_[k].target != j)) return false;
        return true;
    }

    std::string path_name(const Path& path) const {
        if (path.arrows.empty()) return "e_" + quiver().vertices[path.source];
        std::string s;
        for (auto a : path.arrows) s += quiver().arrows[a].name;
        return s;
    }

    std::string element_name(const Element& x) const {
        std::string s;
        for (std::size_t k = 0; k < dim(); ++k) {
            if (!x[k]) continue;
            if (!s.empty()) s += " + ";
            if (x[k] != 1) s += std::to_string(x[k]) + "*";
            s += path_name(basis_[k]);
        }
        return s.empty() ? "0" : s;
    }

private:
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

    explicit Algebra(AlgebraPresentation presentation) : pres_(std::move(presentation)) { build_basis(); }

    std::vector<Path> enumerate_paths(std::size_t max_length) const {
        const Quiver& q = quiver();
        std::vector<Path> all;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) all.push_back(Path{v, v, {}});
        std::size_t frontier_begin = 0;
        for (std::size_t len = 1; len <= max_length; ++len) {
            std::size_t frontier_end = all.size();
            for (std::size_t i = frontier_begin; i < frontier_end; ++i)
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    if (q.arrows[a].source != all[i].target) continue;
                    Path ext = all[i];
                    ext.arrows.push_back(a);
                    ext.target = q.arrows[a].target;
                    all.push_back(std::move(ext));
                    if (all.size() > kMaxPaths)
                        throw LimitError("too many paths below path_cap; reduce path_cap");
                }
            frontier_begin = frontier_end;
        }
        return all;
    }

    static Path concat(const Path& a, const Path& b) {
        Path out{a.source, b.target, a.arrows};
        out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
        return out;
    }

    // Ideal generators u r v restricted to paths of length < limit (exact=false)
    // or only those whose every term has length <= limit (exact=true).
    std::vector<std::map<Path, Scalar>> ideal_generators(const std::vector<Path>& paths, std::size_t limit,
                                                         bool exact) const {
        const std::uint32_t p = modulus();
        std::vector<std::map<Path, Scalar>> gens;
        for (const auto& rel : pres_.relations) {
            std::size_t min_len = SIZE_MAX, max_len = 0;
            for (const auto& t : rel.terms) {
                min_len = std::min(min_len, t.path.length());
                max_len = std::max(max_len, t.path.length());
            }
            std::size_t base = exact ? max_len : min_len;
            if (exact ? base > limit : base >= limit) continue;
            std::size_t budget = exact ? limit - base : limit - 1 - base;
            std::size_t s = rel.terms.front().path.source;
            std::size_t t = rel.terms.front().path.target;
            for (const auto& u : paths) {
                if (u.target != s || u.length() > budget) continue;
                for (const auto& v : paths) {
                    if (v.source != t || u.length() + v.length() > budget) continue;
                    std::map<Path, Scalar> g;
                    for (const auto& term : rel.terms) {
                        Path w = concat(concat(u, term.path), v);
                        if (!exact && w.length() >= limit) continue;
                        g[w] = add_mod(g[w], term.coeff, p);
                    }
                    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
                    if (!g.empty()) gens.push_back(std::move(g));
                }
            }
        }
        return gens;
    }

    static bool longer_first(const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a < b;
    }

    void build_basis() {
        const std::uint32_t p = modulus();
        const std::size_t cap = pres_.path_cap;
        const std::size_t n = num_vertices();

        // Every path of length cap must lie in the ideal.
        std::vector<Path> upto_cap = enumerate_paths(cap);
        {
            std::vector<Path> cols;
            for (const auto& path : upto_cap)
                if (path.length() >= 2) cols.push_back(path);
            std::sort(cols.begin(), cols.end(), longer_first);
            std::map<Path, std::size_t> col_of;
            for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
            bool any_long = false;
            for (const auto& path : upto_cap) any_long |= path.length() == cap;
            if (any_long) {
                auto gens = ideal_generators(upto_cap, cap, true);
                Matrix g(gens.size(), cols.size(), p);
                for (std::size_t r = 0; r < gens.size(); ++r)
                    for (const auto& [path, c] : gens[r]) g(r, col_of.at(path)) = c;
                auto [reduced, pivots] = row_reduce(g);
                // e_q lies in the row space iff q is a pivot whose reduced row is e_q itself.
                std::vector<long> pivot_row(cols.size(), -1);
                for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
                for (const auto& path : upto_cap) {
                    if (path.length() != cap) continue;
                    std::size_t q = col_of.at(path);
                    bool inside = pivot_row[q] >= 0;
                    for (std::size_t c = 0; inside && c < cols.size(); ++c)
                        if (c != q && reduced(static_cast<std::size_t>(pivot_row[q]), c) != 0) inside = false;
                    if (!inside)
                        throw InputError("algebra not finite-dimensional within path_cap " + std::to_string(cap) +
                                         " (path " + path_name(path) + " survives)");
                }
            }
        }

        // Quotient of the span of paths shorter than cap.
        std::vector<Path> shorter;
        for (const auto& path : upto_cap)
            if (path.length() < cap) shorter.push_back(path);
        std::vector<Path> cols = shorter;
        std::sort(cols.begin(), cols.end(), longer_first);
        std::map<Path, std::size_t> col_of;
        for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
        auto gens = ideal_generators(shorter, cap, false);
        Matrix g(gens.size(), cols.size(), p);
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (const auto& [path, c] : gens[r]) g(r, col_of.at(path)) = c;
        auto [reduced, pivots] = row_reduce(g);
        std::vector<long> pivot_row(cols.size(), -1);
        for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);

        for (std::size_t c = 0; c < cols.size(); ++c)
            if (pivot_row[c] < 0) basis_.push_back(cols[c]);
        std::sort(basis_.begin(), basis_.end(), [](const Path& a, const Path& b) {
            if (a.length() != b.length()) return a.length() < b.length();
            if (a.length() == 0) return a.source < b.source;
            return a.arrows < b.arrows;
        });
        std::map<Path, std::size_t> basis_of;
        for (std::size_t k = 0; k < basis_.size(); ++k) basis_of[basis_[k]] = k;

        for (std::size_t c = 0; c < cols.size(); ++c) {
            Sparse nf;
            if (pivot_row[c] < 0) {
                nf.push_back({basis_of.at(cols[c]), 1});
            } else {
                std::size_t r = static_cast<std::size_t>(pivot_row[c]);
                for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
                    if (c2 == c || reduced(r, c2) == 0) continue;
                    nf.push_back({basis_of.at(cols[c2]), neg_mod(reduced(r, c2), p)});
                }
                std::sort(nf.begin(), nf.end());
            }
            path_index_[cols[c]] = normal_forms_.size();
            normal_forms_.push_back(std::move(nf));
        }

        corners_.assign(n * n, {});
        corner_pos_.assign(basis_.size(), 0);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            auto& list = corners_[basis_[k].source * n + basis_[k].target];
            corner_pos_[k] = list.size();
            list.push_back(k);
        }

        table_.assign(basis_.size() * basis_.size(), {});
        for (std::size_t k = 0; k < basis_.size(); ++k)
            for (std::size_t l = 0; l < basis_.size(); ++l) {
                if (basis_[k].target != basis_[l].source) continue;
                Path w = concat(basis_[k], basis_[l]);
                if (w.length() >= cap) continue;
                table_[k * basis_.size() + l] = normal_forms_[path_index_.at(w)];
            }
    }

    AlgebraPresentation pres_;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> path_index_;
    std::vector<Sparse> normal_forms_;
    std::vector<std::vector<std::size_t>> corners_;
    std::vector<std::size_t> corner_pos_;
    std::vector<Sparse> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr build_basis(AlgebraPresentation presentation) { return Algebra::build(std::move(presentation)); }

}  // namespace tilt
