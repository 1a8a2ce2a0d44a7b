#pragma once

// Shared fixture loading and brute-force oracles for the test suite.
// The oracles only use raw loops over F_2 so they do not share code paths
// with the library's linear algebra.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tilt/tilt.hpp"

namespace testing_support {

using namespace tilt;

inline std::string fixture_path(const std::string& name) { return std::string(TILT_FIXTURE_DIR) + "/" + name; }

inline AlgebraPtr fixture(const std::string& name) {
    static std::map<std::string, AlgebraPtr> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, Algebra::build(load_algebra(fixture_path(name + ".json")))).first;
    return it->second;
}

inline const Catalog& catalog(const std::string& name) {
    static std::map<std::string, std::unique_ptr<Catalog>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        auto alg = fixture(name);
        it = cache.emplace(name, std::make_unique<Catalog>(build_catalog(alg, default_dim_bound(alg)))).first;
    }
    return *it->second;
}

/// Indecomposable of the catalog with the given Loewy label.
inline const Module& indec(const Catalog& cat, const std::string& label) {
    for (const auto& m : cat.indecomposables)
        if (module_label(m) == label) return m;
    throw std::runtime_error("no indecomposable labelled " + label);
}

inline std::size_t presilting_index(const Catalog& cat, const std::string& g) {
    auto idx = cat.find_gvector(parse_gvector(g, cat.algebra->quiver()));
    if (!idx) throw std::runtime_error("no presilting complex " + g);
    return *idx;
}

inline SiltingObject object(const Catalog& cat, const std::vector<std::string>& gs) {
    std::vector<std::size_t> idx;
    for (const auto& g : gs) idx.push_back(presilting_index(cat, g));
    return cat.object(idx);
}

// ---- oracles (p = 2 only) ---------------------------------------------------------

using Vec = std::uint32_t;  // bitmask coordinates in F_2^d

inline Vec apply(const Matrix& m, Vec v) {
    Vec out = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        unsigned bit = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((v >> c) & 1u) bit ^= m(r, c) & 1u;
        out |= bit << r;
    }
    return out;
}

/// dim Hom(M, N) by counting all tuples of linear maps that commute with the arrows.
inline std::size_t brute_hom_dim(const Module& m, const Module& n) {
    const auto& q = m.algebra().quiver();
    const std::size_t nv = q.num_vertices();
    std::size_t bits = 0;
    for (std::size_t v = 0; v < nv; ++v) bits += m.dim(v) * n.dim(v);
    if (bits > 20) throw std::runtime_error("brute_hom_dim: too many maps");
    std::size_t count = 0;
    for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
        std::vector<Matrix> f;
        std::size_t used = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix fv(n.dim(v), m.dim(v), 2);
            for (std::size_t r = 0; r < n.dim(v); ++r)
                for (std::size_t c = 0; c < m.dim(v); ++c) fv(r, c) = (code >> used++) & 1u;
            f.push_back(fv);
        }
        bool ok = true;
        for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
            auto s = q.arrows[a].source, t = q.arrows[a].target;
            for (Vec x = 0; x < (1u << m.dim(s)) && ok; ++x)
                ok = apply(f[t], apply(m.arrow_map(a), x)) == apply(n.arrow_map(a), apply(f[s], x));
        }
        if (ok) ++count;
    }
    std::size_t d = 0;
    while ((1ull << d) < count) ++d;
    return d;
}

/// All subspaces of F_2^d as sets of vectors (bitmask over the 2^d vectors).
inline std::vector<std::vector<Vec>> brute_subspaces(std::size_t d) {
    std::vector<std::vector<Vec>> out;
    const std::size_t size = 1u << d;
    for (std::uint64_t pick = 0; pick < (1ull << size); ++pick) {
        if (!(pick & 1u)) continue;  // must contain 0
        bool closed = true;
        for (Vec a = 0; a < size && closed; ++a)
            for (Vec b = 0; b < size && closed; ++b)
                if (((pick >> a) & 1u) && ((pick >> b) & 1u) && !((pick >> (a ^ b)) & 1u)) closed = false;
        if (!closed) continue;
        std::vector<Vec> s;
        for (Vec a = 0; a < size; ++a)
            if ((pick >> a) & 1u) s.push_back(a);
        out.push_back(s);
    }
    return out;
}

/// Dimension vectors of all submodules, by testing every tuple of subspaces.
inline std::set<DimVector> brute_submodule_dims(const Module& m) {
    const auto& q = m.algebra().quiver();
    const std::size_t nv = q.num_vertices();
    std::vector<std::vector<std::vector<Vec>>> choices;
    for (std::size_t v = 0; v < nv; ++v) choices.push_back(brute_subspaces(m.dim(v)));
    std::set<DimVector> out;
    std::vector<std::size_t> pick(nv, 0);
    while (true) {
        bool closed = true;
        for (std::size_t a = 0; a < q.arrows.size() && closed; ++a) {
            const auto& src = choices[q.arrows[a].source][pick[q.arrows[a].source]];
            const auto& tgt = choices[q.arrows[a].target][pick[q.arrows[a].target]];
            for (Vec x : src) {
                Vec y = apply(m.arrow_map(a), x);
                if (std::find(tgt.begin(), tgt.end(), y) == tgt.end()) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) {
            DimVector d;
            for (std::size_t v = 0; v < nv; ++v) {
                std::size_t k = 0;
                while ((1u << k) < choices[v][pick[v]].size()) ++k;
                d.push_back(k);
            }
            out.insert(d);
        }
        std::size_t v = 0;
        while (v < nv && ++pick[v] == choices[v].size()) pick[v++] = 0;
        if (v == nv) break;
    }
    return out;
}

}  // namespace testing_support
