#pragma once

/**
 * @file tau.hpp
 * @brief Auslander-Reiten translate and τ-rigidity.
 */

#include <vector>

#include "tilt/complex.hpp"
#include "tilt/decompose.hpp"

namespace tilt {

/// τM = D Tr M, computed as the kernel of ν applied to the minimal presentation.
inline Module tau(const Module& m) {
    if (m.is_zero()) return Module::zero(m.algebra_ptr());
    return Hminus1_nu(min_projective_presentation(m));
}

inline bool is_tau_rigid(const Module& m) { return m.is_zero() || hom_dim(m, tau(m)) == 0; }

/// Vertices where M is nonzero.
inline std::vector<std::size_t> support(const Module& m) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        if (m.dim(v)) out.push_back(v);
    return out;
}

/// τ-rigid with as many non-isomorphic indecomposable summands as vertices in its support.
inline bool is_support_tau_tilting(const Module& m) {
    if (m.is_zero()) return true;
    if (!is_tau_rigid(m)) return false;
    return decompose(m).size() == support(m).size();
}

}  // namespace tilt
