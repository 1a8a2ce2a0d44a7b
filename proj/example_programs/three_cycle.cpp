// Walks through the 3-cycle algebra with all paths of length three set to zero:
// the silting complexes, one stability form and its semistable modules, and
// the triangle Λ -> T' -> T'' -> Λ[1] for one silting complex.
//
// usage: example_three_cycle [fixtures/threecycle.json]

#include <iostream>

#include "tilt/tilt.hpp"

using namespace tilt;

int main(int argc, char** argv) {
    const char* file = argc > 1 ? argv[1] : "fixtures/threecycle.json";
    auto alg = Algebra::build(load_algebra(file));
    const auto& q = alg->quiver();
    auto cat = build_catalog(alg, default_dim_bound(alg));

    std::cout << cat.indecomposables.size() << " indecomposables, " << cat.presilting.size()
              << " indecomposable presilting, " << cat.silting.size() << " silting\n";

    // U = (P_3 -> P_2) ⊕ (P_1 -> 0) with weights (1, 1)
    auto u1 = *cat.find_gvector(parse_gvector("P_2 - P_3", q));
    auto u2 = *cat.find_gvector(parse_gvector("-P_1", q));
    auto theta = theta_from_presilting(cat.object({u1, u2}), {Rational(1), Rational(1)}, alg);
    std::cout << "theta =";
    for (const auto& c : theta.coeffs) std::cout << " " << rational_string(c);
    std::cout << "\nsemistable:";
    for (const auto& m : cat.indecomposables)
        if (is_semistable(theta, m).semistable) std::cout << " " << module_label(m);
    std::cout << "\n";

    // T = U_1 ⊕ U_2 ⊕ U_3 with U_3 = (P_1 -> P_2)
    auto u3 = *cat.find_gvector(parse_gvector("P_2 - P_1", q));
    SiltingObject t = cat.object({u1, u2, u3});
    auto dec = silting_decompose(t, alg);
    auto name = [&](std::size_t k) { return gvector_string(g_vector(t.summands[k]), q); };
    std::cout << "T' =";
    for (std::size_t k = 0; k < 3; ++k)
        if (dec.t_prime[k]) std::cout << " " << dec.t_prime[k] << "x(" << name(k) << ")";
    std::cout << "\nT'' =";
    for (std::size_t k = 0; k < 3; ++k)
        if (dec.t_double_prime[k]) std::cout << " " << dec.t_double_prime[k] << "x(" << name(k) << ")";
    std::cout << "\nW^T:";
    for (const auto& m : cat.indecomposables)
        if (in_W_T(t, dec, m, alg)) std::cout << " " << module_label(m);
    std::cout << "\n";
}
