#pragma once

#include "zpr/constants.hpp"

namespace zpr {

// Overall normalization of the discrete zero-point ladder.
//  spherical_delta: lab variance <E_i^2> = (hbar c k0^4 / pi^2)(2/3) sum n^3, the energy-density
//                   convention; reproduces w = ((4 gamma^2 - 1)/3)(hbar/(c^3 pi^2)) Omega^4 sum n^3.
//  plane_wave:      half of that; consistent with the correlation-function kernels
//                   (hbar c / 4 pi^2) int dO ... used by every CF routine.
enum class Normalization { spherical_delta, plane_wave };

const char* to_string(Normalization n);

// Coefficient C with <X_i X_j> = C * int dO (delta_ij - k_i k_j) sum_n n^3 for the ladder k_n = k0 n.
inline double ladder_power(Normalization norm, const Constants& k, double k0)
{
    double k02 = k0 * k0;
    double base = k.hbar * k.c * k02 * k02 / (4 * pi * pi);
    return norm == Normalization::spherical_delta ? 2 * base : base;
}

}  // namespace zpr
