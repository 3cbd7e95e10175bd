#pragma once

namespace zpr {

// Physical constants used throughout. SI values are CODATA 2018.
struct Constants {
    double hbar;
    double c;
    double k_B;
    double sigma;   // Stefan-Boltzmann

    static Constants si();
    // hbar = c = k_B = 1; sigma follows as pi^2/60.
    static Constants natural();
};

enum class UnitSystem { si, natural };

Constants constants_for(UnitSystem u);

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// 1 GeV/fm expressed in newtons.
inline constexpr double gev_per_fermi_in_newton = 1.602176634e-10 / 1e-15;

}  // namespace zpr
