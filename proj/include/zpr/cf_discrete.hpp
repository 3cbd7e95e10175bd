#pragma once

#include <stdexcept>
#include <string>

#include "zpr/cf_analytic.hpp"

namespace zpr {

class ResonanceError : public std::domain_error {
public:
    ResonanceError(const std::string& what, double u_star, long m)
        : std::domain_error(what), u_star(u_star), m(m)
    {
    }
    // Chord-aligned unit-vector component where F_d = 2 pi m; the resonant set on the
    // sphere is sin(theta) sin(phi) = u_star in the frame rotated to the mean angle.
    double u_star;
    long m;
};

class ThermalDivergence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// T_rot = hbar Omega / (2 pi k_B).
double rotation_temperature(const RotationParams& p);
double rotation_temperature(double omega, const Constants& k);

// Phase of mode n = 1 along direction u: delta (1 - u beta sin(delta/2)/(delta/2)).
double discrete_phase(double delta, double u, double beta);

struct DiscreteKernel {
    double F_d;
    double F_tilde;  // F_d / Omega
    double omega0;
    double k0;  // Omega / c
};
DiscreteKernel make_discrete_kernel(double delta, double u, const RotationParams& p);

// Abel sum of n^3 cos(n F): (3 - 2 sin^2(F/2)) / (8 sin^4(F/2)).
double sd_closed(double F);
// Thermal remainder sd_closed(F) - 6/F^4, analytic for |F| < 2 pi.
double sd_thermal_kernel(double F);
// 6 sum_{|m| <= terms} (F + 2 pi m)^-4.
double sd_partial_fractions(double F, long terms);

// Abel sum of n cos(n F): -1 / (4 sin^2(F/2)).
double scalar_kernel_closed(double F);
// Thermal remainder scalar_kernel_closed(F) + 1/F^2.
double scalar_thermal_kernel(double F);

struct ThermalSplit {
    double zero_point_part = 0;
    double thermal_part = 0;
    double total = 0;
};

// Omega^4 S_d = 6/F~^4 + int 2 w^3 cosh(w F~) / (exp(2 pi w / Omega) - 1) dw.
ThermalSplit sd_thermal_split(double F_d, double omega0, const QuadratureSpec& spec = {});
// Omega^2 sum n cos(n F_d) = -1/F~^2 - int 2 w cosh(w F~) / (exp(2 pi w / Omega) - 1) dw.
ThermalSplit scalar_thermal_split(double F_d, double omega0, const QuadratureSpec& spec = {});

// Integrands of the thermal term, once with the rotation period and once with the Planck
// factor at temperature T.
double thermal_integrand_rotation(double w, double F_tilde, double omega0, int power = 3);
double thermal_integrand_planck(double w, double F_tilde, double T, const Constants& k, int power = 3);
// Inertial thermal correlation integrand at lab time separation t.
double inertial_thermal_integrand(double w, double t, double T, const Constants& k, int power = 3);

struct DiscreteSpec {
    enum class Kind { regularized, truncated };
    Kind kind = Kind::regularized;
    long n_max = 0;
    QuadratureSpec quad{};

    static DiscreteSpec regularized_sum(QuadratureSpec q = {}) { return {Kind::regularized, 0, q}; }
    static DiscreteSpec truncated_sum(long n, QuadratureSpec q = {}) { return {Kind::truncated, n, q}; }
};

struct DiscreteCF {
    CFValue cf;
    // Angular integrals of the zero-point and thermal parts (regularized kind only).
    double zero_point_part = 0;
    double thermal_part = 0;
};

// Periodic I_(11) with the discrete spectrum omega = n Omega.
DiscreteCF em_cf_discrete_I11(double tau1, double tau2, const RotationParams& p,
                              const DiscreteSpec& spec = {});
// Periodic scalar correlation with the discrete spectrum.
DiscreteCF scalar_cf_discrete(double tau1, double tau2, const RotationParams& p,
                              const DiscreteSpec& spec = {});

// Throws ResonanceError if F_d reaches 2 pi Z for some direction.
void check_resonance(double delta, double beta);

}  // namespace zpr
