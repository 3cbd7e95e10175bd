#pragma once

#include <array>
#include <stdexcept>

#include "zpr/kinematics.hpp"
#include "zpr/numerics.hpp"
#include "zpr/spectrum.hpp"

namespace zpr {

enum class FieldType { em, scalar };

struct ThermoReport {
    FieldType field_kind = FieldType::em;
    double T_rot = 0;
    double w_zp_cutoff = 0;
    double w_thermal = 0;
    double anisotropy_factor = 0;
    double w_total_cutoff = 0;
    long cutoff_n_max = 0;
    // Scalar only: thermal energy density of an inertial bath at T_rot.
    double inertial_reference_thermal = 0;
};

// Sum_{n=1}^{N} n^3.
double cubic_sum(long n_max);

ThermoReport em_energy_density(const RotationParams& p, long cutoff_n_max);
// anisotropy * (hbar/(pi^2 c^3)) int w^3 / (exp(hbar w / k T_rot) - 1), by quadrature.
double em_thermal_from_planck(const RotationParams& p, const QuadratureSpec& spec = {});
// Tetrad-frame over lab-frame energy density of an isotropic field, from the projection of
// the six unit lab fields; (4 gamma^2 - 1)/3 for either tetrad kind.
double em_tetrad_energy_factor(const RotationParams& p, double tau, TetradKind kind);
// Energy density rebuilt from the lab variance, obtained by sphere quadrature of the
// ladder spectral weight, then contracted with the tetrad.
double em_energy_from_moments(const RotationParams& p, long n_max, Normalization norm, double tau,
                              TetradKind kind = TetradKind::frenet_serret,
                              const QuadratureSpec& spec = {});

ThermoReport scalar_energy_density(const RotationParams& p, long cutoff_n_max,
                                   const QuadratureSpec& spec = {});
// Thermal energy density of an inertial scalar bath at T built from its spectral function.
double scalar_inertial_thermal(double T, const Constants& k, const QuadratureSpec& spec = {});

// Lab stress tensor <T_ik> (covariant, x^4 = ct) of the scalar ladder truncated at n_max.
struct ScalarStress {
    std::array<std::array<double, 4>, 4> T{};
};
ScalarStress scalar_lab_stress(const RotationParams& p, long n_max, const QuadratureSpec& spec = {});
// mu_(4)^i mu_(4)^k <T_ik> from the lab stress.
double scalar_tetrad_energy(const RotationParams& p, const ScalarStress& s, double tau);

//---------------------------------------------------------------------------//

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ForcePoint {
    double r = 0;
    double x = 0;
    double f_vac = 0;            // N/m^3
    double f_vac_numeric = 0;    // -dw_thermal/dr by central differences
    double F_sphere = 0;         // N, for the requested sphere radius
    double w_thermal = 0;
};

// w_thermal as a function of orbit radius at fixed omega.
double em_thermal_density_at(double omega, double r, const Constants& k);
ForcePoint vacuum_force_density(double omega, double r, const Constants& k, double sphere_radius = 0);

struct CasimirResult {
    double energy;
    double force;
};
CasimirResult casimir_force(double a_shell, const Constants& k, double C = -0.09);

struct HadronEstimate {
    double force_newton;
    double force_gev_per_fermi;
    double prefactor_j_per_m;  // (4 c hbar / (135 pi)) a^3 / r0^5
    double T_rot;
};
HadronEstimate hadron_estimates(double a_sphere, double r0, double x, const Constants& k);

// Quark-gluon plasma temperature quoted for comparison only.
inline constexpr double qgp_temperature_kelvin = 1.90e12;

}  // namespace zpr
