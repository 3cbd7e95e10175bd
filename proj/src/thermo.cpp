#include "zpr/thermo.hpp"

#include <cmath>
#include <string>

#include "zpr/cf_discrete.hpp"
#include "zpr/frame_fields.hpp"

namespace zpr {

const char* to_string(Normalization n)
{
    return n == Normalization::spherical_delta ? "spherical-delta" : "plane-wave";
}

double cubic_sum(long n_max)
{
    double n = static_cast<double>(n_max);
    double h = 0.5 * n * (n + 1);
    return h * h;
}

namespace {

double em_anisotropy(const RotationParams& p)
{
    double g2 = p.gamma() * p.gamma();
    return 2 * (4 * g2 - 1) / 3;
}

// int_0^inf x^3 / (e^x - 1) dx by quadrature.
double bose_cubic(const QuadratureSpec& spec)
{
    return integrate_semi_infinite(
               [](double x) { return x > 0 ? x * x * x / std::expm1(x) : 0.0; }, 0.0, spec)
        .value;
}

}  // namespace

ThermoReport em_energy_density(const RotationParams& p, long cutoff_n_max)
{
    if (cutoff_n_max < 1)
        throw std::invalid_argument("cutoff_n_max must be >= 1");
    const Constants& k = p.constants();
    ThermoReport r;
    r.field_kind = FieldType::em;
    r.T_rot = rotation_temperature(p);
    r.anisotropy_factor = em_anisotropy(p);
    double T2 = r.T_rot * r.T_rot;
    r.w_thermal = r.anisotropy_factor * (4 * k.sigma / k.c) * T2 * T2;
    double w2 = p.omega() * p.omega();
    double zp = 0.5 * k.hbar * w2 * w2 / (pi * pi * k.c * k.c * k.c) * cubic_sum(cutoff_n_max);
    r.w_zp_cutoff = r.anisotropy_factor * zp;
    r.w_total_cutoff = r.w_zp_cutoff + r.w_thermal;
    r.cutoff_n_max = cutoff_n_max;
    return r;
}

double em_thermal_from_planck(const RotationParams& p, const QuadratureSpec& spec)
{
    const Constants& k = p.constants();
    double T = rotation_temperature(p);
    if (T == 0)
        return 0;
    double wt = k.k_B * T / k.hbar;
    double wt2 = wt * wt;
    return em_anisotropy(p) * k.hbar / (pi * pi * k.c * k.c * k.c) * wt2 * wt2 * bose_cubic(spec);
}

double em_tetrad_energy_factor(const RotationParams& p, double tau, TetradKind kind)
{
    Tetrad t = make_tetrad(p, tau, kind);
    double sum = 0;
    for (int j = 0; j < 6; ++j) {
        FieldTriplet f;
        (j < 3 ? f.E[j] : f.H[j - 3]) = 1.0;
        FieldTriplet g = project_by_tensor(f, t);
        sum += dot3(g.E, g.E) + dot3(g.H, g.H);
    }
    return sum / 6;
}

double em_energy_from_moments(const RotationParams& p, long n_max, Normalization norm, double tau,
                              TetradKind kind, const QuadratureSpec& spec)
{
    const Constants& k = p.constants();
    double k0 = p.omega() / k.c;
    double moment = integrate_sphere(
                        [](double th, double ph) {
                            double kx = std::sin(th) * std::cos(ph);
                            return 1 - kx * kx;
                        },
                        spec)
                        .value;
    double variance = ladder_power(norm, k, k0) * moment * cubic_sum(n_max);
    double w_lab = 6 * variance / (8 * pi);
    return w_lab * em_tetrad_energy_factor(p, tau, kind);
}

//---------------------------------------------------------------------------//

double scalar_inertial_thermal(double T, const Constants& k, const QuadratureSpec& spec)
{
    if (T == 0)
        return 0;
    // <T_44> = (1/2) int d^3k f_T^2 (1/2)(omega^2/c^2 + k^2), thermal part of
    // f_T^2 = (c^2/pi^2)(hbar/omega)/(exp(hbar omega/kT) - 1); k = kt * y.
    // Dimensional factors are pulled out so the tolerance applies to an O(1) integrand.
    double kt = k.k_B * T / (k.hbar * k.c);
    auto shape = [](double y) {
        if (y <= 0)
            return 0.0;
        double f2 = (1 / (pi * pi)) / (y * std::expm1(y));
        return 0.5 * 4 * pi * y * y * f2 * 0.5 * (2 * y * y);
    };
    double scale = k.c * k.hbar * kt * kt * kt * kt;
    return scale * integrate_semi_infinite(shape, 0.0, spec).value;
}

ThermoReport scalar_energy_density(const RotationParams& p, long cutoff_n_max,
                                   const QuadratureSpec& spec)
{
    if (cutoff_n_max < 1)
        throw std::invalid_argument("cutoff_n_max must be >= 1");
    const Constants& k = p.constants();
    double g2 = p.gamma() * p.gamma();
    double lab_to_tetrad = (4 * g2 - 1) / 3;
    ThermoReport r;
    r.field_kind = FieldType::scalar;
    r.T_rot = rotation_temperature(p);
    r.cutoff_n_max = cutoff_n_max;
    double c3 = k.c * k.c * k.c;
    double w2 = p.omega() * p.omega();
    r.w_zp_cutoff = lab_to_tetrad * k.hbar * w2 * w2 / (pi * c3) * cubic_sum(cutoff_n_max);
    double wt = k.k_B * r.T_rot / k.hbar;
    double wt2 = wt * wt;
    // (4 gamma^2 - 1)/3 (hbar/(pi c^3)) 2 int w^3 / (exp(hbar w / k T_rot) - 1)
    r.w_thermal = r.T_rot == 0 ? 0.0 : lab_to_tetrad * k.hbar / (pi * c3) * 2 * wt2 * wt2 * bose_cubic(spec);
    r.w_total_cutoff = r.w_zp_cutoff + r.w_thermal;
    r.inertial_reference_thermal = scalar_inertial_thermal(r.T_rot, k, spec);
    r.anisotropy_factor = lab_to_tetrad;
    return r;
}

ScalarStress scalar_lab_stress(const RotationParams& p, long n_max, const QuadratureSpec& spec)
{
    const Constants& k = p.constants();
    double w2 = p.omega() * p.omega();
    // Normalized so that <T_44> = (hbar Omega^4 / (pi c^3)) sum n^3.
    double C = k.hbar * w2 * w2 / (pi * k.c * k.c * k.c) * cubic_sum(n_max) / (4 * pi);
    ScalarStress s;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            auto f = [i, j](double th, double ph) {
                double st = std::sin(th);
                double g[4] = {-st * std::cos(ph), -st * std::sin(ph), -std::cos(th), 1.0};
                return g[i] * g[j];
            };
            double v = C * integrate_sphere(f, spec).value;
            s.T[i][j] = s.T[j][i] = v;
        }
    }
    return s;
}

double scalar_tetrad_energy(const RotationParams& p, const ScalarStress& s, double tau)
{
    FourVector m = frenet_serret_tetrad(p, tau).mu[3];
    double v = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            v += m[i] * m[j] * s.T[i][j];
    return v;
}

//---------------------------------------------------------------------------//

double em_thermal_density_at(double omega, double r, const Constants& k)
{
    double x = omega * r / k.c;
    double g2 = 1 / (1 - x * x);
    double T = rotation_temperature(omega, k);
    double T2 = T * T;
    return 2 * (4 * g2 - 1) / 3 * (4 * k.sigma / k.c) * T2 * T2;
}

ForcePoint vacuum_force_density(double omega, double r, const Constants& k, double sphere_radius)
{
    if (!(omega > 0))
        throw DomainError("vacuum force needs omega > 0");
    double r0 = k.c / omega;
    if (!(r >= 0) || !(r < r0))
        throw DomainError("orbit radius " + std::to_string(r) + " outside [0, c/omega = "
                          + std::to_string(r0) + ")");
    ForcePoint fp;
    fp.r = r;
    fp.x = r / r0;
    double T = rotation_temperature(omega, k);
    double T2 = T * T;
    double d = 1 - fp.x * fp.x;
    fp.f_vac = -(8.0 / 3.0) * (omega * omega / (k.c * k.c)) * (2 * r / (d * d)) * (4 * k.sigma / k.c) * T2 * T2;
    double h = 1e-5 * (r0 - r);
    fp.f_vac_numeric = -(em_thermal_density_at(omega, r + h, k) - em_thermal_density_at(omega, r - h, k)) / (2 * h);
    fp.F_sphere = fp.f_vac * (4.0 / 3.0) * pi * sphere_radius * sphere_radius * sphere_radius;
    fp.w_thermal = em_thermal_density_at(omega, r, k);
    return fp;
}

CasimirResult casimir_force(double a_shell, const Constants& k, double C)
{
    if (!(a_shell > 0))
        throw DomainError("shell radius must be positive");
    double e = -C * k.hbar * k.c / (2 * a_shell);
    return {e, e / a_shell};
}

HadronEstimate hadron_estimates(double a_sphere, double r0, double x, const Constants& k)
{
    if (!(x > 0 && x < 1))
        throw DomainError("x must lie in (0, 1)");
    if (!(a_sphere > 0) || !(r0 > 0))
        throw DomainError("sphere radius and r0 must be positive");
    HadronEstimate h;
    double r05 = std::pow(r0, 5);
    h.prefactor_j_per_m = 4 * k.c * k.hbar / (135 * pi) * a_sphere * a_sphere * a_sphere / r05;
    double d = 1 - x * x;
    h.force_newton = -(x / (d * d)) * h.prefactor_j_per_m;
    h.force_gev_per_fermi = h.force_newton / gev_per_fermi_in_newton;
    h.T_rot = k.hbar * k.c / (two_pi * k.k_B * r0);
    return h;
}

}  // namespace zpr
