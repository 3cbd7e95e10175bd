#include "zpr/cf_discrete.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace zpr {

double rotation_temperature(double omega, const Constants& k)
{
    return k.hbar * omega / (two_pi * k.k_B);
}

double rotation_temperature(const RotationParams& p)
{
    return rotation_temperature(p.omega(), p.constants());
}

double discrete_phase(double delta, double u, double beta)
{
    return delta - 2 * beta * u * std::sin(0.5 * delta);
}

DiscreteKernel make_discrete_kernel(double delta, double u, const RotationParams& p)
{
    double F = discrete_phase(delta, u, p.beta());
    return {F, F / p.omega(), p.omega(), p.omega() / p.constants().c};
}

//---------------------------------------------------------------------------//

namespace {

void require_off_lattice(double F, const char* who)
{
    double s = std::sin(0.5 * F);
    double m = std::round(F / two_pi);
    if (s == 0 || (m != 0 && F == two_pi * m))
        throw std::domain_error(std::string(who) + ": F_d on the resonance lattice 2 pi Z");
}

// sum over even j of binom(j + p, p) F^j zeta(j + p + 1) / (2 pi)^(j + p + 1), times 2.
double even_zeta_series(double F, int p)
{
    double f2 = (F / two_pi) * (F / two_pi);
    double pw = 1;
    double sum = 0;
    for (int j = 0; j < 80; j += 2) {
        double binom = 1;
        for (int i = 1; i <= p; ++i)
            binom = binom * (j + i) / i;
        double term = binom * pw * std::riemann_zeta(static_cast<double>(j + p + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
        pw *= f2;
    }
    return 2 * sum / std::pow(two_pi, p + 1);
}

// 2 w^p cosh(w F) / (exp(a w) - 1), for |F| < a, without overflow.
double bose_cosh(double w, double F, double a, int power)
{
    if (w <= 0)
        return 0;
    double fa = std::abs(F);
    double num = std::exp(-(a - fa) * w) + std::exp(-(a + fa) * w);
    return std::pow(w, power) * num / (-std::expm1(-a * w));
}

}  // namespace

double sd_closed(double F)
{
    require_off_lattice(F, "sd_closed");
    double s = std::sin(0.5 * F);
    double s2 = s * s;
    return (3 - 2 * s2) / (8 * s2 * s2);
}

double sd_thermal_kernel(double F)
{
    if (std::abs(F) < 1)
        return 6 * even_zeta_series(F, 3);
    double f2 = F * F;
    return sd_closed(F) - 6 / (f2 * f2);
}

double sd_partial_fractions(double F, long terms)
{
    KahanSum s;
    for (long m = terms; m >= 1; --m) {
        double a = F + two_pi * m, b = F - two_pi * m;
        double a2 = a * a, b2 = b * b;
        s.add(1 / (a2 * a2) + 1 / (b2 * b2));
    }
    double f2 = F * F;
    s.add(1 / (f2 * f2));
    return 6 * s.value();
}

double scalar_kernel_closed(double F)
{
    require_off_lattice(F, "scalar_kernel_closed");
    double s = std::sin(0.5 * F);
    return -1 / (4 * s * s);
}

double scalar_thermal_kernel(double F)
{
    if (std::abs(F) < 1)
        return -even_zeta_series(F, 1);
    return scalar_kernel_closed(F) + 1 / (F * F);
}

double thermal_integrand_rotation(double w, double F_tilde, double omega0, int power)
{
    return bose_cosh(w, F_tilde, two_pi / omega0, power);
}

double thermal_integrand_planck(double w, double F_tilde, double T, const Constants& k, int power)
{
    return bose_cosh(w, F_tilde, k.hbar / (k.k_B * T), power);
}

double inertial_thermal_integrand(double w, double t, double T, const Constants& k, int power)
{
    if (w <= 0)
        return 0;
    double a = k.hbar / (k.k_B * T);
    return 2 * std::pow(w, power) * std::cos(w * t) * std::exp(-a * w) / (-std::expm1(-a * w));
}

namespace {

ThermalSplit split(double F_d, double omega0, int power, const QuadratureSpec& spec)
{
    if (!(std::abs(F_d) < two_pi))
        throw ThermalDivergence("thermal integral diverges for |F_d| >= 2 pi (F_d = "
                                + std::to_string(F_d) + ")");
    if (!(omega0 > 0))
        throw std::domain_error("thermal split needs omega0 > 0");
    // Integrate in x = w / Omega; the Omega powers are restored below.
    QuadResult q = integrate_semi_infinite(
        [&](double x) { return thermal_integrand_rotation(x, F_d, 1.0, power); }, 0.0, spec);
    double scale = std::pow(omega0, power + 1);
    ThermalSplit out;
    if (power == 3) {
        double f2 = F_d * F_d;
        out.zero_point_part = scale * 6 / (f2 * f2);
        out.thermal_part = scale * q.value;
    } else {
        out.zero_point_part = -scale / (F_d * F_d);
        out.thermal_part = -scale * q.value;
    }
    out.total = out.zero_point_part + out.thermal_part;
    return out;
}

}  // namespace

ThermalSplit sd_thermal_split(double F_d, double omega0, const QuadratureSpec& spec)
{
    return split(F_d, omega0, 3, spec);
}

ThermalSplit scalar_thermal_split(double F_d, double omega0, const QuadratureSpec& spec)
{
    return split(F_d, omega0, 1, spec);
}

//---------------------------------------------------------------------------//

void check_resonance(double delta, double beta)
{
    constexpr double margin = 1e-6;
    double s = std::sin(0.5 * delta);
    double spread = 2 * beta * std::abs(s);
    double lo = delta - spread - margin, hi = delta + spread + margin;
    long m0 = static_cast<long>(std::ceil(lo / two_pi));
    long m1 = static_cast<long>(std::floor(hi / two_pi));
    if (m0 > m1)
        return;
    long m = m0;
    double u = beta * s != 0 ? (delta - two_pi * m) / (2 * beta * s)
                             : std::numeric_limits<double>::quiet_NaN();
    std::ostringstream msg;
    msg << "F_d crosses the resonance 2 pi * " << m << " at sin(theta) sin(phi) = " << u
        << " (chord-aligned frame); the discrete kernel has a non-integrable pole there";
    throw ResonanceError(msg.str(), u, m);
}

namespace {

enum class Field { em, scalar };

template <class Kernel>
QuadResult discrete_angular(double delta, const RotationParams& p, Field field, Kernel kernel,
                            const QuadratureSpec& spec)
{
    double beta = p.beta(), gamma = p.gamma();
    // Integrand depends on (sin theta, sin phi) only: fold theta onto [0, pi/2] and phi onto
    // [-pi/2, pi/2]; phi symmetric so u -> -u maps nodes onto nodes.
    auto f = [&](double theta, double phi) {
        double st = std::sin(theta);
        double u = st * std::sin(phi);
        double F = discrete_phase(delta, u, beta);
        double w = 1;
        if (field == Field::em) {
            double kx2 = st * st - u * u;
            w = K_bracket(std::sqrt(std::max(kx2, 0.0)), u, delta, beta, gamma);
        }
        return 4 * w * kernel(F);
    };
    return integrate_sphere_region(f, 0.0, 0.5 * pi, -0.5 * pi, 0.5 * pi, spec);
}

DiscreteCF discrete_cf(double tau1, double tau2, const RotationParams& p, const DiscreteSpec& spec,
                       Field field)
{
    if (!(p.omega() > 0))
        throw std::domain_error("discrete spectrum needs omega > 0");
    const Constants& k = p.constants();
    double delta = p.delta(tau1, tau2);
    double w2 = p.omega() * p.omega();
    double pref = field == Field::em ? k.hbar * w2 * w2 / (4 * pi * pi * k.c * k.c * k.c)
                                     : k.hbar * w2 / (4 * pi * pi * k.c);

    DiscreteCF out;
    out.cf.kind = field == Field::em ? FieldKind::EE : FieldKind::scalar;
    out.cf.a = out.cf.b = 1;
    out.cf.tau1 = tau1;
    out.cf.tau2 = tau2;
    out.cf.spectrum = Spectrum::discrete;
    out.cf.method = Method::quadrature;

    if (spec.kind == DiscreteSpec::Kind::truncated) {
        if (spec.n_max < 1)
            throw std::invalid_argument("truncated spectrum needs n_max >= 1");
        long N = spec.n_max;
        int power = field == Field::em ? 3 : 1;
        auto kern = [N, power](double F) {
            double s = 0;
            for (long n = N; n >= 1; --n)
                s += std::pow(static_cast<double>(n), power) * std::cos(n * F);
            return s;
        };
        QuadResult q = discrete_angular(delta, p, field, kern, spec.quad);
        out.cf.value = pref * q.value;
        out.cf.error_estimate = pref * q.error;
        out.zero_point_part = out.thermal_part = std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    check_resonance(delta, p.beta());
    auto closed = field == Field::em ? sd_closed : scalar_kernel_closed;
    QuadResult q = discrete_angular(delta, p, field, closed, spec.quad);
    out.cf.value = pref * q.value;
    out.cf.error_estimate = pref * q.error;

    // The split needs |F_d| < 2 pi over the whole sphere.
    double spread = 2 * p.beta() * std::abs(std::sin(0.5 * delta));
    if (std::abs(delta) + spread < two_pi) {
        auto zp = field == Field::em ? [](double F) { double f2 = F * F; return 6 / (f2 * f2); }
                                     : [](double F) { return -1 / (F * F); };
        auto th = field == Field::em ? sd_thermal_kernel : scalar_thermal_kernel;
        out.zero_point_part = pref * discrete_angular(delta, p, field, zp, spec.quad).value;
        out.thermal_part = pref * discrete_angular(delta, p, field, th, spec.quad).value;
    } else {
        out.zero_point_part = out.thermal_part = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace

DiscreteCF em_cf_discrete_I11(double tau1, double tau2, const RotationParams& p, const DiscreteSpec& spec)
{
    return discrete_cf(tau1, tau2, p, spec, Field::em);
}

DiscreteCF scalar_cf_discrete(double tau1, double tau2, const RotationParams& p, const DiscreteSpec& spec)
{
    return discrete_cf(tau1, tau2, p, spec, Field::scalar);
}

}  // namespace zpr
