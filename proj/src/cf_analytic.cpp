#include "zpr/cf_analytic.hpp"

#include <cmath>
#include <string>

namespace zpr {

const char* to_string(FieldKind k)
{
    switch (k) {
    case FieldKind::EE: return "EE";
    case FieldKind::HH: return "HH";
    case FieldKind::EH: return "EH";
    case FieldKind::scalar: return "scalar";
    }
    return "?";
}

const char* to_string(Spectrum s)
{
    return s == Spectrum::continuous ? "continuous" : "discrete";
}

const char* to_string(Method m)
{
    switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

double sin_power_integral(int p, double k)
{
    if (!(std::abs(k) < 1))
        throw std::domain_error("sin_power_integral: |k| must be < 1");
    double q = 1 - k * k;
    double q2 = q * q, q3 = q2 * q;
    switch (p) {
    case 1: return 2 / (5 * q) + 8 / (15 * q2) + 16 / (15 * q3);
    case 3: return 4 / (15 * q2) + 16 / (15 * q3);
    case 5: return 16 / (15 * q3);
    }
    throw std::invalid_argument("sin_power_integral: p must be 1, 3 or 5");
}

double phi_kernel_integral(int m, double b)
{
    if (!(std::abs(b) < 1))
        throw std::domain_error("phi_kernel_integral: |b| must be < 1");
    double b2 = b * b;
    double d = std::pow(1 - b2, 3.5);
    switch (m) {
    case 0: return pi * (2 + 3 * b2) / d;
    case 1: return -b * pi * (4 + b2) / d;
    case 2: return pi * (1 + 4 * b2) / d;
    }
    throw std::invalid_argument("phi_kernel_integral: m must be 0, 1 or 2");
}

double k_parameter(double beta, double delta)
{
    double x = 0.5 * delta;
    double sinc;
    if (std::abs(delta) < 1e-4) {
        double x2 = x * x;
        sinc = 1 - x2 / 6 * (1 - x2 / 20);
    } else {
        sinc = std::sin(x) / x;
    }
    return -beta * sinc;
}

AngularMoments angular_moments(double k)
{
    double j1 = sin_power_integral(1, k);
    double j3 = sin_power_integral(3, k);
    double j5 = sin_power_integral(5, k);
    double k2 = k * k;
    return {pi * (2 * j1 + 3 * k2 * j3), -pi * k * (4 * j3 + k2 * j5), pi * (j3 - k2 * j5),
            pi * (j3 + 4 * k2 * j5)};
}

namespace {

void check_separation(const RotationParams& p, double tau1, double tau2)
{
    if (p.omega() > 0) {
        double d = p.delta(tau1, tau2);
        if (std::abs(d) < 1e-9)
            throw CoincidenceLimit("coincidence limit: |delta| = " + std::to_string(std::abs(d))
                                   + " < 1e-9");
    } else if (tau1 == tau2) {
        throw CoincidenceLimit("coincidence limit: tau1 == tau2");
    }
}

double lab_separation(const RotationParams& p, double tau1, double tau2)
{
    return p.constants().c * p.gamma() * (tau2 - tau1);
}

// Closed forms of the EE correlation in terms of the angular moments.
double ee_closed(int a, int b, double delta, double beta, double gamma, const AngularMoments& M)
{
    if (a == 3 || b == 3)
        return a == b ? gamma * gamma
                * (beta * beta * std::cos(delta) * M.m0 + 2 * beta * std::cos(0.5 * delta) * M.my
                   + (1 - beta * beta * std::pow(std::cos(0.5 * delta), 2)) * M.mxx
                   + (1 + beta * beta * std::pow(std::sin(0.5 * delta), 2)) * M.myy)
                      : 0.0;
    double c2 = std::cos(0.5 * delta), s2 = std::sin(0.5 * delta);
    if (a == 1 && b == 1)
        return gamma * gamma
            * (std::cos(delta) * M.m0 + 2 * beta * c2 * M.my + (beta * beta - c2 * c2) * M.mxx
               + (beta * beta + s2 * s2) * M.myy);
    if (a == 2 && b == 2)
        return std::cos(delta) * M.m0 + s2 * s2 * M.mxx - c2 * c2 * M.myy;
    if (a == 1 && b == 2)
        return gamma * (-std::sin(delta) * M.m0 + c2 * s2 * (M.mxx + M.myy)) - beta * gamma * s2 * M.my;
    // (2,1) at delta equals (1,2) at -delta; the moments are even in delta.
    return ee_closed(1, 2, -delta, beta, gamma, M);
}

}  // namespace

double em_cf_prefactor(const RotationParams& p, double tau1, double tau2)
{
    const Constants& k = p.constants();
    double cdt = lab_separation(p, tau1, tau2);
    double cdt2 = cdt * cdt;
    return 3 * k.hbar * k.c / (2 * pi * pi * cdt2 * cdt2);
}

CFValue em_cf_continuous(int a, int b, FieldKind kind, double tau1, double tau2,
                         const RotationParams& p, Method method, const QuadratureSpec& spec)
{
    if (a < 1 || a > 3 || b < 1 || b > 3)
        throw std::invalid_argument("tetrad component indices must be 1..3");
    if (kind == FieldKind::scalar)
        throw MethodMismatch("use scalar_cf_continuous for the scalar field");
    check_separation(p, tau1, tau2);

    CFValue out;
    out.kind = kind;
    out.a = a;
    out.b = b;
    out.tau1 = tau1;
    out.tau2 = tau2;
    out.spectrum = Spectrum::continuous;
    out.method = method;

    double delta = p.delta(tau1, tau2);
    double kpar = k_parameter(p.beta(), delta);
    double pref = em_cf_prefactor(p, tau1, tau2);

    if (method == Method::closed_form) {
        if (kind == FieldKind::EH)
            throw MethodMismatch("no closed form for mixed EH correlations; use quadrature");
        // Duality symmetry of the isotropic zero-point ensemble makes HH equal to EE.
        out.value = pref * ee_closed(a, b, delta, p.beta(), p.gamma(), angular_moments(kpar));
        return out;
    }
    if (method != Method::quadrature)
        throw MethodMismatch("em_cf_continuous supports closed-form and quadrature");

    ProjectionRows r1 = projection_rows(p, tau1);
    ProjectionRows r2 = projection_rows(p, tau2);
    int ra = (kind == FieldKind::HH ? 3 : 0) + a - 1;
    int rb = (kind == FieldKind::EE ? 0 : 3) + b - 1;
    double abar = 0.5 * (p.alpha(tau1) + p.alpha(tau2));
    double ca = std::cos(abar), sa = std::sin(abar);
    auto rot = [&](const Vec3& v) -> Vec3 { return {ca * v[0] - sa * v[1], sa * v[0] + ca * v[1], v[2]}; };

    // Integrand at (sin theta, cos theta, phi) in the frame rotated to the mean angle.
    auto weight = [&](double st, double ct, double sp, double cp) {
        Vec3 kh = rot({st * cp, st * sp, ct});
        Vec3 e1 = rot({ct * cp, ct * sp, -st});
        Vec3 e2 = rot({-sp, cp, 0.0});
        double acc = 0;
        for (const Vec3& e : {e1, e2}) {
            Vec3 h = cross(kh, e);
            double v[6] = {e[0], e[1], e[2], h[0], h[1], h[2]};
            double x = 0, y = 0;
            for (int j = 0; j < 6; ++j) {
                x += r1[ra][j] * v[j];
                y += r2[rb][j] * v[j];
            }
            acc += x * y;
        }
        double g = 1 + kpar * st * sp;
        double g2 = g * g;
        return acc / (g2 * g2);
    };
    // theta folded onto [0, pi/2] so z-odd parts cancel pairwise.
    auto f = [&](double theta, double phi) {
        double st = std::sin(theta), ct = std::cos(theta);
        double sp = std::sin(phi), cp = std::cos(phi);
        return weight(st, ct, sp, cp) + weight(st, -ct, sp, cp);
    };
    QuadResult q = integrate_sphere_region(f, 0.0, 0.5 * pi, -0.5 * pi, 1.5 * pi, spec);
    out.value = pref * q.value;
    out.error_estimate = pref * q.error;
    return out;
}

double em_I11_kernel_assembly(double tau1, double tau2, const RotationParams& p,
                              const QuadratureSpec& spec)
{
    check_separation(p, tau1, tau2);
    double delta = p.delta(tau1, tau2);
    double kpar = k_parameter(p.beta(), delta);
    double beta = p.beta(), g2 = p.gamma() * p.gamma();
    double c2 = std::cos(0.5 * delta), s2 = std::sin(0.5 * delta);
    auto f = [&](double theta) {
        double st = std::sin(theta);
        double b = kpar * st;
        double f0 = phi_kernel_integral(0, b);
        double f1 = phi_kernel_integral(1, b);
        double f2 = phi_kernel_integral(2, b);
        double inner = std::cos(delta) * f0 + 2 * beta * c2 * st * f1
            + (beta * beta - c2 * c2) * st * st * (f0 - f2) + (beta * beta + s2 * s2) * st * st * f2;
        return st * inner;
    };
    QuadResult q = integrate_1d(f, 0.0, pi, spec);
    return em_cf_prefactor(p, tau1, tau2) * g2 * q.value;
}

CFValue scalar_cf_continuous(double tau1, double tau2, const RotationParams& p, Method method,
                             const QuadratureSpec& spec)
{
    check_separation(p, tau1, tau2);
    const Constants& k = p.constants();
    CFValue out;
    out.kind = FieldKind::scalar;
    out.tau1 = tau1;
    out.tau2 = tau2;
    out.method = method;
    double delta = p.delta(tau1, tau2);
    double B = lab_separation(p, tau1, tau2);
    double s2 = std::sin(0.5 * delta);
    if (method == Method::closed_form) {
        double chord = 2 * p.radius() * s2;
        out.value = -(k.hbar * k.c / pi) / (B * B - chord * chord);
        return out;
    }
    if (method != Method::quadrature)
        throw MethodMismatch("scalar_cf_continuous supports closed-form and quadrature");
    double r = p.radius();
    double e = 2 * r * s2 / B;
    auto f = [&](double theta, double phi) {
        double d = e * std::sin(theta) * std::sin(phi) - 1;
        return 1.0 / (d * d);
    };
    QuadResult q = integrate_sphere(f, spec);
    double pref = -k.hbar * k.c / (4 * pi * pi * B * B);
    out.value = pref * q.value;
    out.error_estimate = std::abs(pref) * q.error;
    return out;
}

}  // namespace zpr
