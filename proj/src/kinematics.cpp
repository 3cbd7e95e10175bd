#include "zpr/kinematics.hpp"

#include <cmath>
#include <string>

namespace zpr {

double dot(const FourVector& a, const FourVector& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z - a.t * b.t;
}

FourVector operator+(const FourVector& a, const FourVector& b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t};
}

FourVector operator-(const FourVector& a, const FourVector& b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t};
}

FourVector operator*(double s, const FourVector& a)
{
    return {s * a.x, s * a.y, s * a.z, s * a.t};
}

//---------------------------------------------------------------------------//

RotationParams::RotationParams(double omega, double radius, double beta, const Constants& k)
    : omega_(omega), radius_(radius), beta_(beta), k_(k)
{
    if (!(omega >= 0) || !(radius >= 0) || !std::isfinite(omega) || !std::isfinite(radius))
        throw InvalidParams("omega and radius must be finite and non-negative");
    if (!(beta < beta_limit))
        throw InvalidParams("beta = " + std::to_string(beta) + " is not below 1 - 1e-12");
    gamma_ = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

RotationParams RotationParams::from_radius(double omega, double radius, const Constants& k)
{
    return RotationParams(omega, radius, omega * radius / k.c, k);
}

RotationParams RotationParams::from_beta(double omega, double beta, const Constants& k)
{
    if (!(beta >= 0))
        throw InvalidParams("beta must be non-negative");
    if (omega == 0 && beta > 0)
        throw InvalidParams("nonzero beta needs nonzero omega");
    double radius = omega > 0 ? beta * k.c / omega : 0.0;
    return RotationParams(omega, radius, beta, k);
}

//---------------------------------------------------------------------------//

FourVector four_velocity(const RotationParams& p, double tau)
{
    double a = p.alpha(tau);
    double bg = p.beta() * p.gamma();
    double c = p.constants().c;
    return {-c * bg * std::sin(a), c * bg * std::cos(a), 0.0, c * p.gamma()};
}

FourVector four_acceleration(const RotationParams& p, double tau)
{
    double a = p.alpha(tau);
    double g = p.gamma();
    double mag = p.radius() * p.omega() * p.omega() * g * g;
    return {-mag * std::cos(a), -mag * std::sin(a), 0.0, 0.0};
}

LabPoint lab_position(const RotationParams& p, double tau)
{
    double a = p.alpha(tau);
    return {p.gamma() * tau, p.radius() * std::cos(a), p.radius() * std::sin(a), 0.0};
}

Tetrad frenet_serret_tetrad(const RotationParams& p, double tau)
{
    double a = p.alpha(tau);
    double s = std::sin(a), c = std::cos(a);
    double g = p.gamma(), bg = p.beta() * g;
    Tetrad t;
    t.tau = tau;
    t.kind = TetradKind::frenet_serret;
    t.mu[0] = {c, s, 0, 0};
    t.mu[1] = {-g * s, g * c, 0, bg};
    t.mu[2] = {0, 0, 1, 0};
    t.mu[3] = {-bg * s, bg * c, 0, g};
    return t;
}

Tetrad fermi_walker_tetrad(const RotationParams& p, double tau)
{
    Tetrad fs = frenet_serret_tetrad(p, tau);
    double w = p.gamma() * p.alpha(tau);
    double cw = std::cos(w), sw = std::sin(w);
    Tetrad t = fs;
    t.kind = TetradKind::fermi_walker;
    t.mu[0] = cw * fs.mu[0] - sw * fs.mu[1];
    t.mu[1] = sw * fs.mu[0] + cw * fs.mu[1];
    return t;
}

Tetrad make_tetrad(const RotationParams& p, double tau, TetradKind kind)
{
    return kind == TetradKind::frenet_serret ? frenet_serret_tetrad(p, tau)
                                             : fermi_walker_tetrad(p, tau);
}

std::array<double, 4> tetrad_acceleration(const RotationParams& p, double tau, TetradKind kind)
{
    Tetrad t = make_tetrad(p, tau, kind);
    FourVector acc = four_acceleration(p, tau);
    std::array<double, 4> out{};
    for (int a = 0; a < 4; ++a)
        out[a] = dot(t.mu[a], acc);
    return out;
}

double orthonormality_residual(const Tetrad& t)
{
    double worst = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double eta = a != b ? 0.0 : (a == 3 ? -1.0 : 1.0);
            worst = std::max(worst, std::abs(dot(t.mu[a], t.mu[b]) - eta));
        }
    }
    return worst;
}

FrenetCoefficients frenet_coefficients(const RotationParams& p)
{
    double g2 = p.gamma() * p.gamma();
    return {-p.beta() * p.omega() * g2, p.omega() * g2, 0.0};
}

double rotation_period(const RotationParams& p)
{
    return two_pi / (p.omega() * p.gamma());
}

}  // namespace zpr
