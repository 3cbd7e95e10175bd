#pragma once

#include <array>
#include <stdexcept>

#include "zpr/constants.hpp"

namespace zpr {

// Components stored as (x, y, z, ct); metric diag(1, 1, 1, -1).
struct FourVector {
    double x = 0, y = 0, z = 0, t = 0;

    double& operator[](int i) { return i == 0 ? x : i == 1 ? y : i == 2 ? z : t; }
    double operator[](int i) const { return i == 0 ? x : i == 1 ? y : i == 2 ? z : t; }
};

double dot(const FourVector& a, const FourVector& b);
FourVector operator+(const FourVector& a, const FourVector& b);
FourVector operator-(const FourVector& a, const FourVector& b);
FourVector operator*(double s, const FourVector& a);

class InvalidParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Uniform circular motion with angular velocity omega on a circle of given radius.
class RotationParams {
public:
    static constexpr double beta_limit = 1.0 - 1e-12;

    static RotationParams from_radius(double omega, double radius,
                                      const Constants& k = Constants::si());
    static RotationParams from_beta(double omega, double beta,
                                    const Constants& k = Constants::si());

    double omega() const { return omega_; }
    double radius() const { return radius_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    const Constants& constants() const { return k_; }

    // Lab rotation angle Omega*gamma*tau.
    double alpha(double tau) const { return omega_ * gamma_ * tau; }
    // Lab angle separation of two proper times.
    double delta(double tau1, double tau2) const { return alpha(tau2) - alpha(tau1); }

private:
    RotationParams(double omega, double radius, double beta, const Constants& k);

    double omega_;
    double radius_;
    double beta_;
    double gamma_;
    Constants k_;
};

enum class TetradKind { frenet_serret, fermi_walker };

struct Tetrad {
    std::array<FourVector, 4> mu;
    double tau = 0;
    TetradKind kind = TetradKind::frenet_serret;
};

struct LabPoint {
    double t, x, y, z;
};

FourVector four_velocity(const RotationParams& p, double tau);
// dU/dtau in lab components.
FourVector four_acceleration(const RotationParams& p, double tau);
LabPoint lab_position(const RotationParams& p, double tau);

Tetrad frenet_serret_tetrad(const RotationParams& p, double tau);
Tetrad fermi_walker_tetrad(const RotationParams& p, double tau);
Tetrad make_tetrad(const RotationParams& p, double tau, TetradKind kind);

// Projections mu_(a) . dU/dtau.
std::array<double, 4> tetrad_acceleration(const RotationParams& p, double tau, TetradKind kind);

// Max over (a,b) of |mu_(a).mu_(b) - eta_(ab)|.
double orthonormality_residual(const Tetrad& t);

// Frenet-Serret curvature and torsions (b, c~, d) of the circular worldline.
struct FrenetCoefficients {
    double b, c, d;
};
FrenetCoefficients frenet_coefficients(const RotationParams& p);

double rotation_period(const RotationParams& p);

}  // namespace zpr
