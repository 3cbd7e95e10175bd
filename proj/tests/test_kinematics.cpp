#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zpr/kinematics.hpp"

using namespace zpr;

TEST_CASE("construction from radius and from beta agree")
{
    auto k = Constants::si();
    auto a = RotationParams::from_radius(1e6, 30.0, k);
    auto b = RotationParams::from_beta(1e6, 30.0 * 1e6 / k.c, k);
    CHECK(a.beta() == doctest::Approx(b.beta()).epsilon(1e-15));
    CHECK(a.radius() == doctest::Approx(b.radius()).epsilon(1e-15));
    CHECK_THROWS_AS(RotationParams::from_radius(1e9, 1.0, k), InvalidParams);
    CHECK_THROWS_AS(RotationParams::from_beta(1.0, -0.1, k), InvalidParams);
    CHECK_THROWS_AS(RotationParams::from_beta(0.0, 0.2, k), InvalidParams);
}

TEST_CASE("four-velocity is normalized to -c^2")
{
    auto p = RotationParams::from_beta(2.0, 0.8, Constants::natural());
    for (double tau : {0.0, 0.3, 2.7}) {
        FourVector u = four_velocity(p, tau);
        CHECK(dot(u, u) == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(dot(u, four_acceleration(p, tau)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    }
}

TEST_CASE("tetrads are orthonormal")
{
    for (double beta : {0.0, 0.3, 0.99}) {
        auto p = RotationParams::from_beta(1.0, beta, Constants::natural());
        for (double tau : {0.0, 0.7, 13.0}) {
            CHECK(orthonormality_residual(frenet_serret_tetrad(p, tau)) < 1e-12);
            CHECK(orthonormality_residual(fermi_walker_tetrad(p, tau)) < 1e-12);
        }
    }
}

TEST_CASE("beta = 0 frame is the rotating identity frame at tau = 0")
{
    auto p = RotationParams::from_beta(1.0, 0.0, Constants::natural());
    Tetrad t = frenet_serret_tetrad(p, 0.0);
    CHECK(t.mu[0][0] == 1.0);
    CHECK(t.mu[1][1] == 1.0);
    CHECK(t.mu[2][2] == 1.0);
    CHECK(t.mu[3][3] == 1.0);
}

TEST_CASE("Frenet-Serret frame at beta = 0.6, tau = 0.7")
{
    // alpha = Omega gamma tau = 0.875
    auto p = RotationParams::from_beta(1.0, 0.6, Constants::natural());
    Tetrad t = frenet_serret_tetrad(p, 0.7);
    double c = std::cos(0.875), s = std::sin(0.875);
    CHECK(t.mu[0][0] == doctest::Approx(c).epsilon(1e-15));
    CHECK(t.mu[0][1] == doctest::Approx(s).epsilon(1e-15));
    CHECK(t.mu[1][0] == doctest::Approx(-1.25 * s).epsilon(1e-15));
    CHECK(t.mu[1][3] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(t.mu[3][3] == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("Frenet-Serret coefficients match the derivative of the frame")
{
    auto p = RotationParams::from_beta(1.3, 0.45, Constants::natural());
    FrenetCoefficients fc = frenet_coefficients(p);
    double g2 = p.gamma() * p.gamma();
    CHECK(fc.b == doctest::Approx(-0.45 * 1.3 * g2).epsilon(1e-14));
    CHECK(fc.c == doctest::Approx(1.3 * g2).epsilon(1e-14));
    CHECK(fc.d == 0.0);
    double tau = 0.4, h = 1e-5;
    Tetrad a = frenet_serret_tetrad(p, tau - h), b = frenet_serret_tetrad(p, tau + h), t = frenet_serret_tetrad(p, tau);
    for (int i = 0; i < 4; ++i) {
        double d4 = (b.mu[3][i] - a.mu[3][i]) / (2 * h);
        double d1 = (b.mu[0][i] - a.mu[0][i]) / (2 * h);
        CHECK(d4 == doctest::Approx(fc.b * t.mu[0][i]).epsilon(1e-8).scale(1.0));
        CHECK(d1 == doctest::Approx(fc.c * t.mu[1][i] + fc.b * t.mu[3][i]).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("Fermi-Walker spatial axes are not rotated")
{
    // Fermi-Walker transport: d e_a/dtau has no component along the other spatial axes.
    auto p = RotationParams::from_beta(1.0, 0.7, Constants::natural());
    double tau = 1.1, h = 1e-5;
    Tetrad a = fermi_walker_tetrad(p, tau - h), b = fermi_walker_tetrad(p, tau + h), t = fermi_walker_tetrad(p, tau);
    for (int i = 0; i < 3; ++i) {
        FourVector d = (1 / (2 * h)) * (b.mu[i] - a.mu[i]);
        for (int j = 0; j < 3; ++j)
            CHECK(dot(d, t.mu[j]) == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
    }
    auto fs = tetrad_acceleration(p, tau, TetradKind::frenet_serret);
    CHECK(fs[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(std::abs(fs[0]) == doctest::Approx(0.7 * p.gamma() * p.gamma()).epsilon(1e-13));
}

TEST_CASE("rotation period")
{
    auto p = RotationParams::from_beta(2.0, 0.6, Constants::natural());
    CHECK(rotation_period(p) == doctest::Approx(2 * pi / (2.0 * 1.25)).epsilon(1e-15));
    CHECK(p.delta(0.1, 0.1 + rotation_period(p)) == doctest::Approx(2 * pi).epsilon(1e-15));
}
