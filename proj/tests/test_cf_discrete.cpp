#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zpr/cf_discrete.hpp"

using namespace zpr;

namespace {

double tau_for(const RotationParams& p, double delta) { return delta / (p.omega() * p.gamma()); }

}  // namespace

TEST_CASE("rotation temperature")
{
    auto k = Constants::si();
    CHECK(rotation_temperature(1e13, k) == doctest::Approx(12.156624712070311).epsilon(1e-14));
    CHECK(rotation_temperature(0.0, k) == 0.0);
}

TEST_CASE("closed kernels")
{
    CHECK(sd_closed(pi) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(sd_closed(2 * pi / 3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(sd_closed(1.0) == doctest::Approx(6.0105021403750735).epsilon(1e-14));
    CHECK(sd_closed(1e-3) * 1e-12 == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(scalar_kernel_closed(pi) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(scalar_kernel_closed(1.0) == doctest::Approx(-1.0876713248350107).epsilon(1e-14));
    CHECK(sd_partial_fractions(1.0, 10000) == doctest::Approx(sd_closed(1.0)).epsilon(1e-8));
}

TEST_CASE("thermal kernels are smooth through F = 0")
{
    // int 2 w^3 / (exp(2 pi w) - 1) = 1/120 and int 2 w / (exp(2 pi w) - 1) = 1/12
    CHECK(sd_thermal_kernel(0.0) == doctest::Approx(1.0 / 120).epsilon(1e-14));
    CHECK(sd_thermal_kernel(1e-9) == doctest::Approx(1.0 / 120).epsilon(1e-12));
    CHECK(scalar_thermal_kernel(0.0) == doctest::Approx(-1.0 / 12).epsilon(1e-14));
    for (double F : {0.999, 1.001})
        CHECK(sd_thermal_kernel(F) == doctest::Approx(sd_closed(F) - 6 / std::pow(F, 4)).epsilon(1e-10));
}

TEST_CASE("Abel-Plana split reproduces the closed kernels")
{
    for (double F : {0.2, 1.0, 3.0, 5.5, 6.2}) {
        ThermalSplit s = sd_thermal_split(F, 1.0);
        CHECK(s.total == doctest::Approx(sd_closed(F)).epsilon(1e-10));
        ThermalSplit t = scalar_thermal_split(F, 1.0);
        CHECK(t.total == doctest::Approx(scalar_kernel_closed(F)).epsilon(1e-10));
    }
    // Omega scaling: Omega^4 S_d
    ThermalSplit s = sd_thermal_split(pi, 2.0);
    CHECK(s.total == doctest::Approx(16 * 0.125).epsilon(1e-10));
    CHECK_THROWS_AS(sd_thermal_split(2 * pi, 1.0), ThermalDivergence);
    CHECK_THROWS_AS(sd_thermal_split(-7.0, 1.0), ThermalDivergence);
}

TEST_CASE("thermal integrand with T_rot equals the rotation form")
{
    auto k = Constants::si();
    double omega = 3e12, T = rotation_temperature(omega, k);
    for (double x : {0.1, 1.0, 5.0})
        CHECK(thermal_integrand_rotation(x * omega, 0.4 / omega, omega)
              == doctest::Approx(thermal_integrand_planck(x * omega, 0.4 / omega, T, k)).epsilon(1e-13));
}

TEST_CASE("discrete I_(11) and scalar at beta = 0.3, delta = pi/2")
{
    // Direct sphere quadrature of the tetrad-projected plane-wave sum with the closed kernels.
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    double t2 = tau_for(p, pi / 2);
    DiscreteCF em = em_cf_discrete_I11(0, t2, p);
    CHECK(em.cf.value == doctest::Approx(0.11513764855057486).epsilon(1e-10));
    CHECK(em.zero_point_part + em.thermal_part == doctest::Approx(em.cf.value).epsilon(1e-10));
    DiscreteCF sc = scalar_cf_discrete(0, t2, p);
    CHECK(sc.cf.value == doctest::Approx(-0.16944582326961583).epsilon(1e-10));
    CHECK(sc.zero_point_part + sc.thermal_part == doctest::Approx(sc.cf.value).epsilon(1e-10));
}

TEST_CASE("discrete correlations are periodic in the rotation period")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    double t2 = tau_for(p, pi / 2), T = 2 * pi / (p.omega() * p.gamma());
    double v0 = em_cf_discrete_I11(0, t2, p).cf.value;
    for (int n : {1, 2}) {
        CHECK(em_cf_discrete_I11(0, t2 + n * T, p).cf.value == doctest::Approx(v0).epsilon(1e-10));
        CHECK(scalar_cf_discrete(0, t2 + n * T, p).cf.value
              == doctest::Approx(scalar_cf_discrete(0, t2, p).cf.value).epsilon(1e-10));
    }
}

TEST_CASE("resonances are reported")
{
    auto p = RotationParams::from_beta(1.0, 0.5, Constants::natural());
    // F_d spans delta -+ 2 beta |sin(delta/2)|, both ends increasing in delta, so
    // F_d reaches 2 pi m only near delta = 2 pi m.
    double t2 = tau_for(p, 2 * pi + 1e-8);
    try {
        em_cf_discrete_I11(0, t2, p);
        FAIL("expected ResonanceError");
    } catch (const ResonanceError& e) {
        CHECK(e.m == 1);
        CHECK(std::isfinite(e.u_star));
    }
    CHECK_NOTHROW(em_cf_discrete_I11(0, tau_for(p, 2 * pi + 0.1), p));
}

TEST_CASE("truncated ladder converges to the regularized value only in the Abel sense")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    double t2 = tau_for(p, pi / 2);
    DiscreteCF tr = em_cf_discrete_I11(0, t2, p, DiscreteSpec::truncated_sum(4));
    CHECK(std::isfinite(tr.cf.value));
    CHECK(std::isnan(tr.thermal_part));
}
