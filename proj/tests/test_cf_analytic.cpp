#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zpr/cf_analytic.hpp"

using namespace zpr;

namespace {

double tau_for(const RotationParams& p, double delta) { return delta / (p.omega() * p.gamma()); }

}  // namespace

TEST_CASE("sin-power integrals")
{
    CHECK(sin_power_integral(1, 0.0) == 2.0);
    CHECK(sin_power_integral(3, 0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-16));
    CHECK(sin_power_integral(5, 0.0) == doctest::Approx(16.0 / 15.0).epsilon(1e-16));
    // arbitrary-precision quadrature at k = 0.7
    CHECK(sin_power_integral(1, 0.7) == doctest::Approx(10.875957713599344).epsilon(1e-13));
    CHECK(sin_power_integral(3, 0.7) == doctest::Approx(9.0663972881219637).epsilon(1e-13));
    CHECK(sin_power_integral(5, 0.7) == doctest::Approx(8.0411505881347793).epsilon(1e-13));
}

TEST_CASE("phi kernels")
{
    CHECK(phi_kernel_integral(0, 0.3) == doctest::Approx(9.9204382176960105).epsilon(1e-13));
    CHECK(phi_kernel_integral(1, 0.3) == doctest::Approx(-5.3622809220762134).epsilon(1e-13));
    CHECK(phi_kernel_integral(2, 0.3) == doctest::Approx(5.943522456416993).epsilon(1e-13));
    CHECK(phi_kernel_integral(0, 0.0) == doctest::Approx(2 * pi).epsilon(1e-15));
    CHECK(phi_kernel_integral(1, 0.0) == 0.0);
}

TEST_CASE("k parameter is continuous through delta = 0")
{
    CHECK(k_parameter(0.5, 0.0) == -0.5);
    CHECK(k_parameter(0.5, 1e-5) == doctest::Approx(k_parameter(0.5, 2e-4)).epsilon(1e-8));
    CHECK(k_parameter(0.5, 1.0) == doctest::Approx(-0.5 * std::sin(0.5) / 0.5).epsilon(1e-15));
}

TEST_CASE("continuous EM correlations at beta = 0.5, delta = 1")
{
    // Direct sphere quadrature of the plane-wave sum with the tetrad rows (natural units).
    auto p = RotationParams::from_beta(1.0, 0.5, Constants::natural());
    double t2 = tau_for(p, 1.0);
    struct Oracle {
        int a, b;
        double v;
    };
    for (Oracle o : {Oracle{1, 1, 7.13206034676134}, Oracle{2, 2, 0.8653239252896613}, Oracle{3, 3, 8.413371286789289},
                     Oracle{1, 2, -3.4480275063319485}, Oracle{2, 1, 3.4480275063319477}}) {
        for (Method m : {Method::closed_form, Method::quadrature}) {
            CAPTURE(o.a);
            CAPTURE(o.b);
            double v = em_cf_continuous(o.a, o.b, FieldKind::EE, 0, t2, p, m).value;
            CHECK(v == doctest::Approx(o.v).epsilon(1e-10));
        }
    }
    CHECK(em_cf_continuous(1, 3, FieldKind::EE, 0, t2, p, Method::closed_form).value == 0.0);
    CHECK(std::abs(em_cf_continuous(1, 3, FieldKind::EE, 0, t2, p, Method::quadrature).value) < 1e-12);
    CHECK(em_cf_continuous(1, 1, FieldKind::HH, 0, t2, p, Method::quadrature).value
          == doctest::Approx(7.13206034676134).epsilon(1e-10));
    CHECK(em_I11_kernel_assembly(0, t2, p) == doctest::Approx(7.13206034676134).epsilon(1e-10));
}

TEST_CASE("continuous correlations are stationary")
{
    auto p = RotationParams::from_beta(1.0, 0.7, Constants::natural());
    double t2 = tau_for(p, 2.0);
    double a = em_cf_continuous(2, 2, FieldKind::EE, 0, t2, p, Method::quadrature).value;
    double b = em_cf_continuous(2, 2, FieldKind::EE, 3.3, 3.3 + t2, p, Method::quadrature).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("coincidence and method errors")
{
    auto p = RotationParams::from_beta(1.0, 0.4, Constants::natural());
    CHECK_THROWS_AS(em_cf_continuous(1, 1, FieldKind::EE, 0.5, 0.5, p, Method::closed_form), CoincidenceLimit);
    CHECK_THROWS_AS(em_cf_continuous(1, 1, FieldKind::EE, 0, 1, p, Method::monte_carlo), MethodMismatch);
    CHECK_THROWS_AS(scalar_cf_continuous(0, 1, p, Method::monte_carlo), MethodMismatch);
}

TEST_CASE("scalar correlation")
{
    auto p = RotationParams::from_beta(1.0, 0.5, Constants::natural());
    double t2 = tau_for(p, 1.0);
    CHECK(scalar_cf_continuous(0, t2, p).value == doctest::Approx(-0.4133083291132074).epsilon(1e-13));
    CHECK(scalar_cf_continuous(0, t2, p, Method::quadrature).value == doctest::Approx(-0.4133083291132074).epsilon(1e-10));
    auto still = RotationParams::from_radius(1.0, 0.0, Constants::natural());
    CHECK(scalar_cf_continuous(0, 2.0, still).value == doctest::Approx(-1 / (4 * pi)).epsilon(1e-15));
}
