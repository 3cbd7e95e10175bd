#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zpr/constants.hpp"
#include "zpr/numerics.hpp"

using namespace zpr;

TEST_CASE("Gauss-Kronrod on smooth and peaked integrands")
{
    QuadResult r = integrate_1d([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
    CHECK(r.error < 1e-10);
    QuadResult p = integrate_1d([](double x) { return 1e-4 / (x * x + 1e-8); }, -1.0, 1.0);
    CHECK(p.value == doctest::Approx(2.0 * std::atan(1e4)).epsilon(1e-10));
}

TEST_CASE("semi-infinite Bose integral")
{
    QuadResult r = integrate_semi_infinite([](double x) { return x > 0 ? x * x * x / std::expm1(x) : 0.0; }, 0.0);
    CHECK(r.value == doctest::Approx(std::pow(pi, 4) / 15).epsilon(1e-13));
}

TEST_CASE("non-convergence reports best estimate")
{
    QuadratureSpec spec{1e-14, 0, 3};
    try {
        integrate_1d([](double x) { return std::sin(200 * x); }, 0.0, 10.0, spec);
        FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.error_estimate > 0);
    }
}

TEST_CASE("sphere quadrature of angular moments")
{
    CHECK(integrate_sphere([](double, double) { return 1.0; }).value == doctest::Approx(4 * pi).epsilon(1e-14));
    double m = integrate_sphere([](double th, double ph) {
                   double kx = std::sin(th) * std::cos(ph);
                   return 1 - kx * kx;
               }).value;
    CHECK(m == doctest::Approx(8 * pi / 3).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre weights and exactness")
{
    GaussLegendre g = gauss_legendre(20);
    double sw = 0, s38 = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        sw += g.w[i];
        s38 += g.w[i] * std::pow(g.x[i], 38);
    }
    CHECK(sw == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(s38 == doctest::Approx(2.0 / 39).epsilon(1e-13));
}

TEST_CASE("Neumaier summation")
{
    KahanSum k;
    k.add(1.0);
    k.add(1e100);
    k.add(1.0);
    k.add(-1e100);
    CHECK(k.value() == 2.0);
}

TEST_CASE("direct sum of convergent and divergent series")
{
    SeriesSumResult r = direct_sum([](long n) { double x = double(n); return n == 0 ? 0.0 : 1.0 / (x * x * x * x * x * x); });
    CHECK(r.value == doctest::Approx(std::pow(pi, 6) / 945).epsilon(1e-13));
    CHECK_THROWS_AS(direct_sum([](long n) { return double(n); }), DivergentSeries);
}

TEST_CASE("Abel sums of oscillating power series")
{
    AbelOptions even;
    even.even_powers = true;
    auto cubic = [](double F) {
        return [F](long n) { double x = double(n); return x * x * x * std::cos(x * F); };
    };
    // Sum n^3 cos(n F) = (3 - 2 sin^2(F/2)) / (8 sin^4(F/2))
    CHECK(abel_sum(cubic(pi), even).value == doctest::Approx(0.125).epsilon(1e-7));
    CHECK(abel_sum(cubic(2 * pi / 3), even).value == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
    // Sum n cos(n pi) = -1/4
    CHECK(abel_sum([](long n) { return double(n) * std::cos(n * pi); }, even).value
          == doctest::Approx(-0.25).epsilon(1e-7));
    // Grandi: 1 - 1 + 1 - ... = 1/2
    CHECK(abel_sum([](long n) { return n % 2 ? -1.0 : 1.0; }).value == doctest::Approx(0.5).epsilon(1e-9));
    // Convergent series keeps its value.
    AbelOptions conv;
    conv.eta0 = 0.1;
    CHECK(abel_sum([](long n) { double x = double(n); return x * x * x * std::exp(-x); }, conv).value
          == doctest::Approx(std::exp(1.0) * (std::exp(2.0) + 4 * std::exp(1.0) + 1) / std::pow(std::exp(1.0) - 1, 4))
                 .epsilon(1e-12));
}

TEST_CASE("Abel-Plana identity")
{
    for (double s : {0.5, 1.0, 2.0}) {
        AbelPlanaTerms t = abel_plana_check(cubic_exponential(s));
        CHECK(std::abs(t.residual) < 1e-10);
        CHECK(t.integral == doctest::Approx(6 / std::pow(s, 4)).epsilon(1e-12));
    }
    AbelPlanaTerms e = abel_plana_check(exponential(1.0));
    CHECK(e.series == doctest::Approx(1 / (1 - std::exp(-1.0))).epsilon(1e-13));
    CHECK(std::abs(e.residual) < 1e-10);
    CHECK(std::abs(abel_plana_check(zero_function()).residual) == 0.0);
}
