#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "zpr/cf_discrete.hpp"
#include "zpr/thermo.hpp"

using namespace zpr;

TEST_CASE("EM energy density at Omega = 1e13 /s, beta = 0.3")
{
    auto p = RotationParams::from_beta(1e13, 0.3, Constants::si());
    ThermoReport r = em_energy_density(p, 20);
    CHECK(r.T_rot == doctest::Approx(12.156624712070311).epsilon(1e-14));
    CHECK(r.w_thermal == doctest::Approx(3.7404933946703053e-11).epsilon(1e-13));
    CHECK(r.w_total_cutoff == doctest::Approx(r.w_thermal + r.w_zp_cutoff).epsilon(1e-15));
    CHECK(em_thermal_from_planck(p) == doctest::Approx(r.w_thermal).epsilon(1e-8));
    CHECK(em_energy_density(p, 21).w_zp_cutoff > r.w_zp_cutoff);
}

TEST_CASE("EM anisotropy")
{
    auto k = Constants::si();
    CHECK(em_energy_density(RotationParams::from_beta(1e12, 0.0, k), 1).anisotropy_factor == 2.0);
    CHECK(em_energy_density(RotationParams::from_beta(1e12, 0.0, k), 1).w_thermal > 0);
    CHECK(em_energy_density(RotationParams::from_radius(0.0, 0.0, k), 1).w_thermal == 0.0);
    CHECK_THROWS(em_energy_density(RotationParams::from_beta(1e12, 0.0, k), 0));
    for (double beta : {0.0, 0.5, 0.9}) {
        auto p = RotationParams::from_beta(1.0, beta, Constants::natural());
        double g2 = p.gamma() * p.gamma();
        for (TetradKind kind : {TetradKind::frenet_serret, TetradKind::fermi_walker})
            CHECK(em_tetrad_energy_factor(p, 0.37, kind) == doctest::Approx((4 * g2 - 1) / 3).epsilon(1e-14));
    }
}

TEST_CASE("energy from mode moments matches the ladder formula")
{
    auto p = RotationParams::from_beta(2.0, 0.6, Constants::natural());
    double zp = em_energy_density(p, 7).w_zp_cutoff;
    CHECK(em_energy_from_moments(p, 7, Normalization::spherical_delta, 0.2) == doctest::Approx(zp).epsilon(1e-12));
    CHECK(em_energy_from_moments(p, 7, Normalization::plane_wave, 0.2) == doctest::Approx(zp / 2).epsilon(1e-12));
}

TEST_CASE("scalar energy density")
{
    auto p = RotationParams::from_beta(1e13, 0.6, Constants::si());
    ThermoReport s = scalar_energy_density(p, 20);
    double g2 = p.gamma() * p.gamma();
    CHECK(s.w_thermal / s.inertial_reference_thermal == doctest::Approx((4 * g2 - 1) / 3).epsilon(1e-12));
    ScalarStress st = scalar_lab_stress(p, 20);
    CHECK(st.T[0][0] == doctest::Approx(st.T[3][3] / 3).epsilon(1e-12));
    CHECK(std::abs(st.T[0][3]) < 1e-12 * st.T[3][3]);
    CHECK(scalar_tetrad_energy(p, st, 0.3) == doctest::Approx(s.w_zp_cutoff).epsilon(1e-12));
}

TEST_CASE("vacuum force density")
{
    auto k = Constants::si();
    double omega = 1e13, r0 = k.c / omega;
    ForcePoint f = vacuum_force_density(omega, 0.5 * r0, k, 1e-6);
    CHECK(f.f_vac < 0);
    CHECK(f.f_vac == doctest::Approx(f.f_vac_numeric).epsilon(1e-7));
    CHECK(f.F_sphere == doctest::Approx(f.f_vac * 4.0 / 3.0 * pi * 1e-18).epsilon(1e-14));
    CHECK(vacuum_force_density(omega, 0.0, k).f_vac == 0.0);
    double small = vacuum_force_density(omega, 1e-3 * r0, k).f_vac;
    CHECK(vacuum_force_density(omega, 2e-3 * r0, k).f_vac / small == doctest::Approx(2.0).epsilon(1e-5));
    CHECK_THROWS_AS(vacuum_force_density(omega, r0, k), DomainError);
    CHECK_THROWS_AS(vacuum_force_density(omega, -1.0, k), DomainError);
}

TEST_CASE("Casimir comparison")
{
    auto k = Constants::si();
    CasimirResult c = casimir_force(1e-15, k);
    CHECK(c.energy == doctest::Approx(0.09 * k.hbar * k.c / 2e-15).epsilon(1e-15));
    CHECK(c.force == doctest::Approx(c.energy / 1e-15).epsilon(1e-15));
    CHECK_THROWS_AS(casimir_force(0.0, k), DomainError);
}

TEST_CASE("hadron-scale estimates")
{
    HadronEstimate h = hadron_estimates(1e-18, 1e-15, 1 - 1e-6, Constants::si());
    CHECK(h.prefactor_j_per_m == doctest::Approx(2.9817636350285363e-07).epsilon(1e-13));
    CHECK(h.force_newton == doctest::Approx(-74544.0908697586).epsilon(1e-9));
    CHECK(h.force_gev_per_fermi == doctest::Approx(-0.46526761961102603).epsilon(1e-9));
    CHECK(h.T_rot == doctest::Approx(364446440341.5101).epsilon(1e-13));
    CHECK_THROWS_AS(hadron_estimates(1e-18, 1e-15, 1.0, Constants::si()), DomainError);
}

TEST_CASE("cubic sum")
{
    CHECK(cubic_sum(1) == 1.0);
    CHECK(cubic_sum(20) == 44100.0);
}
