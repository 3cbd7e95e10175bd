#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "zpr/cf_discrete.hpp"
#include "zpr/stochastic.hpp"

using namespace zpr;

TEST_CASE("Philox4x32-10 known-answer vectors")
{
    using B = Philox4x32::Block;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff})
          == B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0})
          == B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("phase moments")
{
    const int n = 20000;
    double sc = 0, ss = 0, sc2 = 0;
    for (int i = 0; i < n; ++i) {
        double t = mode_phase(7, i);
        CHECK(t >= 0.0);
        CHECK(t < two_pi);
        sc += std::cos(t);
        ss += std::sin(t);
        sc2 += std::cos(t) * std::cos(t);
    }
    // 5 sigma: sd(cos) = 1/sqrt(2), sd(cos^2) = 1/sqrt(8)
    CHECK(std::abs(sc / n) < 5 / std::sqrt(2.0 * n));
    CHECK(std::abs(ss / n) < 5 / std::sqrt(2.0 * n));
    CHECK(std::abs(sc2 / n - 0.5) < 5 / std::sqrt(8.0 * n));
}

TEST_CASE("mode set bookkeeping")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(5), {8, 16});
    CHECK(ms.size() == 8u * 16u * 5u * 2u);
    double sw = 0;
    for (const AngularNode& a : ms.nodes)
        sw += a.weight;
    CHECK(sw == doctest::Approx(4 * pi).epsilon(1e-12));
    for (std::size_t m = 0; m < ms.size(); m += 2)
        CHECK(ms.modes[m].k == ms.k0 * double((m / 2) % 5 + 1));
    // Sum rule: sum A^2/2 (1 - kx^2) equals the ladder variance.
    double s = 0;
    for (const Mode& md : ms.modes)
        s += 0.5 * md.amplitude * md.amplitude * (md.eps[0] * md.eps[0]);
    double expect = ladder_power(Normalization::spherical_delta, p.constants(), ms.k0) * (8 * pi / 3) * 225;
    CHECK(s == doctest::Approx(expect).epsilon(1e-10));
    ModeSet one = build_mode_set(p, SpectrumSpec::discrete(1), {8, 16});
    for (const Mode& md : one.modes)
        CHECK(md.k * p.constants().c == doctest::Approx(p.omega()).epsilon(1e-15));
    CHECK_THROWS_AS(build_mode_set(p, SpectrumSpec::discrete(5), {4, 16}), ResolutionError);
    CHECK_THROWS_AS(build_mode_set(RotationParams::from_beta(1.0, 0.9, Constants::natural()),
                                   SpectrumSpec::discrete(100), {16, 32}),
                    ResolutionError);
}

TEST_CASE("single mode with zero phase is one plane wave")
{
    auto p = RotationParams::from_beta(1.0, 0.4, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(1), {8, 16});
    Mode m = ms.modes[3];
    ms.modes = {m};
    PhaseEnsemble pe{0, {0.0}};
    LabPoint x = lab_position(p, 0.8);
    FieldTriplet f = eval_lab_fields(ms, pe, x);
    double arg = m.k * (m.k_hat[0] * x.x + m.k_hat[1] * x.y + m.k_hat[2] * x.z - x.t);
    for (int i = 0; i < 3; ++i) {
        CHECK(f.E[i] == doctest::Approx(m.amplitude * m.eps[i] * std::cos(arg)).epsilon(1e-14).scale(1.0));
        CHECK(f.H[i] == doctest::Approx(m.amplitude * m.h[i] * std::cos(arg)).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("identical seeds give bit-identical fields")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(3), {8, 16});
    FieldTriplet a = eval_lab_fields(ms, make_phase_ensemble(ms, 42), p, 0.6);
    FieldTriplet b = eval_lab_fields(ms, make_phase_ensemble(ms, 42), p, 0.6);
    CHECK(std::memcmp(&a.E, &b.E, sizeof a.E) == 0);
    CHECK(std::memcmp(&a.H, &b.H, sizeof a.H) == 0);
    FieldTriplet c = eval_lab_fields(ms, make_phase_ensemble(ms, 43), p, 0.6);
    CHECK(a.E[0] != c.E[0]);
}

TEST_CASE("Monte Carlo I_(11) agrees with the discrete analytic value")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    double t2 = (pi / 2) / p.gamma();
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(6), {24, 48}, Normalization::plane_wave);
    CFValue mc = empirical_cf(FieldKind::EE, 1, 1, 0, t2, p, ms, MCOptions{400, 11, 0});
    double an = em_cf_discrete_I11(0, t2, p, DiscreteSpec::truncated_sum(6)).cf.value;
    REQUIRE(mc.stat_error.has_value());
    CHECK(std::abs(mc.value - an) < 3 * *mc.stat_error);
    CHECK(mc.method == Method::monte_carlo);
}

TEST_CASE("statistical error shrinks as 1/sqrt(n)")
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(2), {8, 16});
    LabPoint x = lab_position(p, 0.0);
    std::vector<double> ln, le;
    for (long n : {100L, 1000L, 10000L}) {
        MCRun r = run_seeds(ms, MCOptions{n, 5, 0}, 1, [&](const PhaseEnsemble& pe) {
            FieldTriplet f = eval_lab_fields(ms, pe, x);
            return std::vector<double>{f.E[0] * f.E[0]};
        });
        ln.push_back(std::log(double(n)));
        le.push_back(std::log(r.stats[0].stat_error));
    }
    double slope = (le[2] - le[0]) / (ln[2] - ln[0]);
    CHECK(slope == doctest::Approx(-0.5).epsilon(0.2));
}

TEST_CASE("energy density estimate at beta = 0 does not depend on tau")
{
    auto p = RotationParams::from_beta(1.0, 0.0, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(3), {16, 32});
    for (double tau : {0.0, 1.3, 4.4}) {
        EmpiricalEnergy e = empirical_energy_density(p, ms, MCOptions{400, 3, 0}, tau);
        CHECK(std::abs(e.w.mean - e.w_expected) < 4 * e.w.stat_error);
    }
}

TEST_CASE("continuous band-limited ensemble reproduces its energy")
{
    auto p = RotationParams::from_beta(1.0, 0.2, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::continuous(3.0, 6), {16, 32});
    EmpiricalEnergy e = empirical_energy_density(p, ms, MCOptions{400, 9, 0}, 0.5);
    CHECK(std::abs(e.w.mean - e.w_expected) < 4 * e.w.stat_error);
}

TEST_CASE("pairwise reduction and manifest")
{
    std::vector<double> x(1000, 0.1);
    CHECK(pairwise_sum(x.data(), x.size()) == doctest::Approx(100.0).epsilon(1e-14));
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(2), {8, 16});
    std::string m = run_manifest(p, ms, MCOptions{10, 77, 1});
    CHECK(m.find("base_seed = 77") != std::string::npos);
    CHECK(m.find("rng = philox4x32-10") != std::string::npos);
}
