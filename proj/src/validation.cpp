#include "zpr/validation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "zpr/cf_analytic.hpp"
#include "zpr/cf_discrete.hpp"
#include "zpr/stochastic.hpp"
#include "zpr/thermo.hpp"

namespace zpr {

bool CheckResult::pass() const
{
    if (items.empty())
        return false;
    for (const Measurement& m : items)
        if (!m.pass)
            return false;
    return true;
}

const Measurement* CheckResult::worst() const
{
    const Measurement* w = nullptr;
    double worst_ratio = -1;
    bool any_fail = !pass();
    for (const Measurement& m : items) {
        if (any_fail && m.pass)
            continue;
        double r = m.tolerance > 0 ? m.measured / m.tolerance : m.measured;
        if (!w || r > worst_ratio) {
            w = &m;
            worst_ratio = r;
        }
    }
    return w;
}

std::string CheckResult::summary_line() const
{
    char buf[512];
    const Measurement* w = worst();
    if (!w) {
        std::snprintf(buf, sizeof buf, "FAIL [%2d] %s: no measurements", id, title.c_str());
        return buf;
    }
    int failed = 0;
    for (const Measurement& m : items)
        failed += m.pass ? 0 : 1;
    std::snprintf(buf, sizeof buf, "%s [%2d] %s: %s = %.3e (tol %.1e); %zu checks, %d failed; %.2f s",
                  pass() ? "PASS" : "FAIL", id, title.c_str(), w->name.c_str(), w->measured, w->tolerance,
                  items.size(), failed, seconds);
    return buf;
}

namespace {

double rel_err(double a, double b)
{
    double s = std::max(std::abs(a), std::abs(b));
    return s == 0 ? 0.0 : std::abs(a - b) / s;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

void add(CheckResult& r, std::string name, double measured, double tol)
{
    r.items.push_back({std::move(name), measured, tol, measured <= tol});
}

double z_score(const SampleStats& s, double expected)
{
    return s.stat_error > 0 ? std::abs(s.mean - expected) / s.stat_error : std::abs(s.mean - expected) > 0 ? 1e300 : 0.0;
}

const double kBetas[] = {0.1, 0.5, 0.9};
const double kDeltas[] = {0.5, 1.0, 2.0, 5.0};

double tau_for(const RotationParams& p, double delta) { return delta / (p.omega() * p.gamma()); }

//---------------------------------------------------------------------------//

void criterion_1(CheckResult& r, const ValidationOptions&)
{
    QuadratureSpec tight{1e-13, 0, 20000};
    double worst = 0;
    for (double k : {0.0, 0.3, 0.7, 0.9, 0.99}) {
        for (int p : {1, 3, 5}) {
            double closed = sin_power_integral(p, k);
            double quad = integrate_1d(
                              [&](double t) {
                                  double s = std::sin(t);
                                  return std::pow(s, p) / std::pow(1 - k * k * s * s, 3.5);
                              },
                              0.0, pi, tight)
                              .value;
            worst = std::max(worst, rel_err(closed, quad));
        }
    }
    add(r, "max rel err closed vs quadrature", worst, 1e-9);
    double exact[] = {2.0, 4.0 / 3.0, 16.0 / 15.0};
    int ps[] = {1, 3, 5};
    for (int i = 0; i < 3; ++i)
        add(r, fmt("k=0 p=%.0f rel deviation from exact", ps[i]), rel_err(sin_power_integral(ps[i], 0.0), exact[i]),
            4 * std::numeric_limits<double>::epsilon());
}

void criterion_2(CheckResult& r, const ValidationOptions&)
{
    QuadratureSpec tight{1e-13, 0, 20000};
    double worst = 0;
    for (double b : {0.0, 0.3, -0.3, 0.8, -0.8}) {
        double scale = phi_kernel_integral(0, b);
        for (int m : {0, 1, 2}) {
            double closed = phi_kernel_integral(m, b);
            double quad = integrate_1d(
                              [&](double t) {
                                  double s = std::sin(t);
                                  double g = 1 + b * s;
                                  return std::pow(s, m) / (g * g * g * g);
                              },
                              0.0, two_pi, tight)
                              .value;
            worst = std::max(worst, std::abs(closed - quad) / std::max(std::abs(quad), scale));
        }
    }
    add(r, "max rel err phi-kernels vs quadrature", worst, 1e-9);
}

void criterion_3(CheckResult& r, const ValidationOptions&)
{
    auto k = Constants::natural();
    double worst = 0, shift = 0;
    for (double beta : kBetas) {
        auto p = RotationParams::from_beta(1.0, beta, k);
        for (double delta : kDeltas) {
            double t2 = tau_for(p, delta);
            double c = em_cf_continuous(1, 1, FieldKind::EE, 0, t2, p, Method::closed_form).value;
            double q = em_cf_continuous(1, 1, FieldKind::EE, 0, t2, p, Method::quadrature).value;
            worst = std::max(worst, rel_err(c, q));
            for (double s : {0.37, 5.1}) {
                double qs = em_cf_continuous(1, 1, FieldKind::EE, s, s + t2, p, Method::quadrature).value;
                double cs = em_cf_continuous(1, 1, FieldKind::EE, s, s + t2, p, Method::closed_form).value;
                shift = std::max({shift, rel_err(qs, q), rel_err(cs, c)});
            }
        }
    }
    add(r, "max rel err closed vs quadrature", worst, 1e-8);
    add(r, "max rel change under tau shift", shift, 1e-12);
}

void criterion_4(CheckResult& r, const ValidationOptions& opt)
{
    auto k = Constants::natural();
    const int pairs[][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
    for (FieldKind kind : {FieldKind::EE, FieldKind::HH}) {
        for (const auto& ab : pairs) {
            double worst = 0;
            for (double beta : kBetas) {
                auto p = RotationParams::from_beta(1.0, beta, k);
                for (double delta : kDeltas) {
                    double t2 = tau_for(p, delta);
                    double scale = std::abs(em_cf_continuous(1, 1, kind, 0, t2, p, Method::closed_form).value);
                    double v = em_cf_continuous(ab[0], ab[1], kind, 0, t2, p, Method::quadrature).value;
                    worst = std::max(worst, std::abs(v) / scale);
                }
            }
            std::string name = std::string("quadrature |") + to_string(kind) + "(" + std::to_string(ab[0])
                + std::to_string(ab[1]) + ")| / diagonal scale";
            add(r, name, worst, 1e-12);
        }
    }
    if (!opt.run_monte_carlo)
        return;
    auto p = RotationParams::from_beta(1.0, 0.3, k);
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(20), {64, 128}, Normalization::plane_wave);
    MCOptions mo{opt.mc_seeds, opt.seed, opt.workers};
    CFMatrix m = empirical_cf_matrix(FieldKind::EE, 0, tau_for(p, 0.5 * pi), p, ms, mo);
    for (const auto& ab : pairs) {
        const CFValue& v = m[ab[0] - 1][ab[1] - 1];
        add(r, "monte-carlo EE(" + std::to_string(ab[0]) + std::to_string(ab[1]) + ") |z|",
            std::abs(v.value) / *v.stat_error, 3.0);
    }
}

void criterion_5(CheckResult& r, const ValidationOptions&)
{
    auto k = Constants::natural();
    double worst = 0;
    for (double beta : kBetas) {
        auto p = RotationParams::from_beta(1.0, beta, k);
        for (double delta : kDeltas) {
            double t2 = tau_for(p, delta);
            double c = scalar_cf_continuous(0, t2, p, Method::closed_form).value;
            double q = scalar_cf_continuous(0, t2, p, Method::quadrature).value;
            worst = std::max(worst, rel_err(c, q));
        }
    }
    add(r, "max rel err closed vs quadrature", worst, 1e-8);
    double r0 = 0;
    for (double t : {0.25, 1.0, 3.0}) {
        auto p = RotationParams::from_radius(1.0, 0.0, k);
        double v = scalar_cf_continuous(0, t, p).value;
        double inertial = -1 / (pi * t * t);
        r0 = std::max(r0, rel_err(v, inertial));
    }
    add(r, "r=0 rel deviation from -hbar/(pi c t^2)", r0, 4 * std::numeric_limits<double>::epsilon());
}

void criterion_6(CheckResult& r, const ValidationOptions&)
{
    double ap = 0;
    for (double s : {0.5, 1.0, 2.0})
        ap = std::max(ap, std::abs(abel_plana_check(cubic_exponential(s)).residual));
    add(r, "Abel-Plana residual x^3 exp(-s x)", ap, 1e-8);

    AbelOptions ao;
    ao.even_powers = true;
    for (double F : {pi, two_pi / 3}) {
        double oracle = abel_sum([F](long n) { double x = static_cast<double>(n); return x * x * x * std::cos(x * F); }, ao).value;
        add(r, fmt("sd_closed(%.4f) vs Abel oracle", F), std::abs(sd_closed(F) - oracle), 1e-6);
    }
    add(r, "sd_closed(pi) - 1/8", std::abs(sd_closed(pi) - 0.125), 1e-6);
    add(r, "sd_closed(2pi/3) - 1/3", std::abs(sd_closed(two_pi / 3) - 1.0 / 3.0), 1e-6);

    double split = 0;
    for (double F : {0.05, 0.3, 1.0, 2.0, 3.0, pi, 4.0, 5.0, 6.0, 6.2, -1.5})
        split = std::max(split, rel_err(sd_thermal_split(F, 1.0).total, sd_closed(F)));
    add(r, "split total vs sd_closed", split, 1e-8);
}

void criterion_7(CheckResult& r, const ValidationOptions&)
{
    auto k = Constants::si();
    double identity = 0;
    for (double omega : {1e3, 1e9, 1e13, 3e15}) {
        double T = rotation_temperature(omega, k);
        for (double ft : {0.0, 0.3, 1.0, 4.0}) {
            for (double x : {0.01, 0.2, 1.0, 3.0, 8.0}) {
                double w = omega * x;
                double F = ft / omega;
                identity = std::max(identity, rel_err(thermal_integrand_rotation(w, F, omega), thermal_integrand_planck(w, F, T, k)));
            }
        }
    }
    add(r, "Planck-factor identity rotation vs T_rot", identity, 1e-13);

    // beta -> 0, k_y = 0: F_d = Omega t; the integrands coincide at t = 0.
    double inertial = 0;
    for (double omega : {1e9, 1e13}) {
        double T = rotation_temperature(omega, k);
        for (double x : {0.01, 0.2, 1.0, 3.0, 8.0}) {
            double w = omega * x;
            inertial = std::max(inertial, rel_err(thermal_integrand_rotation(w, 0.0, omega), inertial_thermal_integrand(w, 0.0, T, k)));
        }
    }
    add(r, "coincident-point match with inertial thermal integrand", inertial, 1e-12);
}

void criterion_8(CheckResult& r, const ValidationOptions& opt)
{
    Constants k = Constants::si();
    k.sigma *= opt.sigma_scale;
    double ident = 0, planck = 0;
    for (double beta : {0.0, 0.3, 0.9}) {
        auto p = RotationParams::from_beta(1e13, beta, k);
        ThermoReport rep = em_energy_density(p, 20);
        double g2 = p.gamma() * p.gamma();
        double T = rotation_temperature(p);
        double T4 = T * T * T * T;
        // closed form built from hbar, c, k_B alone
        double w_indep = 2 * (4 * g2 - 1) / 3 * 4 * (pi * pi * std::pow(k.k_B, 4) / (60 * std::pow(k.hbar, 3) * k.c * k.c)) / k.c * T4;
        ident = std::max(ident, rel_err(rep.w_thermal, w_indep));
        planck = std::max(planck, rel_err(rep.w_thermal, em_thermal_from_planck(p)));
    }
    add(r, "w_thermal vs 2(4g^2-1)/3 (4 sigma/c) T_rot^4", ident, 1e-8);
    add(r, "w_thermal vs Planck integral", planck, 1e-8);

    if (!opt.run_monte_carlo)
        return;
    auto p = RotationParams::from_beta(1.0, 0.5, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(20), {64, 128});
    EmpiricalEnergy e = empirical_energy_density(p, ms, MCOptions{opt.mc_seeds, opt.seed, opt.workers}, 0.4);
    const char* axis = "xyz";
    for (int i = 0; i < 3; ++i)
        add(r, std::string("<E_") + axis[i] + "^2> - <H_" + axis[i] + "^2> |z|", z_score(e.lab_E2_minus_H2[i], 0), 3.0);
    add(r, "monte-carlo w vs truncated ladder |z|", z_score(e.w, e.w_expected), 3.0);
    add(r, "<E1 H3> - <E3 H1> |z|", z_score(e.e1h3_minus_e3h1, 0), 3.0);
}

void criterion_9(CheckResult& r, const ValidationOptions&)
{
    double worst = 0;
    for (double beta : {0.0, 0.3, 0.6, 0.9}) {
        auto p = RotationParams::from_beta(1e13, beta, Constants::si());
        ThermoReport s = scalar_energy_density(p, 20);
        double g2 = p.gamma() * p.gamma();
        double expected = 2 * (4 * g2 - 1) / 9;
        worst = std::max(worst, rel_err(s.w_thermal / s.inertial_reference_thermal, expected));
    }
    add(r, "scalar thermal ratio vs 2(4g^2-1)/9", worst, 1e-10);
}

void criterion_10(CheckResult& r, const ValidationOptions&)
{
    auto k = Constants::si();
    double omega = 1e13;
    double r0 = k.c / omega;
    double fd = 0;
    for (double x : {0.1, 0.5, 0.9}) {
        ForcePoint f = vacuum_force_density(omega, x * r0, k);
        fd = std::max(fd, rel_err(f.f_vac, f.f_vac_numeric));
    }
    add(r, "f_vac vs central difference of w_thermal", fd, 1e-6);
    int sign = 0, mono = 0;
    double prev = 0;
    for (int i = 1; i <= 100; ++i) {
        double x = i / 101.0;
        double f = vacuum_force_density(omega, x * r0, k).f_vac;
        sign += f <= 0 ? 0 : 1;
        if (i > 1 && !(f < prev))
            ++mono;
        prev = f;
    }
    add(r, "grid points with f_vac > 0", sign, 0);
    add(r, "grid points breaking monotone growth of |f_vac|", mono, 0);
}

void criterion_11(CheckResult& r, const ValidationOptions&)
{
    auto k = Constants::si();
    HadronEstimate h = hadron_estimates(1e-18, 1e-15, 1 - 1e-6, k);
    add(r, "force rel deviation from -0.44 GeV/fm", std::abs(h.force_gev_per_fermi - (-0.44)) / 0.44, 0.05);
    add(r, "T_rot rel deviation from 3.4e11 K", std::abs(h.T_rot - 3.4e11) / 3.4e11, 0.03);
}

void criterion_12(CheckResult& r, const ValidationOptions& opt)
{
    auto p = RotationParams::from_beta(1.0, 0.3, Constants::natural());
    ModeSet ms = build_mode_set(p, SpectrumSpec::discrete(4), {16, 32});
    LabPoint x1 = lab_position(p, 0.0), x2 = lab_position(p, 0.9);
    auto obs = [&](const PhaseEnsemble& pe) {
        FieldTriplet a = eval_lab_fields(ms, pe, x1), b = eval_lab_fields(ms, pe, x2);
        return std::vector<double>{a.E[0] * b.E[0], a.H[2] * b.E[1], a.E[2] * a.E[2]};
    };
    auto run = [&](int workers) { return run_seeds(ms, MCOptions{200, opt.seed, workers}, 3, obs); };
    MCRun one = run(1);
    int mismatches = 0;
    for (int workers : {2, 3, 8}) {
        MCRun many = run(workers);
        for (std::size_t i = 0; i < one.samples.size(); ++i)
            if (std::memcmp(one.samples[i].data(), many.samples[i].data(), 3 * sizeof(double)) != 0)
                ++mismatches;
        for (std::size_t j = 0; j < 3; ++j)
            if (std::memcmp(&one.stats[j], &many.stats[j], sizeof(double) * 2) != 0)
                ++mismatches;
    }
    add(r, "bitwise mismatches across worker counts", mismatches, 0);
    MCRun again = run(1);
    int repeat = 0;
    for (std::size_t j = 0; j < 3; ++j)
        repeat += std::memcmp(&one.stats[j].mean, &again.stats[j].mean, sizeof(double)) != 0;
    add(r, "bitwise mismatches on repeated run", repeat, 0);
}

using CriterionFn = void (*)(CheckResult&, const ValidationOptions&);

struct Criterion {
    const char* title;
    CriterionFn fn;
    double time_limit;  // seconds, 0 for none
};

const Criterion kCriteria[criterion_count] = {
    {"closed-form angular integrals", criterion_1, 1.0},
    {"phi-kernels vs quadrature", criterion_2, 0},
    {"continuous I_(11) closed form vs quadrature", criterion_3, 10.0},
    {"off-diagonal nullity", criterion_4, 0},
    {"scalar correlation function", criterion_5, 0},
    {"Abel-Plana machinery", criterion_6, 0},
    {"Planck-factor emergence", criterion_7, 0},
    {"EM energy density", criterion_8, 300.0},
    {"scalar energy density ratio", criterion_9, 0},
    {"vacuum force", criterion_10, 0},
    {"hadron-scale estimates", criterion_11, 0},
    {"Monte Carlo determinism", criterion_12, 0},
};

}  // namespace

const char* criterion_title(int id)
{
    if (id < 1 || id > criterion_count)
        throw std::out_of_range("criterion id must be in 1.." + std::to_string(criterion_count));
    return kCriteria[id - 1].title;
}

CheckResult run_criterion(int id, const ValidationOptions& opt)
{
    CheckResult r;
    r.id = id;
    r.title = criterion_title(id);
    const Criterion& c = kCriteria[id - 1];
    auto t0 = std::chrono::steady_clock::now();
    try {
        c.fn(r, opt);
    } catch (const std::exception& e) {
        r.items.push_back({std::string("exception: ") + e.what(), 1, 0, false});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0)
        add(r, "runtime seconds", r.seconds, c.time_limit);
    return r;
}

std::vector<CheckResult> run_all(const ValidationOptions& opt)
{
    std::vector<CheckResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        out.push_back(run_criterion(id, opt));
    return out;
}

}  // namespace zpr
