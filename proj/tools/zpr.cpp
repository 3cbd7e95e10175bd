#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "table.hpp"
#include "zpr/cf_analytic.hpp"
#include "zpr/cf_discrete.hpp"
#include "zpr/stochastic.hpp"
#include "zpr/thermo.hpp"
#include "zpr/validation.hpp"

using namespace zpr;
using zpr::cli::Table;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Common {
    std::string units = "si";
    double omega = kNaN;
    double radius = kNaN;
    double beta = kNaN;
    long n_max = 20;
    long seeds = 1000;
    std::uint64_t seed = 1;
    int workers = 0;
    double tol = 1e-10;
    std::string out;
    bool json = false;
};

Constants constants_of(const Common& c) { return constants_for(c.units == "natural" ? UnitSystem::natural : UnitSystem::si); }

RotationParams params_of(const Common& c)
{
    Constants k = constants_of(c);
    double omega = std::isnan(c.omega) ? (c.units == "natural" ? 1.0 : 1e13) : c.omega;
    if (!std::isnan(c.radius))
        return RotationParams::from_radius(omega, c.radius, k);
    return RotationParams::from_beta(omega, std::isnan(c.beta) ? 0.3 : c.beta, k);
}

QuadratureSpec quad_of(const Common& c)
{
    QuadratureSpec q;
    q.rel_tol = c.tol;
    return q;
}

void echo_common(Table& t, const Common& c, const RotationParams& p)
{
    t.set("units", c.units);
    t.set("omega [1/s]", p.omega());
    t.set("radius [m]", p.radius());
    t.set("beta", p.beta());
    t.set("gamma", p.gamma());
    t.set("n_max", std::to_string(c.n_max));
    t.set("seeds", std::to_string(c.seeds));
    t.set("seed", std::to_string(c.seed));
    t.set("tol", c.tol);
}

std::vector<double> grid(double lo, double hi, int steps)
{
    std::vector<double> g;
    if (steps <= 1) {
        g.push_back(lo);
        return g;
    }
    for (int i = 0; i < steps; ++i)
        g.push_back(lo + (hi - lo) * i / (steps - 1));
    return g;
}

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            v.push_back(std::stod(item));
    return v;
}

int emit(const Table& t, const Common& c)
{
    auto write = [&](std::ostream& os) {
        if (c.json)
            cli::write_json(os, t);
        else
            cli::write_csv(os, t);
    };
    if (c.out.empty()) {
        write(std::cout);
    } else {
        std::ofstream f(c.out);
        if (!f)
            throw std::runtime_error("cannot open " + c.out);
        write(f);
    }
    return t.flagged_rows == 0 ? 0 : 1;
}

//---------------------------------------------------------------------------//

struct TetradArgs {
    double tau_min = 0;
    double tau_max = kNaN;
    int steps = 9;
    std::string frame = "frenet-serret";
};

int cmd_tetrad(const Common& c, const TetradArgs& a)
{
    RotationParams p = params_of(c);
    TetradKind kind = a.frame == "fermi-walker" ? TetradKind::fermi_walker : TetradKind::frenet_serret;
    double tmax = std::isnan(a.tau_max) ? (p.omega() > 0 ? rotation_period(p) : 1.0) : a.tau_max;
    Table t;
    t.command = "tetrad";
    echo_common(t, c, p);
    t.set("frame", a.frame);
    t.columns = {{"tau", "s"}, {"alpha", "rad"}};
    const char* comp = "xyzt";
    for (int m = 1; m <= 4; ++m)
        for (int i = 0; i < 4; ++i)
            t.columns.push_back({"mu" + std::to_string(m) + "_" + comp[i], ""});
    t.columns.push_back({"orthonormality_residual", ""});
    for (double tau : grid(a.tau_min, tmax, a.steps)) {
        Tetrad td = make_tetrad(p, tau, kind);
        std::vector<cli::Cell> row = {tau, p.alpha(tau)};
        for (int m = 0; m < 4; ++m)
            for (int i = 0; i < 4; ++i)
                row.push_back(td.mu[m][i]);
        double res = orthonormality_residual(td);
        row.push_back(res);
        t.add_row(row, res > 1e-10);
    }
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct CFArgs {
    std::string field = "EE";
    std::string pair = "11";
    std::string methods = "closed-form,quadrature";
    std::string spectrum = "continuous";
    double delta_min = 0.5;
    double delta_max = 5.0;
    int steps = 10;
    long truncate = 0;
    int n_theta = 64;
    int n_phi = 128;
};

FieldKind field_of(const std::string& s)
{
    if (s == "EE")
        return FieldKind::EE;
    if (s == "HH")
        return FieldKind::HH;
    if (s == "EH")
        return FieldKind::EH;
    if (s == "scalar")
        return FieldKind::scalar;
    throw std::invalid_argument("unknown field " + s);
}

int cmd_cf(const Common& c, const CFArgs& a)
{
    RotationParams p = params_of(c);
    FieldKind kind = field_of(a.field);
    if (a.pair.size() != 2)
        throw std::invalid_argument("pair must be two digits, e.g. 11");
    int ia = a.pair[0] - '0', ib = a.pair[1] - '0';
    bool discrete = a.spectrum == "discrete";
    Table t;
    t.command = "cf";
    echo_common(t, c, p);
    t.set("field", a.field);
    t.set("pair", a.pair);
    t.set("spectrum", a.spectrum);
    t.set("methods", a.methods);
    t.set("truncate", std::to_string(a.truncate));
    t.set("angular_grid", std::to_string(a.n_theta) + "x" + std::to_string(a.n_phi));
    t.columns = {{"delta", "rad"}, {"tau2", "s"}, {"method", ""}, {"value", ""}, {"error_estimate", ""},
                 {"stat_error", ""}, {"zero_point_part", ""}, {"thermal_part", ""}, {"status", ""}};
    std::vector<std::string> methods;
    {
        std::stringstream ss(a.methods);
        std::string m;
        while (std::getline(ss, m, ','))
            methods.push_back(m);
    }
    std::unique_ptr<ModeSet> ms;
    double gw = p.omega() * p.gamma();
    for (double delta : grid(a.delta_min, a.delta_max, a.steps)) {
        double tau2 = gw > 0 ? delta / gw : delta;
        double closed = kNaN;
        for (const std::string& m : methods) {
            double value = kNaN, err = kNaN, stat = kNaN, zp = kNaN, th = kNaN;
            std::string status = "ok";
            try {
                if (m == "monte-carlo") {
                    if (!ms) {
                        ms = std::make_unique<ModeSet>(build_mode_set(p, SpectrumSpec::discrete(c.n_max),
                                                                      {a.n_theta, a.n_phi}, Normalization::plane_wave));
                        t.set("mc_manifest", run_manifest(p, *ms, MCOptions{c.seeds, c.seed, c.workers}));
                    }
                    CFValue v = empirical_cf(kind, ia, ib, 0, tau2, p, *ms, MCOptions{c.seeds, c.seed, c.workers});
                    value = v.value;
                    err = v.error_estimate;
                    stat = *v.stat_error;
                } else if (discrete) {
                    if (m != "quadrature")
                        throw MethodMismatch("discrete spectrum is evaluated by quadrature or monte-carlo");
                    DiscreteSpec ds = a.truncate > 0 ? DiscreteSpec::truncated_sum(a.truncate, quad_of(c))
                                                     : DiscreteSpec::regularized_sum(quad_of(c));
                    DiscreteCF d;
                    if (kind == FieldKind::scalar)
                        d = scalar_cf_discrete(0, tau2, p, ds);
                    else if (kind == FieldKind::EE && ia == 1 && ib == 1)
                        d = em_cf_discrete_I11(0, tau2, p, ds);
                    else
                        throw MethodMismatch("discrete spectrum covers EE(11) and scalar");
                    value = d.cf.value;
                    err = d.cf.error_estimate;
                    zp = d.zero_point_part;
                    th = d.thermal_part;
                } else {
                    Method method = m == "closed-form" ? Method::closed_form
                        : m == "quadrature"            ? Method::quadrature
                                                       : throw std::invalid_argument("unknown method " + m);
                    CFValue v = kind == FieldKind::scalar ? scalar_cf_continuous(0, tau2, p, method, quad_of(c))
                                                          : em_cf_continuous(ia, ib, kind, 0, tau2, p, method, quad_of(c));
                    value = v.value;
                    err = v.error_estimate;
                }
            } catch (const ResonanceError& e) {
                status = std::string("resonance m=") + std::to_string(e.m) + " u*=" + cli::format_double(e.u_star);
            } catch (const std::exception& e) {
                status = std::string("error: ") + e.what();
            }
            if (m == "closed-form")
                closed = value;
            else if (m == "quadrature" && !discrete && std::isfinite(closed) && status == "ok"
                     && std::abs(value - closed) > 1e-8 * std::max(std::abs(closed), std::abs(value)))
                status = "disagrees with closed form beyond 1e-8";
            t.add_row({delta, tau2, m, value, err, stat, zp, th, status}, status != "ok");
        }
    }
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct SpectrumArgs {
    bool kernel = false;
    double f_min = 0.25;
    double f_max = 6.0;
    int steps = 12;
};

int cmd_spectrum(const Common& c, const SpectrumArgs& a)
{
    RotationParams p = params_of(c);
    const Constants& k = p.constants();
    Table t;
    t.command = "spectrum";
    echo_common(t, c, p);
    double T = rotation_temperature(p);
    t.set("T_rot [K]", T);
    if (a.kernel) {
        t.set("view", "kernel");
        t.columns = {{"F_d", "rad"},      {"sd_closed", ""},          {"sd_zero_point", ""}, {"sd_thermal", ""},
                     {"sd_partial_fractions_1e4", ""}, {"scalar_closed", ""}, {"scalar_zero_point", ""},
                     {"scalar_thermal", ""},           {"status", ""}};
        for (double F : grid(a.f_min, a.f_max, a.steps)) {
            std::vector<cli::Cell> row = {F};
            std::string status = "ok";
            try {
                ThermalSplit s = sd_thermal_split(F, 1.0, quad_of(c));
                ThermalSplit q = scalar_thermal_split(F, 1.0, quad_of(c));
                row.insert(row.end(), {sd_closed(F), s.zero_point_part, s.thermal_part, sd_partial_fractions(F, 10000),
                                       scalar_kernel_closed(F), q.zero_point_part, q.thermal_part});
            } catch (const std::exception& e) {
                status = e.what();
                row.resize(8, kNaN);
            }
            row.push_back(status);
            t.add_row(row, status != "ok");
        }
        return emit(t, c);
    }
    t.set("view", "ladder");
    t.columns = {{"n", ""}, {"omega_n", "1/s"}, {"k_n", "1/m"}, {"n3_weight", ""}, {"planck_occupation", ""},
                 {"zero_point_energy", "J"}};
    for (long n = 1; n <= c.n_max; ++n) {
        double w = p.omega() * n;
        double occ = T > 0 ? 1 / std::expm1(k.hbar * w / (k.k_B * T)) : 0.0;
        t.add_row({n, w, w / k.c, double(n) * n * n, occ, 0.5 * k.hbar * w});
    }
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct EnergyArgs {
    std::string field = "em";
    std::string betas;
};

int cmd_energy(const Common& c, const EnergyArgs& a)
{
    RotationParams base = params_of(c);
    Table t;
    t.command = "energy";
    echo_common(t, c, base);
    t.set("field", a.field);
    t.columns = {{"beta", ""},         {"gamma", ""},          {"T_rot", "K"},        {"anisotropy_factor", ""},
                 {"w_zp_cutoff", "J/m^3"}, {"w_thermal", "J/m^3"}, {"w_total_cutoff", "J/m^3"},
                 {"inertial_reference_thermal", "J/m^3"}, {"thermal_ratio", ""}};
    if (c.units == "natural")
        for (auto& col : t.columns)
            if (col.unit == "J/m^3" || col.unit == "K")
                col.unit = "natural";
    std::vector<double> betas = a.betas.empty() ? std::vector<double>{base.beta()} : parse_list(a.betas);
    for (double b : betas) {
        RotationParams p = RotationParams::from_beta(base.omega(), b, base.constants());
        ThermoReport r = a.field == "scalar" ? scalar_energy_density(p, c.n_max, quad_of(c)) : em_energy_density(p, c.n_max);
        double ratio = r.field_kind == FieldType::scalar && r.inertial_reference_thermal > 0
            ? r.w_thermal / r.inertial_reference_thermal
            : kNaN;
        t.add_row({b, p.gamma(), r.T_rot, r.anisotropy_factor, r.w_zp_cutoff, r.w_thermal, r.w_total_cutoff,
                   r.field_kind == FieldType::scalar ? r.inertial_reference_thermal : kNaN, ratio});
    }
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct ForceArgs {
    int points = 20;
    std::string r_list;
    double sphere_radius = 1e-18;
};

int cmd_force_curve(const Common& c, const ForceArgs& a)
{
    RotationParams p = params_of(c);
    const Constants& k = p.constants();
    double r0 = k.c / p.omega();
    Table t;
    t.command = "force-curve";
    echo_common(t, c, p);
    t.set("r0 [m]", r0);
    t.set("sphere_radius [m]", a.sphere_radius);
    double T = rotation_temperature(p);
    t.set("T_rot [K]", T);
    t.columns = {{"r", "m"},         {"x", ""},           {"f_vac", "N/m^3"},  {"f_vac_numeric", "N/m^3"},
                 {"F_sphere", "N"},  {"F_sphere", "GeV/fm"}, {"T_rot", "K"}, {"w_thermal", "J/m^3"}, {"status", ""}};
    std::vector<double> rs;
    if (!a.r_list.empty()) {
        rs = parse_list(a.r_list);
    } else {
        for (int i = 0; i < a.points; ++i)
            rs.push_back(r0 * i / a.points);
    }
    for (double r : rs) {
        try {
            ForcePoint f = vacuum_force_density(p.omega(), r, k, a.sphere_radius);
            t.add_row({r, f.x, f.f_vac, f.f_vac_numeric, f.F_sphere, f.F_sphere / gev_per_fermi_in_newton, T, f.w_thermal, "ok"});
        } catch (const DomainError& e) {
            t.add_row({r, r / r0, kNaN, kNaN, kNaN, kNaN, T, kNaN, std::string("rejected: ") + e.what()}, true);
        }
    }
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct HadronArgs {
    double sphere_radius = 1e-18;
    double r0 = 1e-15;
    double one_minus_x = 1e-6;
};

int cmd_estimate_hadron(const Common& c, const HadronArgs& a)
{
    Common si = c;
    si.units = "si";
    Constants k = Constants::si();
    double x = 1 - a.one_minus_x;
    HadronEstimate h = hadron_estimates(a.sphere_radius, a.r0, x, k);
    CasimirResult cas = casimir_force(a.sphere_radius, k);
    Table t;
    t.command = "estimate-hadron";
    t.set("units", "si");
    t.set("sphere_radius [m]", a.sphere_radius);
    t.set("r0 [m]", a.r0);
    t.set("1 - x", a.one_minus_x);
    t.columns = {{"quantity", ""}, {"value", ""}, {"unit", ""}};
    t.add_row({std::string("prefactor 4 hbar c a^3 / (135 pi r0^5)"), h.prefactor_j_per_m, std::string("J/m")});
    t.add_row({std::string("F_sphere"), h.force_newton, std::string("N")});
    t.add_row({std::string("F_sphere"), h.force_gev_per_fermi, std::string("GeV/fm")});
    t.add_row({std::string("T_rot at r0"), h.T_rot, std::string("K")});
    t.add_row({std::string("T_rot / T_qgp"), h.T_rot / qgp_temperature_kelvin, std::string("")});
    t.add_row({std::string("Casimir energy, C = -0.09"), cas.energy, std::string("J")});
    t.add_row({std::string("Casimir force, C = -0.09"), cas.force, std::string("N")});
    t.add_row({std::string("Casimir force, C = -0.09"), cas.force / gev_per_fermi_in_newton, std::string("GeV/fm")});
    return emit(t, si);
}

//---------------------------------------------------------------------------//

struct MCArgs {
    int n_theta = 64;
    int n_phi = 128;
    double delta = pi / 2;
    double tau = 0.4;
};

int cmd_mc_validate(const Common& c, const MCArgs& a)
{
    RotationParams p = params_of(c);
    MCOptions opt{c.seeds, c.seed, c.workers};
    Table t;
    t.command = "mc-validate";
    echo_common(t, c, p);
    t.set("delta", a.delta);
    t.set("tau", a.tau);
    t.columns = {{"check", ""}, {"measured", ""}, {"expected", ""}, {"stat_error", ""}, {"z", ""}, {"pass", ""}};
    auto row = [&](const std::string& name, double m, double e, double s) {
        double z = s > 0 ? std::abs(m - e) / s : (m == e ? 0.0 : kNaN);
        bool ok = z <= 3;
        t.add_row({name, m, e, s, z, std::string(ok ? "yes" : "no")}, !ok);
    };
    double tau2 = a.delta / (p.omega() * p.gamma());
    ModeSet pw = build_mode_set(p, SpectrumSpec::discrete(c.n_max), {a.n_theta, a.n_phi}, Normalization::plane_wave);
    t.set("manifest_cf", run_manifest(p, pw, opt));
    CFMatrix m = empirical_cf_matrix(FieldKind::EE, 0, tau2, p, pw, opt);
    double an = em_cf_discrete_I11(0, tau2, p, DiscreteSpec::truncated_sum(c.n_max, quad_of(c))).cf.value;
    row("EE(11) vs truncated discrete analytic", m[0][0].value, an, *m[0][0].stat_error);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !(i < 2 && j < 2))
                row("EE(" + std::to_string(i + 1) + std::to_string(j + 1) + ") nullity", m[i][j].value, 0, *m[i][j].stat_error);
    ModeSet sd = build_mode_set(p, SpectrumSpec::discrete(c.n_max), {a.n_theta, a.n_phi});
    EmpiricalEnergy e = empirical_energy_density(p, sd, opt, a.tau);
    row("energy density vs truncated ladder", e.w.mean, e.w_expected, e.w.stat_error);
    const char* axis = "xyz";
    for (int i = 0; i < 3; ++i)
        row(std::string("<E_") + axis[i] + "^2> - <H_" + axis[i] + "^2>", e.lab_E2_minus_H2[i].mean, 0,
            e.lab_E2_minus_H2[i].stat_error);
    row("<E1 H3> - <E3 H1> (lab)", e.e1h3_minus_e3h1.mean, 0, e.e1h3_minus_e3h1.stat_error);
    return emit(t, c);
}

//---------------------------------------------------------------------------//

struct ValidateArgs {
    std::string criteria;
    bool no_mc = false;
    double sigma_scale = 1.0;
};

int cmd_validate(const Common& c, const ValidateArgs& a)
{
    ValidationOptions opt;
    opt.seed = c.seed;
    opt.mc_seeds = c.seeds;
    opt.workers = c.workers;
    opt.run_monte_carlo = !a.no_mc;
    opt.sigma_scale = a.sigma_scale;
    std::vector<int> ids;
    if (a.criteria.empty()) {
        for (int i = 1; i <= criterion_count; ++i)
            ids.push_back(i);
    } else {
        for (double v : parse_list(a.criteria))
            ids.push_back(static_cast<int>(v));
    }
    Table t;
    t.command = "validate";
    t.set("seed", std::to_string(c.seed));
    t.set("seeds", std::to_string(c.seeds));
    t.set("monte_carlo", a.no_mc ? "off" : "on");
    t.set("sigma_scale", a.sigma_scale);
    t.columns = {{"criterion", ""}, {"title", ""}, {"check", ""}, {"measured", ""}, {"tolerance", ""}, {"pass", ""}};
    for (int id : ids) {
        CheckResult r = run_criterion(id, opt);
        std::cerr << r.summary_line() << "\n";
        for (const Measurement& m : r.items)
            t.add_row({long(id), r.title, m.name, m.measured, m.tolerance, std::string(m.pass ? "yes" : "no")}, !m.pass);
    }
    return emit(t, c);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Correlation functions and energy densities of zero-point radiation seen by a rotating detector"};
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    app.add_option("--units", c.units, "Unit system")->check(CLI::IsMember({"si", "natural"}))->capture_default_str();
    app.add_option("--omega", c.omega, "Angular velocity (default 1e13 /s in SI, 1 in natural units)");
    auto* radius = app.add_option("--radius", c.radius, "Orbit radius");
    auto* beta = app.add_option("--beta", c.beta, "Orbit speed over c (default 0.3)");
    beta->excludes(radius);
    radius->excludes(beta);
    app.add_option("--n-max", c.n_max, "Ladder cutoff")->capture_default_str();
    app.add_option("--seeds", c.seeds, "Monte Carlo ensemble size")->capture_default_str();
    app.add_option("--seed", c.seed, "Base seed")->capture_default_str();
    app.add_option("--workers", c.workers, "Worker threads, 0 = all cores")->capture_default_str();
    app.add_option("--tol", c.tol, "Relative quadrature tolerance")->capture_default_str();
    app.add_option("--out", c.out, "Output file (default stdout)");
    app.add_flag("--json", c.json, "Structured JSON output instead of CSV");

    TetradArgs ta;
    auto* tetrad = app.add_subcommand("tetrad", "Tetrad components and orthonormality residuals over a tau grid");
    tetrad->add_option("--tau-min", ta.tau_min);
    tetrad->add_option("--tau-max", ta.tau_max, "Default: one rotation period");
    tetrad->add_option("--tau-steps", ta.steps)->capture_default_str();
    tetrad->add_option("--frame", ta.frame)->check(CLI::IsMember({"frenet-serret", "fermi-walker"}))->capture_default_str();

    CFArgs ca;
    auto* cf = app.add_subcommand("cf", "Correlation function versus rotation angle separation");
    cf->add_option("--field", ca.field)->check(CLI::IsMember({"EE", "HH", "EH", "scalar"}))->capture_default_str();
    cf->add_option("--pair", ca.pair, "Tetrad indices ab")->capture_default_str();
    cf->add_option("--method", ca.methods, "Comma list of closed-form, quadrature, monte-carlo")->capture_default_str();
    cf->add_option("--spectrum", ca.spectrum)->check(CLI::IsMember({"continuous", "discrete"}))->capture_default_str();
    cf->add_option("--delta-min", ca.delta_min)->capture_default_str();
    cf->add_option("--delta-max", ca.delta_max)->capture_default_str();
    cf->add_option("--delta-steps", ca.steps)->capture_default_str();
    cf->add_option("--truncate", ca.truncate, "Discrete ladder truncation, 0 = Abel regularized")->capture_default_str();
    cf->add_option("--n-theta", ca.n_theta)->capture_default_str();
    cf->add_option("--n-phi", ca.n_phi)->capture_default_str();

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Discrete ladder, or the S_d kernel and its thermal split");
    spectrum->add_flag("--kernel", sa.kernel, "Tabulate kernels over F_d instead of the ladder");
    spectrum->add_option("--f-min", sa.f_min)->capture_default_str();
    spectrum->add_option("--f-max", sa.f_max)->capture_default_str();
    spectrum->add_option("--f-steps", sa.steps)->capture_default_str();

    EnergyArgs ea;
    auto* energy = app.add_subcommand("energy", "Energy density split into zero-point and thermal parts");
    energy->add_option("--field", ea.field)->check(CLI::IsMember({"em", "scalar"}))->capture_default_str();
    energy->add_option("--beta-list", ea.betas, "Comma list of beta values");

    ForceArgs fa;
    auto* force = app.add_subcommand("force-curve", "Vacuum force density versus orbit radius");
    force->add_option("--points", fa.points)->capture_default_str();
    force->add_option("--r-list", fa.r_list, "Comma list of radii");
    force->add_option("--sphere-radius", fa.sphere_radius)->capture_default_str();

    HadronArgs ha;
    auto* hadron = app.add_subcommand("estimate-hadron", "Force and temperature at hadronic scales");
    hadron->add_option("--sphere-radius", ha.sphere_radius)->capture_default_str();
    hadron->add_option("--r0", ha.r0)->capture_default_str();
    hadron->add_option("--one-minus-x", ha.one_minus_x)->capture_default_str();

    MCArgs ma;
    auto* mc = app.add_subcommand("mc-validate", "Monte Carlo estimates against analytic values");
    mc->add_option("--n-theta", ma.n_theta)->capture_default_str();
    mc->add_option("--n-phi", ma.n_phi)->capture_default_str();
    mc->add_option("--delta", ma.delta)->capture_default_str();
    mc->add_option("--tau", ma.tau)->capture_default_str();

    ValidateArgs va;
    auto* validate = app.add_subcommand("validate", "Run the acceptance suite");
    validate->add_option("--criteria", va.criteria, "Comma list of criterion ids (default all)");
    validate->add_flag("--no-mc", va.no_mc, "Skip Monte Carlo checks");
    validate->add_option("--sigma-scale", va.sigma_scale, "Scale the Stefan-Boltzmann constant")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tetrad)
            return cmd_tetrad(c, ta);
        if (*cf)
            return cmd_cf(c, ca);
        if (*spectrum)
            return cmd_spectrum(c, sa);
        if (*energy)
            return cmd_energy(c, ea);
        if (*force)
            return cmd_force_curve(c, fa);
        if (*hadron)
            return cmd_estimate_hadron(c, ha);
        if (*mc)
            return cmd_mc_validate(c, ma);
        if (*validate)
            return cmd_validate(c, va);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
