#include "zpr/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "zpr/numerics.hpp"
#include "zpr/thermo.hpp"

namespace zpr {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Block Philox4x32::generate(Block ctr, Key key)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

double mode_phase(std::uint64_t seed, std::uint64_t index)
{
    Philox4x32::Block c = {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0, 0};
    Philox4x32::Key k = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    Philox4x32::Block r = Philox4x32::generate(c, k);
    // 53-bit uniform in [0, 1)
    double u = ((r[0] >> 5) * 67108864.0 + (r[1] >> 6)) * (1.0 / 9007199254740992.0);
    return two_pi * u;
}

SpectrumSpec SpectrumSpec::discrete(long n_max)
{
    SpectrumSpec s;
    s.kind = Kind::discrete;
    s.n_max = n_max;
    return s;
}

SpectrumSpec SpectrumSpec::continuous(double omega_cutoff, int n_radial_nodes)
{
    SpectrumSpec s;
    s.kind = Kind::continuous;
    s.n_max = 0;
    s.omega_cutoff = omega_cutoff;
    s.n_radial_nodes = n_radial_nodes;
    return s;
}

ModeSet build_mode_set(const RotationParams& p, const SpectrumSpec& spectrum, const AngularResolution& res,
                       Normalization norm)
{
    const Constants& k = p.constants();
    if (res.n_theta < 8 || res.n_phi < 16)
        throw ResolutionError("angular grid must be at least 8 x 16");

    ModeSet ms;
    ms.spectrum = spectrum;
    ms.resolution = res;
    ms.norm = norm;
    ms.k0 = p.omega() / k.c;
    ms.c = k.c;

    // Frequency nodes (wavenumber, weight per unit n^3-equivalent power).
    std::vector<double> ks, pw;
    double top_harmonic = 0;
    if (spectrum.kind == SpectrumSpec::Kind::discrete) {
        if (spectrum.n_max < 1)
            throw InvalidParams("n_max must be >= 1");
        if (!(p.omega() > 0))
            throw InvalidParams("discrete ladder needs omega > 0");
        double lp = ladder_power(norm, k, ms.k0);
        for (long n = 1; n <= spectrum.n_max; ++n) {
            double nn = static_cast<double>(n);
            ks.push_back(ms.k0 * nn);
            pw.push_back(lp * nn * nn * nn);
        }
        top_harmonic = static_cast<double>(spectrum.n_max);
    } else {
        if (!(spectrum.omega_cutoff > 0) || spectrum.n_radial_nodes < 1)
            throw InvalidParams("continuous band needs omega_cutoff > 0 and n_radial_nodes >= 1");
        // hbar omega^3 d omega / (4 pi^2 c^3), doubled for spherical_delta.
        double base = k.hbar / (4 * pi * pi * k.c * k.c * k.c);
        if (norm == Normalization::spherical_delta)
            base *= 2;
        auto gl = gauss_legendre(spectrum.n_radial_nodes);
        double half = 0.5 * spectrum.omega_cutoff;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            double w = half * (gl.x[i] + 1);
            ks.push_back(w / k.c);
            pw.push_back(base * w * w * w * half * gl.w[i]);
        }
        if (p.omega() > 0)
            top_harmonic = spectrum.omega_cutoff / p.omega();
    }

    double beta = p.beta();
    // The chord phase of harmonic N varies by up to 2 beta N across the sphere.
    if (res.n_phi < 4 * beta * top_harmonic || res.n_theta < 2 * beta * top_harmonic)
        throw ResolutionError("angular grid " + std::to_string(res.n_theta) + "x" + std::to_string(res.n_phi)
                              + " too coarse for beta * harmonic = " + std::to_string(beta * top_harmonic));

    auto gl = gauss_legendre(res.n_theta);
    double dphi = two_pi / res.n_phi;
    for (int i = 0; i < res.n_theta; ++i) {
        double theta = std::acos(-gl.x[i]);
        for (int j = 0; j < res.n_phi; ++j) {
            AngularNode node;
            node.dir = {theta, (j + 0.5) * dphi};
            node.weight = gl.w[i] * dphi;
            ms.nodes.push_back(node);
        }
    }

    ms.modes.reserve(ms.nodes.size() * ks.size() * 2);
    for (const AngularNode& node : ms.nodes) {
        Vec3 kh = node.dir.unit();
        PolarizationBasis pb = polarization_basis(node.dir);
        for (std::size_t f = 0; f < ks.size(); ++f) {
            double amp = std::sqrt(2 * pw[f] * node.weight);
            for (const Vec3& e : {pb.eps1, pb.eps2})
                ms.modes.push_back({kh, e, cross(kh, e), ks[f], amp});
        }
    }
    return ms;
}

PhaseEnsemble make_phase_ensemble(const ModeSet& ms, std::uint64_t seed)
{
    PhaseEnsemble pe;
    pe.seed = seed;
    pe.phases.resize(ms.size());
    for (std::size_t m = 0; m < ms.size(); ++m)
        pe.phases[m] = mode_phase(seed, m);
    return pe;
}

FieldTriplet eval_lab_fields(const ModeSet& ms, const PhaseEnsemble& phases, const LabPoint& x)
{
    if (phases.phases.size() != ms.size())
        throw std::invalid_argument("phase ensemble does not match mode set");
    const double ct = ms.c * x.t;
    FieldTriplet out;
    out.frame = Frame::lab;
    Vec3 r = {x.x, x.y, x.z};
    for (std::size_t m = 0; m < ms.size(); ++m) {
        const Mode& md = ms.modes[m];
        double arg = md.k * (dot3(md.k_hat, r) - ct) - phases.phases[m];
        double a = md.amplitude * std::cos(arg);
        for (int i = 0; i < 3; ++i) {
            out.E[i] += a * md.eps[i];
            out.H[i] += a * md.h[i];
        }
    }
    return out;
}

FieldTriplet eval_lab_fields(const ModeSet& ms, const PhaseEnsemble& phases, const RotationParams& p,
                             double tau)
{
    FieldTriplet f = eval_lab_fields(ms, phases, lab_position(p, tau));
    f.tau = tau;
    return f;
}

//---------------------------------------------------------------------------//

double pairwise_sum(const double* x, std::size_t n)
{
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

SampleStats sample_stats(const std::vector<double>& x)
{
    SampleStats s;
    s.n = static_cast<long>(x.size());
    if (x.empty())
        return s;
    s.mean = pairwise_sum(x.data(), x.size()) / x.size();
    if (x.size() > 1) {
        std::vector<double> d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = (x[i] - s.mean) * (x[i] - s.mean);
        double var = pairwise_sum(d.data(), d.size()) / (x.size() - 1);
        s.stat_error = std::sqrt(var / x.size());
    }
    return s;
}

MCRun run_seeds(const ModeSet& ms, const MCOptions& opt, std::size_t n_observables, const SeedObservable& f)
{
    if (opt.n_seeds < 1)
        throw std::invalid_argument("n_seeds must be >= 1");
    std::size_t n = static_cast<std::size_t>(opt.n_seeds);
    int workers = opt.workers > 0 ? opt.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<std::size_t>(workers, n));

    MCRun run;
    run.samples.assign(n, {});
    auto work = [&](int w) {
        for (std::size_t i = w; i < n; i += workers) {
            PhaseEnsemble pe = make_phase_ensemble(ms, opt.base_seed + i);
            run.samples[i] = f(pe);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    std::vector<double> col(n);
    for (std::size_t j = 0; j < n_observables; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (run.samples[i].size() != n_observables)
                throw std::logic_error("observable count mismatch");
            col[i] = run.samples[i][j];
        }
        run.stats.push_back(sample_stats(col));
    }
    return run;
}

namespace {

double pick(const FieldTriplet& f, bool magnetic, int i) { return magnetic ? f.H[i] : f.E[i]; }

CFValue make_mc_value(FieldKind kind, int a, int b, double tau1, double tau2, const ModeSet& ms,
                      const SampleStats& s)
{
    CFValue out;
    out.kind = kind;
    out.a = a;
    out.b = b;
    out.tau1 = tau1;
    out.tau2 = tau2;
    out.spectrum = ms.spectrum.kind == SpectrumSpec::Kind::discrete ? Spectrum::discrete : Spectrum::continuous;
    out.method = Method::monte_carlo;
    out.value = s.mean;
    out.error_estimate = s.stat_error;
    out.stat_error = s.stat_error;
    return out;
}

void check_em_kind(FieldKind kind)
{
    if (kind == FieldKind::scalar)
        throw MethodMismatch("Monte Carlo correlations cover the electromagnetic field only");
}

}  // namespace

CFValue empirical_cf(FieldKind kind, int a, int b, double tau1, double tau2, const RotationParams& p,
                     const ModeSet& ms, const MCOptions& opt)
{
    check_em_kind(kind);
    if (a < 1 || a > 3 || b < 1 || b > 3)
        throw std::invalid_argument("tetrad indices must be in 1..3");
    LabPoint x1 = lab_position(p, tau1), x2 = lab_position(p, tau2);
    MCRun run = run_seeds(ms, opt, 1, [&](const PhaseEnsemble& pe) {
        FieldTriplet f1 = project_fields_to_tetrad(eval_lab_fields(ms, pe, x1), p, tau1);
        FieldTriplet f2 = project_fields_to_tetrad(eval_lab_fields(ms, pe, x2), p, tau2);
        double u = pick(f1, kind == FieldKind::HH, a - 1);
        double v = pick(f2, kind != FieldKind::EE, b - 1);
        return std::vector<double>{u * v};
    });
    return make_mc_value(kind, a, b, tau1, tau2, ms, run.stats[0]);
}

CFMatrix empirical_cf_matrix(FieldKind kind, double tau1, double tau2, const RotationParams& p,
                             const ModeSet& ms, const MCOptions& opt)
{
    check_em_kind(kind);
    LabPoint x1 = lab_position(p, tau1), x2 = lab_position(p, tau2);
    MCRun run = run_seeds(ms, opt, 9, [&](const PhaseEnsemble& pe) {
        FieldTriplet f1 = project_fields_to_tetrad(eval_lab_fields(ms, pe, x1), p, tau1);
        FieldTriplet f2 = project_fields_to_tetrad(eval_lab_fields(ms, pe, x2), p, tau2);
        std::vector<double> v(9);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                v[3 * a + b] = pick(f1, kind == FieldKind::HH, a) * pick(f2, kind != FieldKind::EE, b);
        return v;
    });
    CFMatrix m;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            m[a][b] = make_mc_value(kind, a + 1, b + 1, tau1, tau2, ms, run.stats[3 * a + b]);
    return m;
}

EmpiricalEnergy empirical_energy_density(const RotationParams& p, const ModeSet& ms, const MCOptions& opt,
                                         double tau)
{
    LabPoint x = lab_position(p, tau);
    double ca = std::cos(p.alpha(tau)), sa = std::sin(p.alpha(tau));
    MCRun run = run_seeds(ms, opt, 11, [&](const PhaseEnsemble& pe) {
        FieldTriplet lab = eval_lab_fields(ms, pe, x);
        FieldTriplet f = project_fields_to_tetrad(lab, p, tau);
        std::vector<double> v(11);
        double w = 0;
        for (int i = 0; i < 3; ++i) {
            v[i] = f.E[i] * f.E[i];
            v[3 + i] = f.H[i] * f.H[i];
            w += v[i] + v[3 + i];
        }
        v[6] = w / (8 * pi);
        // Lab components along the instantaneous radial direction and z.
        double er = ca * lab.E[0] + sa * lab.E[1], hr = ca * lab.H[0] + sa * lab.H[1];
        v[7] = er * lab.H[2] - lab.E[2] * hr;
        for (int i = 0; i < 3; ++i)
            v[8 + i] = lab.E[i] * lab.E[i] - lab.H[i] * lab.H[i];
        return v;
    });
    EmpiricalEnergy out;
    out.tau = tau;
    for (int i = 0; i < 3; ++i) {
        out.E2[i] = run.stats[i];
        out.H2[i] = run.stats[3 + i];
    }
    out.w = run.stats[6];
    out.e1h3_minus_e3h1 = run.stats[7];
    for (int i = 0; i < 3; ++i)
        out.lab_E2_minus_H2[i] = run.stats[8 + i];
    if (ms.spectrum.kind == SpectrumSpec::Kind::discrete) {
        out.w_expected = em_energy_from_moments(p, ms.spectrum.n_max, ms.norm, tau, TetradKind::frenet_serret);
    } else {
        const Constants& k = p.constants();
        double wc = ms.spectrum.omega_cutoff;
        double base = k.hbar / (4 * pi * pi * k.c * k.c * k.c) * (ms.norm == Normalization::spherical_delta ? 2 : 1);
        double variance = base * wc * wc * wc * wc / 4 * (8 * pi / 3);
        out.w_expected = 6 * variance / (8 * pi) * em_tetrad_energy_factor(p, tau, TetradKind::frenet_serret);
    }
    return out;
}

std::string run_manifest(const RotationParams& p, const ModeSet& ms, const MCOptions& opt)
{
    std::ostringstream os;
    os.precision(17);
    os << "omega = " << p.omega() << "\n";
    os << "radius = " << p.radius() << "\n";
    os << "beta = " << p.beta() << "\n";
    if (ms.spectrum.kind == SpectrumSpec::Kind::discrete) {
        os << "spectrum = discrete\n";
        os << "n_max = " << ms.spectrum.n_max << "\n";
    } else {
        os << "spectrum = continuous\n";
        os << "omega_cutoff = " << ms.spectrum.omega_cutoff << "\n";
        os << "n_radial_nodes = " << ms.spectrum.n_radial_nodes << "\n";
    }
    os << "n_theta = " << ms.resolution.n_theta << "\n";
    os << "n_phi = " << ms.resolution.n_phi << "\n";
    os << "normalization = " << to_string(ms.norm) << "\n";
    os << "modes = " << ms.size() << "\n";
    os << "rng = philox4x32-10\n";
    os << "base_seed = " << opt.base_seed << "\n";
    os << "n_seeds = " << opt.n_seeds << "\n";
    return os.str();
}

}  // namespace zpr
