#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zpr/cf_analytic.hpp"
#include "zpr/frame_fields.hpp"
#include "zpr/kinematics.hpp"
#include "zpr/spectrum.hpp"

namespace zpr {

// Philox4x32-10 counter-based generator.
struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;
    static Block generate(Block counter, Key key);
};

// Uniform phase in [0, 2 pi) for mode `index` of ensemble `seed`.
double mode_phase(std::uint64_t seed, std::uint64_t index);

struct SpectrumSpec {
    enum class Kind { discrete, continuous };
    Kind kind = Kind::discrete;
    long n_max = 20;
    double omega_cutoff = 0;  // continuous band [0, omega_cutoff]
    int n_radial_nodes = 0;

    static SpectrumSpec discrete(long n_max);
    static SpectrumSpec continuous(double omega_cutoff, int n_radial_nodes);
};

struct AngularResolution {
    int n_theta = 64;
    int n_phi = 128;
};

class ResolutionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct AngularNode {
    Direction dir;
    double weight = 0;
};

struct Mode {
    Vec3 k_hat{};
    Vec3 eps{};
    Vec3 h{};  // k_hat x eps
    double k = 0;
    double amplitude = 0;
};

// Immutable after construction. Mode index = ((node * n_freq) + freq) * 2 + polarization.
struct ModeSet {
    SpectrumSpec spectrum;
    AngularResolution resolution;
    Normalization norm = Normalization::spherical_delta;
    double k0 = 0;
    double c = 0;
    std::vector<AngularNode> nodes;
    std::vector<Mode> modes;

    std::size_t size() const { return modes.size(); }
};

// Gauss-Legendre theta x uniform phi; amplitude^2 per discrete mode is
// 2 ladder_power(norm) * angular weight * n^3, so that <E_i E_j> reproduces the ladder variance.
ModeSet build_mode_set(const RotationParams& p, const SpectrumSpec& spectrum,
                       const AngularResolution& res = {},
                       Normalization norm = Normalization::spherical_delta);

struct PhaseEnsemble {
    std::uint64_t seed = 0;
    std::vector<double> phases;
};

PhaseEnsemble make_phase_ensemble(const ModeSet& ms, std::uint64_t seed);

FieldTriplet eval_lab_fields(const ModeSet& ms, const PhaseEnsemble& phases, const LabPoint& x);
FieldTriplet eval_lab_fields(const ModeSet& ms, const PhaseEnsemble& phases, const RotationParams& p,
                             double tau);

// Seeds used are base_seed, base_seed + 1, ...
struct MCOptions {
    long n_seeds = 1000;
    std::uint64_t base_seed = 1;
    int workers = 0;  // 0: hardware concurrency
};

struct SampleStats {
    double mean = 0;
    double stat_error = 0;  // sample standard deviation / sqrt(n)
    long n = 0;
};

// Per-seed observables, reduced in seed order. samples[i][j] is observable j at seed i.
struct MCRun {
    std::vector<std::vector<double>> samples;
    std::vector<SampleStats> stats;
};

using SeedObservable = std::function<std::vector<double>(const PhaseEnsemble&)>;
MCRun run_seeds(const ModeSet& ms, const MCOptions& opt, std::size_t n_observables,
                const SeedObservable& f);

double pairwise_sum(const double* x, std::size_t n);
SampleStats sample_stats(const std::vector<double>& x);

// <X_(a)(tau1) Y_(b)(tau2)> in the Frenet-Serret frame; kind EE, HH or EH.
CFValue empirical_cf(FieldKind kind, int a, int b, double tau1, double tau2, const RotationParams& p,
                     const ModeSet& ms, const MCOptions& opt);

// All nine (a, b) pairs from one ensemble; m[a-1][b-1].
using CFMatrix = std::array<std::array<CFValue, 3>, 3>;
CFMatrix empirical_cf_matrix(FieldKind kind, double tau1, double tau2, const RotationParams& p,
                             const ModeSet& ms, const MCOptions& opt);

struct EmpiricalEnergy {
    std::array<SampleStats, 3> E2;  // <E_(a)^2>
    std::array<SampleStats, 3> H2;
    SampleStats w;                  // (1/8 pi) sum (<E_(a)^2> + <H_(a)^2>)
    SampleStats e1h3_minus_e3h1;   // lab components, 1 = radial, 3 = z
    std::array<SampleStats, 3> lab_E2_minus_H2;  // <E_i^2> - <H_i^2>, lab x, y, z
    double w_expected = 0;          // truncated ladder sum, same normalization
    double tau = 0;
};

EmpiricalEnergy empirical_energy_density(const RotationParams& p, const ModeSet& ms,
                                         const MCOptions& opt, double tau = 0);

// Key-value reproducibility record.
std::string run_manifest(const RotationParams& p, const ModeSet& ms, const MCOptions& opt);

}  // namespace zpr
