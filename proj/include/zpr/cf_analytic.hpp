#pragma once

#include <optional>
#include <stdexcept>

#include "zpr/frame_fields.hpp"
#include "zpr/kinematics.hpp"
#include "zpr/numerics.hpp"

namespace zpr {

enum class FieldKind { EE, HH, EH, scalar };
enum class Spectrum { continuous, discrete };
enum class Method { closed_form, quadrature, monte_carlo };

const char* to_string(FieldKind k);
const char* to_string(Spectrum s);
const char* to_string(Method m);

struct CFValue {
    FieldKind kind = FieldKind::EE;
    int a = 1, b = 1;  // 1-based tetrad indices
    double tau1 = 0, tau2 = 0;
    Spectrum spectrum = Spectrum::continuous;
    Method method = Method::closed_form;
    double value = 0;
    double error_estimate = 0;
    std::optional<double> stat_error;
};

class CoincidenceLimit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class MethodMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// int_0^pi sin^p / (1 - k^2 sin^2)^(7/2), p in {1, 3, 5}, |k| < 1.
double sin_power_integral(int p, double k);
// int_0^{2pi} sin^m phi / (1 + b sin phi)^4, m in {0, 1, 2}, |b| < 1.
double phi_kernel_integral(int m, double b);

// -beta sin(delta/2)/(delta/2), series near delta = 0.
double k_parameter(double beta, double delta);

// Sphere moments of (1 + k u)^-4 with weights 1, u, x^2, u^2, where u is the unit-vector
// component along the chord between the two detector positions and x the in-plane normal one.
struct AngularMoments {
    double m0, my, mxx, myy;
};
AngularMoments angular_moments(double k);

// 3 hbar c / (2 pi^2 (c dt)^4), dt the lab time separation.
double em_cf_prefactor(const RotationParams& p, double tau1, double tau2);

// Continuous-spectrum zero-point correlation <X_(a)(tau1) Y_(b)(tau2)>.
CFValue em_cf_continuous(int a, int b, FieldKind kind, double tau1, double tau2,
                         const RotationParams& p, Method method, const QuadratureSpec& spec = {});

// I_(11) assembled from the closed phi-kernels followed by theta quadrature.
double em_I11_kernel_assembly(double tau1, double tau2, const RotationParams& p,
                              const QuadratureSpec& spec = {});

// Massless scalar field, continuous spectrum.
CFValue scalar_cf_continuous(double tau1, double tau2, const RotationParams& p,
                             Method method = Method::closed_form, const QuadratureSpec& spec = {});

}  // namespace zpr
