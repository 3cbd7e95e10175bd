#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zpr {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0;
    double error = 0;
    long evaluations = 0;
    int subdivisions = 0;
};

class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err)
    {
    }
    double best_estimate;
    double error_estimate;
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Adaptive 21-point Gauss-Kronrod on [a, b]. Endpoints are never evaluated.
QuadResult integrate_1d(const Fn1& f, double a, double b, const QuadratureSpec& spec = {});
// [a, +inf) through x = a + t/(1-t).
QuadResult integrate_semi_infinite(const Fn1& f, double a, const QuadratureSpec& spec = {});

// Nested adaptive integral of f(theta, phi) sin(theta) over the product region.
QuadResult integrate_sphere_region(const Fn2& f, double theta0, double theta1, double phi0,
                                   double phi1, const QuadratureSpec& spec = {});
// Whole sphere: theta in [0, pi], phi in [0, 2 pi].
QuadResult integrate_sphere(const Fn2& f, const QuadratureSpec& spec = {});

struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};
// n-point rule on [-1, 1].
GaussLegendre gauss_legendre(int n);

// Compensated (Neumaier) accumulator.
class KahanSum {
public:
    void add(double v);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0;
    double comp_ = 0;
};

//---------------------------------------------------------------------------//
// Series

enum class Regularization { direct, abel };

struct SeriesSumResult {
    double value = 0;
    Regularization regularization = Regularization::direct;
    double extrapolation_error_estimate = 0;
    int levels_used = 0;
    long terms = 0;
};

class DivergentSeries : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExtrapolationFailure : public std::runtime_error {
public:
    ExtrapolationFailure(const std::string& what, std::vector<double> eta, std::vector<double> sums,
                         double best, double err)
        : std::runtime_error(what), eta(std::move(eta)), sums(std::move(sums)), best_estimate(best),
          error_estimate(err)
    {
    }
    std::vector<double> eta;
    std::vector<double> sums;
    double best_estimate;
    double error_estimate;
};

using Term = std::function<double(long)>;

// Sum a_0 + a_1 + ... of a sequence that must decay; throws DivergentSeries otherwise.
SeriesSumResult direct_sum(const Term& a, double rel_tol = 1e-15, long max_terms = 10'000'000);

struct AbelOptions {
    // Regulator grid eta_j = eta0 * ratio^-j, j < max_levels.
    double eta0 = 0.5;
    double ratio = 2.0;
    int max_levels = 13;
    // Use only even powers of eta in the extrapolation. Correct for sums of
    // n^p cos(nF) with odd p, whose regulated sum is even in eta.
    bool even_powers = false;
    bool extrapolate = true;
    double rel_tol = 1e-7;
    double abs_tol = 1e-12;
    long max_terms = 50'000'000;
};

// Abel-regularized sum: lim_{eta->0} sum a_n exp(-eta n), Richardson extrapolated.
SeriesSumResult abel_sum(const Term& a, const AbelOptions& opt = {});
// Regulated partial sum at a single eta, with a roundoff bound.
double abel_regulated_sum(const Term& a, double eta, long max_terms, double* roundoff = nullptr,
                          long* terms = nullptr);

//---------------------------------------------------------------------------//
// Abel-Plana

struct AbelPlanaFunction {
    Fn1 f;
    // i (f(i t) - f(-i t)), real for real-analytic f.
    Fn1 contour;
    std::string name;
};

AbelPlanaFunction cubic_exponential(double s);  // x^3 exp(-s x)
AbelPlanaFunction exponential(double s);        // exp(-s x)
AbelPlanaFunction zero_function();

struct AbelPlanaTerms {
    double series = 0;
    double integral = 0;
    double half_f0 = 0;
    double contour = 0;
    double residual = 0;
};

AbelPlanaTerms abel_plana_check(const AbelPlanaFunction& g, const QuadratureSpec& spec = {});

}  // namespace zpr
