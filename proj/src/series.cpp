#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "zpr/constants.hpp"
#include "zpr/numerics.hpp"

namespace zpr {

namespace {
constexpr double epmach = std::numeric_limits<double>::epsilon();
}

SeriesSumResult direct_sum(const Term& a, double rel_tol, long max_terms)
{
    KahanSum s;
    double peak = 0;
    double window_peak = 0, prev_window_peak = -1;
    long checkpoint = 1024;
    int quiet = 0;
    for (long n = 0; n < max_terms; ++n) {
        double t = a(n);
        if (!std::isfinite(t))
            throw DivergentSeries("non-finite term at n = " + std::to_string(n));
        s.add(t);
        double at = std::abs(t);
        peak = std::max(peak, at);
        window_peak = std::max(window_peak, at);
        if (n > 8 && at <= rel_tol * std::abs(s.value()))
            ++quiet;
        else if (n > 8 && at == 0 && s.value() == 0)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 16)
            return {s.value(), Regularization::direct, 0.0, 0, n + 1};
        if (n + 1 == checkpoint) {
            if (prev_window_peak >= 0 && window_peak > 0.5 * prev_window_peak)
                throw DivergentSeries("terms do not decay (window max "
                                      + std::to_string(window_peak) + " at n = "
                                      + std::to_string(n) + ")");
            prev_window_peak = window_peak;
            window_peak = 0;
            checkpoint *= 2;
        }
    }
    throw DivergentSeries("no convergence within " + std::to_string(max_terms) + " terms");
}

double abel_regulated_sum(const Term& a, double eta, long max_terms, double* roundoff, long* terms)
{
    KahanSum s;
    double abs_sum = 0;
    double window = 0;
    long n = 0;
    for (; n < max_terms; ++n) {
        double t = a(n) * std::exp(-eta * static_cast<double>(n));
        s.add(t);
        double at = std::abs(t);
        abs_sum += at;
        window = std::max(window, at);
        if ((n + 1) % 32 == 0) {
            if (eta * n > 30 && window <= 1e-18 * abs_sum)
                break;
            window = 0;
        }
    }
    if (n == max_terms)
        throw DivergentSeries("regulated sum at eta = " + std::to_string(eta)
                              + " needs more than max_terms terms");
    if (roundoff)
        *roundoff = 8 * epmach * abs_sum;
    if (terms)
        *terms = n + 1;
    return s.value();
}

SeriesSumResult abel_sum(const Term& a, const AbelOptions& opt)
{
    if (!(opt.eta0 > 0) || !(opt.ratio > 1) || opt.max_levels < 2)
        throw std::invalid_argument("abel_sum: need eta0 > 0, ratio > 1, max_levels >= 2");

    std::vector<double> eta, sums, round;
    long terms = 0;
    // A level is kept while its roundoff bound stays well below the change it adds.
    for (int j = 0; j < opt.max_levels; ++j) {
        double e = opt.eta0 * std::pow(opt.ratio, -j);
        double r = 0;
        long nt = 0;
        double s = abel_regulated_sum(a, e, opt.max_terms, &r, &nt);
        if (j >= 2 && r > 1e-2 * std::abs(s - sums.back()))
            break;
        eta.push_back(e);
        sums.push_back(s);
        round.push_back(r);
        terms += nt;
    }
    int L = static_cast<int>(sums.size());

    SeriesSumResult out;
    out.regularization = Regularization::abel;
    out.terms = terms;
    if (!opt.extrapolate) {
        out.value = sums.back();
        out.extrapolation_error_estimate = std::abs(sums[L - 1] - sums[L - 2]);
        out.levels_used = L;
        return out;
    }

    // T[k][i]: extrapolant from levels i..i+k.
    std::vector<std::vector<double>> T{sums};
    for (int k = 1; k < L; ++k) {
        double f = std::pow(opt.ratio, opt.even_powers ? 2 * k : k);
        const auto& p = T.back();
        std::vector<double> next(p.size() - 1);
        for (size_t i = 0; i + 1 < p.size(); ++i)
            next[i] = (f * p[i + 1] - p[i]) / (f - 1);
        T.push_back(std::move(next));
    }
    // Each entry is judged by its distance to both parents in the previous column.
    double best = sums.back();
    double best_err = INFINITY;
    int best_k = 0;
    for (int k = 1; k < L; ++k) {
        for (size_t i = 0; i < T[k].size(); ++i) {
            double v = T[k][i];
            double err = std::max(std::abs(v - T[k - 1][i]), std::abs(v - T[k - 1][i + 1]));
            if (err < best_err) {
                best = v;
                best_err = err;
                best_k = k;
            }
        }
    }
    out.value = best;
    out.extrapolation_error_estimate = best_err;
    out.levels_used = best_k + 1;

    double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(best));
    if (!(best_err <= tol)) {
        std::ostringstream msg;
        msg << "Abel extrapolation did not stabilize: best " << best << " +- " << best_err
            << " over " << L << " levels (eta " << eta.front() << " .. " << eta.back() << ")";
        throw ExtrapolationFailure(msg.str(), eta, sums, best, best_err);
    }
    return out;
}

//---------------------------------------------------------------------------//

AbelPlanaFunction cubic_exponential(double s)
{
    return {[s](double x) { return x * x * x * std::exp(-s * x); },
            [s](double t) { return 2 * t * t * t * std::cos(s * t); },
            "x^3 exp(-" + std::to_string(s) + " x)"};
}

AbelPlanaFunction exponential(double s)
{
    return {[s](double x) { return std::exp(-s * x); },
            [s](double t) { return 2 * std::sin(s * t); },
            "exp(-" + std::to_string(s) + " x)"};
}

AbelPlanaFunction zero_function()
{
    return {[](double) { return 0.0; }, [](double) { return 0.0; }, "0"};
}

AbelPlanaTerms abel_plana_check(const AbelPlanaFunction& g, const QuadratureSpec& spec)
{
    AbelPlanaTerms out;
    out.series = direct_sum([&](long n) { return g.f(static_cast<double>(n)); }).value;
    out.integral = integrate_semi_infinite(g.f, 0.0, spec).value;
    out.half_f0 = 0.5 * g.f(0.0);
    out.contour = integrate_semi_infinite(
                      [&](double t) {
                          double c = g.contour(t);
                          return c == 0 ? 0.0 : c / std::expm1(two_pi * t);
                      },
                      0.0, spec)
                      .value;
    out.residual = std::abs(out.series - (out.integral + out.half_f0 + out.contour));
    return out;
}

}  // namespace zpr
