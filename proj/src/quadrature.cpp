#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "zpr/constants.hpp"
#include "zpr/numerics.hpp"

namespace zpr {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK dqk21).
constexpr double xgk[11] = {
    .995657163025808080735527280689003, .973906528517171720077964012084452,
    .930157491355708226001207180059508, .865063366688984510732096688423493,
    .780817726586416897063717578345042, .679409568299024406234327365114874,
    .562757134668604683339000099272694, .433395394129247190799265943165784,
    .294392862701460198131126603103866, .14887433898163121088482600112972,
    0.};
constexpr double wgk[11] = {
    .011694638867371874278064396062192, .03255816230796472747881897245939,
    .05475589657435199603138130024458,  .07503967481091995276704314091619,
    .093125454583697605535065465083366, .109387158802297641899210590325805,
    .123491976262065851077958109831074, .134709217311473325928054001771707,
    .142775938577060080797094273138717, .147739104901338491374841515972068,
    .149445554002916905664936468389821};
constexpr double wg[5] = {
    .066671344308688137593568809893332, .149451349150580593145776339657697,
    .219086362515982043995534934228163, .269266719309996355091226921569469,
    .295524224714752870173892994651338};

constexpr double epmach = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

struct Panel {
    double a, b;
    double value;
    double error;
    double floor;  // roundoff level of this panel
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel qk21(const Fn1& f, double a, double b)
{
    double centr = 0.5 * (a + b);
    double hlgth = 0.5 * (b - a);
    double dhlgth = std::abs(hlgth);

    double fv1[10], fv2[10];
    double resg = 0;
    double fc = f(centr);
    double resk = wgk[10] * fc;
    double resabs = std::abs(resk);
    for (int j = 0; j < 5; ++j) {
        int jtw = 2 * j + 1;
        double absc = hlgth * xgk[jtw];
        double f1 = f(centr - absc), f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jtw] * (f1 + f2);
        resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        int jtwm1 = 2 * j;
        double absc = hlgth * xgk[jtwm1];
        double f1 = f(centr - absc), f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += wgk[jtwm1] * (f1 + f2);
        resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }
    double reskh = resk * 0.5;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0 && abserr != 0)
        abserr = resasc * std::min(1.0, std::pow(200 * abserr / resasc, 1.5));
    double floor = 50 * epmach * resabs;
    if (resabs > uflow / (50 * epmach))
        abserr = std::max(floor, abserr);
    if (!std::isfinite(result))
        throw NonConvergence("integrand is not finite on the interval", result, INFINITY);
    return {a, b, result, abserr, floor};
}

}  // namespace

void KahanSum::add(double v)
{
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
        comp_ += (sum_ - t) + v;
    else
        comp_ += (v - t) + sum_;
    sum_ = t;
}

QuadResult integrate_1d(const Fn1& f, double a, double b, const QuadratureSpec& spec)
{
    QuadResult out;
    if (a == b)
        return out;

    std::priority_queue<Panel> heap;
    heap.push(qk21(f, a, b));
    out.evaluations = 21;

    auto totals = [&](double& val, double& err, double& floor) {
        // Deterministic reduction in left-endpoint order.
        auto copy = heap;
        std::vector<Panel> panels;
        panels.reserve(copy.size());
        while (!copy.empty()) {
            panels.push_back(copy.top());
            copy.pop();
        }
        std::sort(panels.begin(), panels.end(),
                  [](const Panel& x, const Panel& y) { return x.a < y.a; });
        KahanSum v, e, fl;
        for (const auto& p : panels) {
            v.add(p.value);
            e.add(p.error);
            fl.add(p.floor);
        }
        val = v.value();
        err = e.value();
        floor = fl.value();
    };

    double val = heap.top().value, err = heap.top().error, floor = heap.top().floor;
    while (true) {
        double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(val));
        if (err <= tol || err <= 2 * floor)
            break;
        if (out.subdivisions >= spec.max_subdivisions) {
            throw NonConvergence("subdivision budget exhausted (" + std::to_string(spec.max_subdivisions)
                                     + "), error estimate " + std::to_string(err),
                                 val, err);
        }
        Panel worst = heap.top();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))
            || std::abs(worst.b - worst.a) < 100 * epmach * std::abs(mid)) {
            throw NonConvergence("interval too small near x = " + std::to_string(mid), val, err);
        }
        heap.pop();
        Panel left = qk21(f, worst.a, mid);
        Panel right = qk21(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        out.evaluations += 42;
        ++out.subdivisions;
        val += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        floor += left.floor + right.floor - worst.floor;
        if (out.subdivisions % 64 == 0)
            totals(val, err, floor);
    }
    totals(val, err, floor);
    out.value = val;
    out.error = err;
    return out;
}

QuadResult integrate_semi_infinite(const Fn1& f, double a, const QuadratureSpec& spec)
{
    auto g = [&](double t) {
        double u = 1.0 - t;
        double x = a + t / u;
        double v = f(x);
        return v == 0 ? 0.0 : v / (u * u);
    };
    return integrate_1d(g, 0.0, 1.0, spec);
}

QuadResult integrate_sphere_region(const Fn2& f, double theta0, double theta1, double phi0,
                                   double phi1, const QuadratureSpec& spec)
{
    double worst_inner = 0;
    long inner_evals = 0;
    auto outer = [&](double theta) {
        double st = std::sin(theta);
        QuadResult in = integrate_1d([&](double phi) { return f(theta, phi); }, phi0, phi1, spec);
        inner_evals += in.evaluations;
        if (in.value != 0)
            worst_inner = std::max(worst_inner, in.error / std::abs(in.value));
        return st * in.value;
    };
    QuadResult r = integrate_1d(outer, theta0, theta1, spec);
    r.error += worst_inner * std::abs(r.value);
    r.evaluations = inner_evals;
    return r;
}

QuadResult integrate_sphere(const Fn2& f, const QuadratureSpec& spec)
{
    return integrate_sphere_region(f, 0.0, pi, 0.0, 2 * pi, spec);
}

GaussLegendre gauss_legendre(int n)
{
    GaussLegendre g;
    g.x.resize(n);
    g.w.resize(n);
    // P_n(x) and P_{n-1}(x) by the three-term recurrence.
    auto legendre = [n](double x, double& pn, double& pm) {
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        pn = p1;
        pm = p0;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pn, pm, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(x, pn, pm);
            dp = n * (x * pn - pm) / (x * x - 1);
            double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        legendre(x, pn, pm);
        dp = n * (x * pn - pm) / (x * x - 1);
        double w = 2 / ((1 - x * x) * dp * dp);
        g.x[i] = -x;
        g.x[n - 1 - i] = x;
        g.w[i] = w;
        g.w[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        g.x[n / 2] = 0;
    return g;
}

}  // namespace zpr
