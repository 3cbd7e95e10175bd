#include "zpr/frame_fields.hpp"

#include <cmath>

namespace zpr {

Vec3 Direction::unit() const
{
    double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

ProjectionRows projection_rows(const RotationParams& p, double tau)
{
    double a = p.alpha(tau);
    double s = std::sin(a), c = std::cos(a);
    double g = p.gamma(), bg = p.beta() * g;
    // columns: E1 E2 E3 H1 H2 H3
    return {{
        {g * c, g * s, 0, 0, 0, -bg},
        {-s, c, 0, 0, 0, 0},
        {0, 0, g, bg * c, bg * s, 0},
        {0, 0, bg, g * c, g * s, 0},
        {0, 0, 0, -s, c, 0},
        {-bg * c, -bg * s, 0, 0, 0, g},
    }};
}

FieldTriplet project_fields_to_tetrad(const FieldTriplet& lab, const RotationParams& p, double tau)
{
    if (lab.frame != Frame::lab)
        throw FrameMismatch("project_fields_to_tetrad expects lab-frame fields");
    ProjectionRows rows = projection_rows(p, tau);
    std::array<double, 6> in{lab.E[0], lab.E[1], lab.E[2], lab.H[0], lab.H[1], lab.H[2]};
    FieldTriplet out;
    out.frame = Frame::tetrad;
    out.tau = tau;
    for (int i = 0; i < 6; ++i) {
        double v = 0;
        for (int j = 0; j < 6; ++j)
            v += rows[i][j] * in[j];
        (i < 3 ? out.E[i] : out.H[i - 3]) = v;
    }
    return out;
}

FieldTriplet project_by_tensor(const FieldTriplet& lab, const Tetrad& t)
{
    if (lab.frame != Frame::lab)
        throw FrameMismatch("project_by_tensor expects lab-frame fields");
    const Vec3& E = lab.E;
    const Vec3& H = lab.H;
    double F[4][4] = {};
    auto set = [&](int i, int k, double v) {
        F[i][k] = v;
        F[k][i] = -v;
    };
    set(0, 1, H[2]);
    set(1, 2, H[0]);
    set(2, 0, H[1]);
    for (int k = 0; k < 3; ++k)
        set(3, k, E[k]);

    auto comp = [&](int a, int b) {
        double v = 0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k)
                v += t.mu[a][i] * t.mu[b][k] * F[i][k];
        return v;
    };
    FieldTriplet out;
    out.frame = Frame::tetrad;
    out.tau = t.tau;
    for (int k = 0; k < 3; ++k)
        out.E[k] = comp(3, k);
    out.H[0] = comp(1, 2);
    out.H[1] = comp(2, 0);
    out.H[2] = comp(0, 1);
    return out;
}

PolarizationBasis polarization_basis(const Direction& d)
{
    double st = std::sin(d.theta), ct = std::cos(d.theta);
    if (std::abs(st) < 1e-8)
        return {{1, 0, 0}, {0, 1, 0}};
    double sp = std::sin(d.phi), cp = std::cos(d.phi);
    return {{ct * cp, ct * sp, -st}, {-sp, cp, 0}};
}

double K_bracket(double kx, double ky, double delta, double beta, double gamma)
{
    double c2 = std::cos(0.5 * delta), s2 = std::sin(0.5 * delta);
    double b2 = beta * beta;
    return gamma * gamma
        * (std::cos(delta) + 2 * beta * c2 * ky + (b2 - c2 * c2) * kx * kx + (b2 + s2 * s2) * ky * ky);
}

double K_weight(const Direction& d, double delta, const RotationParams& p)
{
    Vec3 k = d.unit();
    return 3.0 / (8.0 * pi) * K_bracket(k[0], k[1], delta, p.beta(), p.gamma());
}

}  // namespace zpr
