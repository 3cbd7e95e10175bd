#pragma once

#include <array>
#include <stdexcept>

#include "zpr/kinematics.hpp"

namespace zpr {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

enum class Frame { lab, tetrad };

struct FieldTriplet {
    Vec3 E{};
    Vec3 H{};
    Frame frame = Frame::lab;
    double tau = 0;
};

class FrameMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Direction {
    double theta = 0;
    double phi = 0;

    Vec3 unit() const;
};

// Frenet-Serret frame components (E_(1..3), H_(1..3)) of lab fields at proper time tau.
FieldTriplet project_fields_to_tetrad(const FieldTriplet& lab, const RotationParams& p, double tau);

// Rows of the linear map (E, H) -> tetrad components: out[a] . (E_1..3, H_1..3).
// Index 0..2 are E_(1..3), 3..5 are H_(1..3).
using ProjectionRows = std::array<std::array<double, 6>, 6>;
ProjectionRows projection_rows(const RotationParams& p, double tau);

// Independent route: contract the tetrad with the covariant field tensor.
FieldTriplet project_by_tensor(const FieldTriplet& lab, const Tetrad& t);

struct PolarizationBasis {
    Vec3 eps1;
    Vec3 eps2;
};

// (theta-hat, phi-hat); (x-hat, y-hat) within 1e-8 of the poles.
PolarizationBasis polarization_basis(const Direction& d);

// Angular weight of the I_(11) correlation kernel, normalized to 1 at beta = delta = 0.
double K_weight(const Direction& d, double delta, const RotationParams& p);
// Same weight from unit-vector components, without the 3/(8 pi).
double K_bracket(double kx, double ky, double delta, double beta, double gamma);

}  // namespace zpr
