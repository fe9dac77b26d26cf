#pragma once

#include <algorithm>
#include <array>
#include <cstddef>

#include "lw3/eps_scalar.hpp"

namespace lw3 {

/// Point/vector in R^3 with the metric dx1^2 + dx2^2 - dx3^2.
struct LVec3 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

inline LVec3 operator+(const LVec3& a, const LVec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
inline LVec3 operator-(const LVec3& a, const LVec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
inline LVec3 operator-(const LVec3& v) { return {-v.x1, -v.x2, -v.x3}; }
inline LVec3 operator*(double s, const LVec3& v) { return {s * v.x1, s * v.x2, s * v.x3}; }
inline LVec3 operator/(const LVec3& v, double s) { return {v.x1 / s, v.x2 / s, v.x3 / s}; }

/// u1 v1 + u2 v2 - u3 v3.
inline double inner(const LVec3& u, const LVec3& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3;
}

/// Lorentzian cross product: the bilinear antisymmetric product with
/// inner(cross_l(u, v), w) = det[u; v; w]. Equals eta * (u x v) with the
/// Euclidean cross product and eta = diag(1, 1, -1).
inline LVec3 cross_l(const LVec3& u, const LVec3& v) {
    return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, -(u.x1 * v.x2 - u.x2 * v.x1)};
}

inline double euclid_norm(const LVec3& v) {
    return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

inline double max_abs(const LVec3& v) {
    return std::max({std::fabs(v.x1), std::fabs(v.x2), std::fabs(v.x3)});
}

enum class CausalCharacter { spacelike, timelike, lightlike };

/// Sign of inner(v, v); |inner| <= tol classifies as lightlike.
CausalCharacter causal_character(const LVec3& v, double tol = 1e-12);

/// 3x3 real matrix, row-major, acting as A * v on column vectors.
struct LMat3 {
    std::array<double, 9> m{};

    static LMat3 identity();
    double at(std::size_t r, std::size_t c) const { return m[3 * r + c]; }
    double& at(std::size_t r, std::size_t c) { return m[3 * r + c]; }
};

LMat3 operator*(const LMat3& a, const LMat3& b);
LVec3 operator*(const LMat3& a, const LVec3& v);
LMat3 transpose(const LMat3& a);
double det(const LMat3& a);
double max_abs_diff(const LMat3& a, const LMat3& b);

/// A^T eta A = eta with eta = diag(1, 1, -1), to tolerance.
bool is_pseudo_orthogonal(const LMat3& a, double tol = 1e-10);

/// Connected component of O_1(3, R), by sign(det) and sign(a33).
enum class LorentzComponent {
    proper_orthochronous,     // det = +1, a33 > 0   (++)
    proper_antichronous,      // det = +1, a33 < 0   (+-)
    improper_orthochronous,   // det = -1, a33 > 0   (-+)
    improper_antichronous,    // det = -1, a33 < 0   (--)
    not_pseudo_orthogonal,
};

const char* to_string(LorentzComponent c);

LorentzComponent classify_lorentz(const LMat3& a, double tol = 1e-10);

/// Stereographic projection of the hyperboloid H^2_eps = {<P,P> = -eps}.
/// eps = +1: from the north pole (0,0,1), z = (u + i v)/(1 - w);
/// eps = -1: from the south pole (-1,0,0), z = (-v + tau w)/(u + 1).
/// Requires P on the hyperboloid to 1e-9. Throws PoleError near the pole.
EpsScalar stereo_project(const LVec3& p, Eps eps, double pole_tol = 1e-12);

/// Inverse of stereo_project.
/// eps = +1: (-2 Re z, -2 Im z, 1 + |z|^2) / (|z|^2 - 1);
/// eps = -1: (1 - z zbar, -2 Re z, 2 Im z) / (1 + z zbar).
/// Throws LightConeError when the defining denominator vanishes.
LVec3 stereo_unproject(const EpsScalar& z, double cone_tol = 1e-12);

struct CkSk {
    double c = 1.0;
    double s = 0.0;
};

/// c_k / s_k kit: c_{-1} = cos, c_0 = 1, c_1 = cosh;
/// s_{-1} = sin, s_0 = -eps * theta, s_1 = sinh.
CkSk ck_sk(double theta, int k, Eps eps);

enum class RotationKind { hyperbolic, elliptic, parabolic };

/// The canonical one-parameter rotations of O_1^{++}(3, R): hyperbolic about
/// the spacelike axis e1, elliptic about the timelike axis e3, parabolic
/// about the lightlike direction (0, 1, 1).
LMat3 canonical_rotation(RotationKind kind, double theta);

}  // namespace lw3
