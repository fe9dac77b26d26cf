#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

#include "lw3/errors.hpp"

namespace lw3 {

/// Causal sign epsilon. Selects the scalar algebra: +1 works over the complex
/// numbers (unit i, i^2 = -1), -1 over the Lorentz (split-complex) numbers
/// (unit tau, tau^2 = +1).
enum class Eps : int {
    spacelike = +1,
    timelike  = -1,
};

constexpr double sign(Eps e) noexcept {
    return e == Eps::spacelike ? 1.0 : -1.0;
}

constexpr const char* to_string(Eps e) noexcept {
    return e == Eps::spacelike ? "spacelike" : "timelike";
}

/// One number in the eps-parameterized algebra. The imaginary unit u
/// satisfies u^2 = -sign(eps).
struct EpsScalar {
    double re = 0.0;
    double im = 0.0;
    Eps eps = Eps::spacelike;
};

inline EpsScalar scalar(double re, double im, Eps eps) { return {re, im, eps}; }
inline EpsScalar real_scalar(double x, Eps eps) { return {x, 0.0, eps}; }
inline EpsScalar imag_unit(Eps eps) { return {0.0, 1.0, eps}; }
inline EpsScalar one(Eps eps) { return {1.0, 0.0, eps}; }
inline EpsScalar zero(Eps eps) { return {0.0, 0.0, eps}; }

void check_same_eps(const EpsScalar& a, const EpsScalar& b);

inline EpsScalar operator-(const EpsScalar& z) { return {-z.re, -z.im, z.eps}; }

inline EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
    check_same_eps(a, b);
    return {a.re + b.re, a.im + b.im, a.eps};
}

inline EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) {
    check_same_eps(a, b);
    return {a.re - b.re, a.im - b.im, a.eps};
}

/// (a1 + u a2)(b1 + u b2) = (a1 b1 - eps a2 b2) + u (a1 b2 + a2 b1).
inline EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
    check_same_eps(a, b);
    return {a.re * b.re - sign(a.eps) * a.im * b.im, a.re * b.im + a.im * b.re, a.eps};
}

inline EpsScalar operator*(double s, const EpsScalar& z) { return {s * z.re, s * z.im, z.eps}; }
inline EpsScalar operator*(const EpsScalar& z, double s) { return s * z; }
inline EpsScalar operator/(const EpsScalar& z, double s) { return {z.re / s, z.im / s, z.eps}; }

inline EpsScalar conj(const EpsScalar& z) { return {z.re, -z.im, z.eps}; }

/// z * conj(z), always real: re^2 + eps * im^2. May be negative for eps = -1.
inline double squared_norm(const EpsScalar& z) {
    return z.re * z.re + sign(z.eps) * z.im * z.im;
}

/// The algebra norm |z zbar|^(1/2); vanishes on the null cone when eps = -1.
inline double norm_l(const EpsScalar& z) {
    return std::sqrt(std::fabs(squared_norm(z)));
}

/// Euclidean magnitude of the coefficient pair. Definite for both eps;
/// used for residual measurement.
inline double mag(const EpsScalar& z) {
    return std::hypot(z.re, z.im);
}

/// Scale-aware null-cone tolerance: 1e-12 * (1 + |re| + |im|)^2.
inline double default_null_tol(const EpsScalar& z) {
    const double s = 1.0 + std::fabs(z.re) + std::fabs(z.im);
    return 1e-12 * s * s;
}

inline bool is_null(const EpsScalar& z, double tol) {
    return std::fabs(squared_norm(z)) <= tol;
}

/// zbar / (z zbar). Throws NullDivisor when |z zbar| <= tol_null
/// (tol_null < 0 selects the scale-aware default).
EpsScalar inverse(const EpsScalar& z, double tol_null = -1.0);

inline EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
    check_same_eps(a, b);
    return a * inverse(b);
}

inline bool finite(const EpsScalar& z) {
    return std::isfinite(z.re) && std::isfinite(z.im);
}

/// Image of the split isomorphism Phi(a + tau b) = (a + b, a - b).
struct SplitPair {
    double u = 0.0;
    double v = 0.0;
};

/// Phi: L -> R (+) R. Requires eps = -1.
SplitPair split_iso(const EpsScalar& z);

/// Phi^{-1}(u, v) = ((u + v)/2 + tau (u - v)/2).
EpsScalar split_iso_inv(const SplitPair& p);

enum class ElemKind { exp, cosh, sinh, sin, cos };

/// Elementary functions. For eps = +1 these are the standard complex
/// functions; for eps = -1 the split-form extensions, computed componentwise
/// through the split isomorphism.
EpsScalar elementary(ElemKind kind, const EpsScalar& z);

EpsScalar exp(const EpsScalar& z);
EpsScalar cosh(const EpsScalar& z);
EpsScalar sinh(const EpsScalar& z);
EpsScalar sin(const EpsScalar& z);
EpsScalar cos(const EpsScalar& z);

std::string to_string(const EpsScalar& z);
std::ostream& operator<<(std::ostream& os, const EpsScalar& z);

}  // namespace lw3
