#include "lw3/lorentz3.hpp"

#include <algorithm>
#include <cmath>

namespace lw3 {

CausalCharacter causal_character(const LVec3& v, double tol) {
    const double q = inner(v, v);
    if (std::fabs(q) <= tol) return CausalCharacter::lightlike;
    return q > 0.0 ? CausalCharacter::spacelike : CausalCharacter::timelike;
}

LMat3 LMat3::identity() {
    LMat3 a;
    a.at(0, 0) = a.at(1, 1) = a.at(2, 2) = 1.0;
    return a;
}

LMat3 operator*(const LMat3& a, const LMat3& b) {
    LMat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

LVec3 operator*(const LMat3& a, const LVec3& v) {
    return {a.at(0, 0) * v.x1 + a.at(0, 1) * v.x2 + a.at(0, 2) * v.x3,
            a.at(1, 0) * v.x1 + a.at(1, 1) * v.x2 + a.at(1, 2) * v.x3,
            a.at(2, 0) * v.x1 + a.at(2, 1) * v.x2 + a.at(2, 2) * v.x3};
}

LMat3 transpose(const LMat3& a) {
    LMat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r.at(i, j) = a.at(j, i);
    return r;
}

double det(const LMat3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

double max_abs_diff(const LMat3& a, const LMat3& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 9; ++k) worst = std::max(worst, std::fabs(a.m[k] - b.m[k]));
    return worst;
}

bool is_pseudo_orthogonal(const LMat3& a, double tol) {
    // G = A^T eta A; compare against eta entrywise.
    const LMat3 at = transpose(a);
    LMat3 eta;
    eta.at(0, 0) = eta.at(1, 1) = 1.0;
    eta.at(2, 2) = -1.0;
    const LMat3 g = at * (eta * a);
    return max_abs_diff(g, eta) <= tol;
}

const char* to_string(LorentzComponent c) {
    switch (c) {
        case LorentzComponent::proper_orthochronous: return "++";
        case LorentzComponent::proper_antichronous: return "+-";
        case LorentzComponent::improper_orthochronous: return "-+";
        case LorentzComponent::improper_antichronous: return "--";
        case LorentzComponent::not_pseudo_orthogonal: return "not_pseudo_orthogonal";
    }
    return "?";
}

LorentzComponent classify_lorentz(const LMat3& a, double tol) {
    if (!is_pseudo_orthogonal(a, tol)) return LorentzComponent::not_pseudo_orthogonal;
    const bool proper = det(a) > 0.0;
    const bool orthochronous = a.at(2, 2) > 0.0;
    if (proper) {
        return orthochronous ? LorentzComponent::proper_orthochronous
                             : LorentzComponent::proper_antichronous;
    }
    return orthochronous ? LorentzComponent::improper_orthochronous
                         : LorentzComponent::improper_antichronous;
}

EpsScalar stereo_project(const LVec3& p, Eps eps, double pole_tol) {
    const double membership = std::fabs(inner(p, p) + sign(eps));
    if (membership > 1e-9 * (1.0 + euclid_norm(p) * euclid_norm(p))) {
        throw ContractViolation("stereo_project: point not on the hyperboloid, |<P,P>+eps| = " +
                                std::to_string(membership));
    }
    if (eps == Eps::spacelike) {
        const double den = 1.0 - p.x3;
        if (std::fabs(den) <= pole_tol * (1.0 + std::fabs(p.x3))) {
            throw PoleError("stereo_project: point at the north pole (w = 1)");
        }
        return {p.x1 / den, p.x2 / den, Eps::spacelike};
    }
    const double den = p.x1 + 1.0;
    if (std::fabs(den) <= pole_tol * (1.0 + std::fabs(p.x1))) {
        throw PoleError("stereo_project: point at the south pole (u = -1)");
    }
    return {-p.x2 / den, p.x3 / den, Eps::timelike};
}

LVec3 stereo_unproject(const EpsScalar& z, double cone_tol) {
    const double zz = squared_norm(z);
    if (z.eps == Eps::spacelike) {
        const double den = zz - 1.0;
        if (std::fabs(den) <= cone_tol * (1.0 + zz)) {
            throw LightConeError("stereo_unproject: |z| = 1 maps to the ideal boundary");
        }
        return {-2.0 * z.re / den, -2.0 * z.im / den, (1.0 + zz) / den};
    }
    const double den = 1.0 + zz;
    if (std::fabs(den) <= cone_tol * (1.0 + std::fabs(zz))) {
        throw LightConeError("stereo_unproject: 1 + z zbar = 0 has no hyperboloid preimage");
    }
    return {(1.0 - zz) / den, -2.0 * z.re / den, 2.0 * z.im / den};
}

CkSk ck_sk(double theta, int k, Eps eps) {
    switch (k) {
        case -1: return {std::cos(theta), std::sin(theta)};
        case 0: return {1.0, -sign(eps) * theta};
        case 1: return {std::cosh(theta), std::sinh(theta)};
        default: throw ContractViolation("ck_sk: k must be -1, 0 or +1");
    }
}

LMat3 canonical_rotation(RotationKind kind, double theta) {
    LMat3 a = LMat3::identity();
    switch (kind) {
        case RotationKind::hyperbolic: {
            const double c = std::cosh(theta), s = std::sinh(theta);
            a.at(1, 1) = c; a.at(1, 2) = s;
            a.at(2, 1) = s; a.at(2, 2) = c;
            return a;
        }
        case RotationKind::elliptic: {
            const double c = std::cos(theta), s = std::sin(theta);
            a.at(0, 0) = c; a.at(0, 1) = -s;
            a.at(1, 0) = s; a.at(1, 1) = c;
            return a;
        }
        case RotationKind::parabolic: {
            const double t = theta, q = 0.5 * theta * theta;
            a.at(0, 0) = 1.0;  a.at(0, 1) = -t;      a.at(0, 2) = t;
            a.at(1, 0) = t;    a.at(1, 1) = 1.0 - q; a.at(1, 2) = q;
            a.at(2, 0) = t;    a.at(2, 1) = -q;      a.at(2, 2) = 1.0 + q;
            return a;
        }
    }
    throw ContractViolation("unknown rotation kind");
}

}  // namespace lw3
