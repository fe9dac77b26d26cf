#include "lw3/mobius.hpp"

#include <cmath>
#include <string>

namespace lw3 {

double constraint_residual(const EpsScalar& a, const EpsScalar& b, Eps eps) {
    return squared_norm(a) - sign(eps) * squared_norm(b) - 1.0;
}

MobiusParams new_mobius(const EpsScalar& a, const EpsScalar& b, Eps eps, double tol) {
    check_same_eps(a, b);
    if (a.eps != eps) {
        throw EpsMismatch("mobius coefficients carry a different eps than requested");
    }
    const double r = constraint_residual(a, b, eps);
    if (std::fabs(r) > tol) {
        throw ConstraintViolation("a abar - eps b bbar != 1, residual = " + std::to_string(r));
    }
    return {a, b, eps};
}

MobiusParams identity_mobius(Eps eps) { return {one(eps), zero(eps), eps}; }

EpsScalar apply(const MobiusParams& t, const EpsScalar& z) {
    check_same_eps(t.a, z);
    const EpsScalar num = t.a * z + sign(t.eps) * t.b;
    const EpsScalar den = conj(t.b) * z + conj(t.a);
    try {
        return num * inverse(den);
    } catch (const NullDivisor&) {
        throw DenominatorOnNullCone("bbar z + abar lies on the null cone at z = " + to_string(z));
    }
}

AxisAngle make_axis_angle(const LVec3& axis, double theta, int k, double tol) {
    if (k < -1 || k > 1) throw ContractViolation("axis type k must be -1, 0 or +1");
    const double r = inner(axis, axis) - static_cast<double>(k);
    if (std::fabs(r) > tol * (1.0 + std::fabs(inner(axis, axis)))) {
        throw ConstraintViolation("p^2 + q^2 - r^2 != k, residual = " + std::to_string(r));
    }
    return {axis, theta, k};
}

MobiusParams from_axis_angle(const AxisAngle& ax, Eps eps) {
    const auto [c, s] = ck_sk(0.5 * ax.theta, ax.k, eps);
    const double p = ax.axis.x1, q = ax.axis.x2, r = ax.axis.x3;
    EpsScalar a, b;
    if (eps == Eps::spacelike) {
        a = {c, -r * s, eps};
        b = {q * s, -p * s, eps};
    } else {
        a = {c, p * s, eps};
        b = {r * s, -q * s, eps};
    }
    // c_k^2 - k s_k^2 = 1 makes the constraint hold identically.
    return new_mobius(a, b, eps, 1e-9);
}

LVec3 rotate_point(const AxisAngle& ax, Eps eps, const LVec3& p) {
    const auto [c_full, s_full] = ck_sk(ax.theta, ax.k, eps);
    const auto half = ck_sk(0.5 * ax.theta, ax.k, eps);
    const double w = -2.0 * half.s * half.s * inner(p, ax.axis);
    return c_full * p + w * ax.axis + sign(eps) * s_full * cross_l(p, ax.axis);
}

LMat3 rotation_matrix(const AxisAngle& ax, Eps eps) {
    LMat3 rot;
    const LVec3 cols[3] = {rotate_point(ax, eps, {1, 0, 0}), rotate_point(ax, eps, {0, 1, 0}),
                           rotate_point(ax, eps, {0, 0, 1})};
    for (std::size_t j = 0; j < 3; ++j) {
        rot.at(0, j) = cols[j].x1;
        rot.at(1, j) = cols[j].x2;
        rot.at(2, j) = cols[j].x3;
    }
    return rot;
}

AxisAngle recover_axis_angle(const MobiusParams& t) {
    // (a, b) and (-a, -b) define the same transformation; normalize Re a >= 0.
    EpsScalar a = t.a, b = t.b;
    if (a.re < 0.0) {
        a = -a;
        b = -b;
    }
    // kappa = k * s_k(theta/2)^2, expressed through the stored coefficients.
    double kappa, pc, qc, rc;  // pc, qc, rc are p*s, q*s, r*s
    if (t.eps == Eps::spacelike) {
        kappa = squared_norm(b) - a.im * a.im;
        pc = -b.im;
        qc = b.re;
        rc = -a.im;
    } else {
        kappa = a.im * a.im + b.im * b.im - b.re * b.re;
        pc = a.im;
        qc = -b.im;
        rc = b.re;
    }
    const double scale = 1.0 + pc * pc + qc * qc + rc * rc;
    const double tol = 1e-12 * scale;

    double theta, s;
    int k;
    if (kappa > tol) {
        k = 1;
        theta = 2.0 * std::acosh(std::max(1.0, a.re));
        s = std::sqrt(kappa);
    } else if (kappa < -tol) {
        k = -1;
        s = std::sqrt(-kappa);
        theta = 2.0 * std::atan2(s, a.re);
    } else {
        if (pc * pc + qc * qc + rc * rc <= tol) {
            return {{0.0, 0.0, 1.0}, 0.0, -1};  // identity
        }
        k = 0;
        s = 1.0;
        theta = -2.0 * sign(t.eps) * s;  // s_0(theta/2) = -eps theta/2 = 1
    }
    LVec3 axis{pc / s, qc / s, rc / s};
    if (k != 0) {
        // Round-off in kappa leaks into the axis scale; renormalize exactly.
        const double q = inner(axis, axis);
        if (q * static_cast<double>(k) > 0.0) axis = axis / std::sqrt(std::fabs(q));
    }
    return {axis, theta, k};
}

LMat3 to_rotation(const MobiusParams& t) {
    return rotation_matrix(recover_axis_angle(t), t.eps);
}

MobiusParams compose(const MobiusParams& t1, const MobiusParams& t2) {
    if (t1.eps != t2.eps) throw EpsMismatch("compose: mixed eps");
    EpsScalar a = t1.a * t2.a + sign(t1.eps) * (t1.b * conj(t2.b));
    EpsScalar b = t1.a * t2.b + t1.b * conj(t2.a);
    const double r = squared_norm(a) - sign(t1.eps) * squared_norm(b);
    const double drift = std::fabs(r - 1.0);
    if (drift > 1e-12) {
        if (drift > 1e-8 || r <= 0.0) {
            throw ConstraintViolation("compose drifted off the constraint manifold, residual = " +
                                      std::to_string(drift));
        }
        const double rescale = 1.0 / std::sqrt(r);
        a = rescale * a;
        b = rescale * b;
    }
    return {a, b, t1.eps};
}

MobiusParams inverse_params(const MobiusParams& t) { return {conj(t.a), -t.b, t.eps}; }

}  // namespace lw3
