#pragma once

#include "lw3/eps_scalar.hpp"
#include "lw3/lorentz3.hpp"

namespace lw3 {

/// Coefficients of T_ab(z) = (a z + eps b)/(bbar z + abar) with unit
/// pseudo-determinant a abar - eps b bbar = 1.
struct MobiusParams {
    EpsScalar a;
    EpsScalar b;
    Eps eps = Eps::spacelike;
};

/// a abar - eps b bbar - 1 (real).
double constraint_residual(const EpsScalar& a, const EpsScalar& b, Eps eps);

/// Validates the unit constraint to `tol`; throws ConstraintViolation with
/// the residual otherwise.
MobiusParams new_mobius(const EpsScalar& a, const EpsScalar& b, Eps eps, double tol = 1e-10);

MobiusParams identity_mobius(Eps eps);

/// T_ab(z). Throws DenominatorOnNullCone when bbar z + abar is not invertible.
EpsScalar apply(const MobiusParams& t, const EpsScalar& z);

/// Rotation axis L = (p, q, r) with p^2 + q^2 - r^2 = k, angle theta and
/// causal type k of the axis (-1 timelike, 0 lightlike, +1 spacelike).
struct AxisAngle {
    LVec3 axis;
    double theta = 0.0;
    int k = -1;
};

/// Validates p^2 + q^2 - r^2 = k to `tol`.
AxisAngle make_axis_angle(const LVec3& axis, double theta, int k, double tol = 1e-10);

/// The coefficient choice of the rotation dictionary:
/// eps = +1: a = c_k(t/2) - i r s_k(t/2), b = (q - i p) s_k(t/2);
/// eps = -1: a = c_k(t/2) + tau p s_k(t/2), b = (r - tau q) s_k(t/2).
MobiusParams from_axis_angle(const AxisAngle& ax, Eps eps);

/// Linear action P -> c_k(t) P - 2 s_k(t/2)^2 <P, L> L + eps s_k(t) cross_l(P, L),
/// assembled column-by-column on the standard basis.
LMat3 rotation_matrix(const AxisAngle& ax, Eps eps);

LVec3 rotate_point(const AxisAngle& ax, Eps eps, const LVec3& p);

/// Recovers an axis-angle representative from the coefficients. For k = 0 the
/// lightlike axis has a scaling freedom; the representative with
/// s_k(theta/2) = 1 is returned. Near-identity params return theta = 0.
AxisAngle recover_axis_angle(const MobiusParams& t);

/// The rotation R in O_1^{++}(3, R) with
/// stereo_unproject(apply(T, stereo_project(P))) = R P on H^2_eps.
LMat3 to_rotation(const MobiusParams& t);

/// Group law in the (a, b) coordinates. Renormalizes onto the constraint
/// manifold when round-off drift is between 1e-12 and 1e-8; larger drift
/// raises ConstraintViolation.
MobiusParams compose(const MobiusParams& t1, const MobiusParams& t2);

/// Params of the inverse transformation: (abar, -b).
MobiusParams inverse_params(const MobiusParams& t);

}  // namespace lw3
