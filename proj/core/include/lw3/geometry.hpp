#pragma once

#include <vector>

#include "lw3/weierstrass.hpp"

namespace lw3 {

/// Per-node differential-geometric fields of a sampled immersion, plus a
/// residual summary. Fields are populated at nodes whose full 3x3
/// neighborhood is regular; lambda additionally requires H^2 + eps K > 0.
struct ShapeReport {
    GridSpec spec;
    Eps eps = Eps::spacelike;

    std::vector<double> E, F, G, l, m, n;
    std::vector<LVec3> N;
    std::vector<double> H, K, k1, k2, lambda;
    std::vector<double> gauss_residual;  // K + Delta log sqrt(E)

    std::vector<std::uint8_t> valid;         // first/second forms + N
    std::vector<std::uint8_t> lambda_valid;
    std::vector<std::uint8_t> gauss_valid;

    double max_abs_H = 0.0;
    double max_abs_F = 0.0;
    double max_abs_E_minus_epsG = 0.0;
    double max_E = 0.0;
    double min_E = 0.0;
    double max_gauss_residual = 0.0;
    std::size_t n_valid = 0;
    std::size_t n_degenerate_metric = 0;

    bool node_valid(std::size_t i, std::size_t j) const { return valid[spec.index(i, j)] != 0; }
};

/// First and second fundamental forms and the unit normal by central
/// differences. N = cross_l(psi_x, psi_y)/E, exactly normalized, with the
/// sign chosen so that stereo_project(N) = g when a chart is supplied
/// (raw cross_l orientation otherwise). Throws DegenerateMetric when no
/// node has an invertible first form.
ShapeReport fundamental_forms(const SurfaceGrid& surface,
                              const WeierstrassChart* chart = nullptr);

/// Fills H, K, principal curvatures and lambda = -log(H^2 + eps K)/4 into
/// the report. With treat_minimal, lambda uses H = 0, i.e. -log(eps K)/4.
ShapeReport& curvatures(ShapeReport& report, bool treat_minimal = false);

/// Gauss-equation residual field K + Delta log sqrt(E), with
/// Delta = (1/E)(d_xx + eps d_yy); returns the max over interior nodes.
double gauss_equation_residual(ShapeReport& report);

/// Extract a tagged real field from the report (for export and tests).
RealField lambda_field(const ShapeReport& report);

}  // namespace lw3
