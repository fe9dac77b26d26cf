#pragma once

#include <array>
#include <functional>
#include <utility>

#include "lw3/grid.hpp"
#include "lw3/lorentz3.hpp"

namespace lw3 {

/// Weierstrass data over a rectangular parameter domain: evaluators for g,
/// g', f (and optionally f'), plus the causal sign. Regular nodes satisfy
/// g gbar != eps (outside the delta_g band) and f fbar > 0.
struct WeierstrassChart {
    Eps eps = Eps::spacelike;
    Rect domain;
    ScalarFn g;
    ScalarFn g_prime;
    ScalarFn f;
    ScalarFn f_prime;  // optional; derivative checks fall back to finite differences
    std::function<bool(const EpsScalar&)> singular_predicate;  // optional, true = excluded
    double delta_g = 1e-8;
    // Lorentz-conjugate charts intentionally violate f fbar > 0; they set
    // this to false so nodes stay integrable (curvature checks are skipped).
    bool enforce_regularity = true;
};

enum class NodeStatus : std::uint8_t {
    ok,          // regular: geometry may be evaluated here
    degenerate,  // inside the g gbar ~ eps band or f fbar <= 0; integrable, not regular
    singular,    // evaluator failure or excluded by singular_predicate
};

NodeStatus chart_node_status(const WeierstrassChart& chart, const EpsScalar& z);

/// phi = psi_z from the data, i.e. half of
/// eps = +1: (f(1+g^2)/2, i f(1-g^2)/2, -f g);
/// eps = -1: (f g, f(1-g^2)/2, tau f(1+g^2)/2).
/// Throws SingularNode at singular nodes.
std::array<EpsScalar, 3> phi_from_data(const WeierstrassChart& chart, const EpsScalar& z);

/// Recover (f, g) fields from sampled phi:
/// eps = +1: f = 2(phi1 - i phi2), g = phi3 / (-phi1 + i phi2);
/// eps = -1: f = 2(phi2 + tau phi3), g = phi1 / (phi2 + tau phi3).
/// Nodes with a null denominator are masked.
std::pair<GridField, GridField> data_from_phi(const std::array<GridField, 3>& phi, Eps eps);

/// Liouville-normalized chart: f = -eps / g'. Nodes where g' is null get
/// masked through the evaluator failure path.
WeierstrassChart from_developing_map(ScalarFn g, ScalarFn g_prime, Eps eps, const Rect& domain,
                                     double delta_g = 1e-8);

enum class Provenance { integrated, closed_form };

/// Rectangular sampling of an immersion psi with per-node status.
struct SurfaceGrid {
    GridSpec spec;
    Eps eps = Eps::spacelike;
    std::vector<LVec3> psi;
    std::vector<NodeStatus> status;
    Provenance provenance = Provenance::integrated;

    const LVec3& at(std::size_t i, std::size_t j) const { return psi[spec.index(i, j)]; }
    NodeStatus state(std::size_t i, std::size_t j) const { return status[spec.index(i, j)]; }
    bool valid(std::size_t i, std::size_t j) const { return state(i, j) == NodeStatus::ok; }
    bool defined(std::size_t i, std::size_t j) const { return state(i, j) != NodeStatus::singular; }
    std::size_t count_valid() const;
};

struct IntegrateOptions {
    bool check_periods = true;
    double period_tol = 1e-6;
};

/// psi = 2 Re int_{z0}^{z} phi dz by composite Simpson quadrature along the
/// grid's own nodes, on the two-leg axis path z0 -> (x, y0) -> (x, y).
/// psi(z0) = 0. Throws PathBlocked when the path to a non-singular node
/// crosses a singular node, PeriodDetected when the boundary-loop real
/// period exceeds options.period_tol.
SurfaceGrid integrate_immersion(const WeierstrassChart& chart, const GridSpec& spec,
                                std::size_t i0, std::size_t j0, const IntegrateOptions& = {});

/// Convenience overload: z0 snapped to the nearest grid node.
SurfaceGrid integrate_immersion(const WeierstrassChart& chart, const GridSpec& spec,
                                const EpsScalar& z0, const IntegrateOptions& = {});

/// Sample a closed-form immersion (no integration).
SurfaceGrid surface_from_closed_form(const std::function<LVec3(double, double)>& psi,
                                     const GridSpec& spec, Eps eps,
                                     const WeierstrassChart* mask_chart = nullptr);

/// || 2 Re oint phi dz || over the axis-aligned rectangle loop with node
/// corners (i0, j0) and (i1, j1).
double period_residual(const WeierstrassChart& chart, const GridSpec& spec, std::size_t i0,
                       std::size_t i1, std::size_t j0, std::size_t j1);

/// e^{2 lambda} = f fbar (1 - eps g gbar)^2 / 4. Throws SingularNode inside
/// the delta_g band.
double conformal_factor(const WeierstrassChart& chart, const EpsScalar& z);

/// Unit normal N with stereo_project(N, eps) = g(z). Throws LightConeError
/// on the excluded loci.
LVec3 gauss_map(const WeierstrassChart& chart, const EpsScalar& z);

/// alpha = -eps f g'; identically 1 on from_developing_map charts.
EpsScalar hopf_density(const WeierstrassChart& chart, const EpsScalar& z);

/// phi component fields sampled over a grid (masked at singular nodes only).
std::array<GridField, 3> sample_phi(const WeierstrassChart& chart, const GridSpec& spec);

}  // namespace lw3
