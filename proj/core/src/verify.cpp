#include "lw3/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace lw3 {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* pf(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

GridSpec default_verify_grid(const GalleryEntry& entry) {
    return GridSpec::from_rect(entry.verify_window, 201, 201);
}

VerifyReport verify_entry(const GalleryEntry& entry, const GridSpec& spec,
                          const VerifyThresholds& t) {
    VerifyReport r;
    r.example = entry.name;
    r.eps = entry.eps;
    r.grid = spec;
    r.nodes_total = spec.size();
    r.curvature_checked = entry.curvature_verified;
    const double e = sign(entry.eps);
    const Eps eps = entry.eps;

    // phi-level residuals
    const auto phi = sample_phi(entry.chart, spec);
    double isotropy = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (!phi[0].mask[k]) continue;
        const EpsScalar iso = phi[0].values[k] * phi[0].values[k] +
                              phi[1].values[k] * phi[1].values[k] -
                              phi[2].values[k] * phi[2].values[k];
        isotropy = std::max(isotropy, mag(iso));
    }
    r.isotropy = isotropy;
    r.wirtinger = std::max({wirtinger_residual(phi[0]), wirtinger_residual(phi[1]),
                            wirtinger_residual(phi[2])});
    r.period = period_residual(entry.chart, spec, 0, spec.nx - 1, 0, spec.ny - 1);

    // Hopf density against the Liouville normal form alpha = 1
    double hopf_dev = 0.0;
    const EpsScalar alpha_ref = one(eps);
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const EpsScalar z = spec.node(i, j, eps);
            if (chart_node_status(entry.chart, z) == NodeStatus::singular) continue;
            hopf_dev = std::max(hopf_dev, mag(hopf_density(entry.chart, z) - alpha_ref));
        }
    }
    r.hopf_dev = hopf_dev;

    // Integrated immersion and closed-form deviation
    const std::size_t i0 = spec.nx / 2, j0 = spec.ny / 2;
    const SurfaceGrid surface = integrate_immersion(entry.chart, spec, i0, j0);
    r.nodes_valid = surface.count_valid();
    if (entry.closed_form) {
        const LVec3 offset = entry.closed_form(spec.x(i0), spec.y(j0));
        double dev = 0.0;
        for (std::size_t j = 0; j < spec.ny; ++j) {
            for (std::size_t i = 0; i < spec.nx; ++i) {
                if (!surface.defined(i, j)) continue;
                const LVec3 ref = entry.closed_form(spec.x(i), spec.y(j)) - offset;
                dev = std::max(dev, max_abs(surface.at(i, j) - ref));
            }
        }
        r.closed_form_dev = dev;
    } else {
        r.closed_form_dev = std::numeric_limits<double>::quiet_NaN();
    }

    // Curvature residuals
    if (entry.curvature_verified) {
        ShapeReport geom = fundamental_forms(surface, &entry.chart);
        curvatures(geom, true);
        r.max_abs_H = geom.max_abs_H;
        r.max_abs_F = geom.max_abs_F;
        r.max_abs_E_minus_epsG = geom.max_abs_E_minus_epsG;
        r.max_E = geom.max_E;
    }

    // Liouville residual of lambda(g)
    const RealField lambda = lambda_from_g(entry.chart.g, entry.chart.g_prime, eps, spec);
    r.liouville = liouville_residual(lambda, eps);

    // Gauss map identities
    double norm_dev = 0.0, proj_dev = 0.0;
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const EpsScalar z = spec.node(i, j, eps);
            if (chart_node_status(entry.chart, z) != NodeStatus::ok) continue;
            const LVec3 n = gauss_map(entry.chart, z);
            norm_dev = std::max(norm_dev, std::fabs(inner(n, n) + e));
            proj_dev = std::max(proj_dev, mag(stereo_project(n, eps) - entry.chart.g(z)));
        }
    }
    r.gauss_norm_dev = norm_dev;
    r.gauss_proj_dev = proj_dev;

    r.pass.isotropy = r.isotropy <= t.isotropy;
    r.pass.wirtinger = r.wirtinger <= t.wirtinger;
    r.pass.period = r.period <= t.period;
    r.pass.hopf = r.hopf_dev <= t.hopf_normal;
    r.pass.closed_form = !std::isfinite(r.closed_form_dev) || r.closed_form_dev <= t.closed_form;
    r.pass.minimality = !entry.curvature_verified || r.max_abs_H <= t.minimality;
    r.pass.conformality =
        !entry.curvature_verified ||
        (r.max_abs_F <= t.conformality_rel * std::fabs(r.max_E) &&
         r.max_abs_E_minus_epsG <= t.conformality_rel * std::fabs(r.max_E));
    r.pass.liouville = r.liouville <= t.liouville;
    r.pass.gauss = r.gauss_norm_dev <= t.gauss_norm && r.gauss_proj_dev <= t.gauss_proj;
    r.all_pass = r.pass.isotropy && r.pass.wirtinger && r.pass.period && r.pass.hopf &&
                 r.pass.closed_form && r.pass.minimality && r.pass.conformality &&
                 r.pass.liouville && r.pass.gauss;
    return r;
}

void print_report_text(std::ostream& os, const VerifyReport& r, const VerifyThresholds& t) {
    os << "example: " << r.example << "\n";
    os << "eps: " << (r.eps == Eps::spacelike ? "+1" : "-1") << "\n";
    os << "grid: " << r.grid.nx << "x" << r.grid.ny << " origin=(" << fmt(r.grid.x0) << ","
       << fmt(r.grid.y0) << ") step=(" << fmt(r.grid.hx) << "," << fmt(r.grid.hy) << ")\n";
    os << "nodes: total=" << r.nodes_total << " valid=" << r.nodes_valid << "\n";
    os << "isotropy_residual: " << fmt(r.isotropy) << " tol=" << fmt(t.isotropy) << " "
       << pf(r.pass.isotropy) << "\n";
    os << "wirtinger_residual: " << fmt(r.wirtinger) << " tol=" << fmt(t.wirtinger) << " "
       << pf(r.pass.wirtinger) << "\n";
    os << "period_residual: " << fmt(r.period) << " tol=" << fmt(t.period) << " "
       << pf(r.pass.period) << "\n";
    os << "hopf_deviation: " << fmt(r.hopf_dev) << " tol=" << fmt(t.hopf_normal) << " "
       << pf(r.pass.hopf) << "\n";
    os << "closed_form_deviation: " << fmt(r.closed_form_dev) << " tol=" << fmt(t.closed_form)
       << " " << pf(r.pass.closed_form) << "\n";
    if (r.curvature_checked) {
        os << "max_abs_H: " << fmt(r.max_abs_H) << " tol=" << fmt(t.minimality) << " "
           << pf(r.pass.minimality) << "\n";
        os << "max_abs_F: " << fmt(r.max_abs_F) << " tol=" << fmt(t.conformality_rel * r.max_E)
           << " " << pf(r.pass.conformality) << "\n";
        os << "max_abs_E_minus_epsG: " << fmt(r.max_abs_E_minus_epsG)
           << " tol=" << fmt(t.conformality_rel * r.max_E) << " " << pf(r.pass.conformality)
           << "\n";
    } else {
        os << "curvature checks skipped (Weingarten not diagonalizable)\n";
    }
    os << "liouville_residual: " << fmt(r.liouville) << " tol=" << fmt(t.liouville) << " "
       << pf(r.pass.liouville) << "\n";
    os << "gauss_norm_deviation: " << fmt(r.gauss_norm_dev) << " tol=" << fmt(t.gauss_norm)
       << " " << pf(r.pass.gauss) << "\n";
    os << "gauss_projection_deviation: " << fmt(r.gauss_proj_dev) << " tol=" << fmt(t.gauss_proj)
       << " " << pf(r.pass.gauss) << "\n";
    os << "all_pass: " << (r.all_pass ? "true" : "false") << "\n";
}

namespace {

void json_kv(std::ostream& os, const char* key, double v, bool comma = true) {
    if (std::isfinite(v)) {
        os << "  \"" << key << "\": " << fmt(v);
    } else {
        os << "  \"" << key << "\": null";
    }
    os << (comma ? ",\n" : "\n");
}

}  // namespace

void print_report_json(std::ostream& os, const VerifyReport& r, const VerifyThresholds& t) {
    os << "{\n";
    os << "  \"example\": \"" << r.example << "\",\n";
    os << "  \"eps\": " << (r.eps == Eps::spacelike ? 1 : -1) << ",\n";
    os << "  \"grid\": {\"nx\": " << r.grid.nx << ", \"ny\": " << r.grid.ny << ", \"x0\": "
       << fmt(r.grid.x0) << ", \"y0\": " << fmt(r.grid.y0) << ", \"hx\": " << fmt(r.grid.hx)
       << ", \"hy\": " << fmt(r.grid.hy) << "},\n";
    os << "  \"nodes_total\": " << r.nodes_total << ",\n";
    os << "  \"nodes_valid\": " << r.nodes_valid << ",\n";
    json_kv(os, "isotropy_residual", r.isotropy);
    json_kv(os, "wirtinger_residual", r.wirtinger);
    json_kv(os, "period_residual", r.period);
    json_kv(os, "hopf_deviation", r.hopf_dev);
    json_kv(os, "closed_form_deviation", r.closed_form_dev);
    os << "  \"curvature_checked\": " << (r.curvature_checked ? "true" : "false") << ",\n";
    json_kv(os, "max_abs_H", r.max_abs_H);
    json_kv(os, "max_abs_F", r.max_abs_F);
    json_kv(os, "max_abs_E_minus_epsG", r.max_abs_E_minus_epsG);
    json_kv(os, "max_E", r.max_E);
    json_kv(os, "liouville_residual", r.liouville);
    json_kv(os, "gauss_norm_deviation", r.gauss_norm_dev);
    json_kv(os, "gauss_projection_deviation", r.gauss_proj_dev);
    json_kv(os, "tol_minimality", t.minimality);
    json_kv(os, "tol_conformality_rel", t.conformality_rel);
    json_kv(os, "tol_liouville", t.liouville);
    os << "  \"checks\": {"
       << "\"isotropy\": " << (r.pass.isotropy ? "true" : "false")
       << ", \"wirtinger\": " << (r.pass.wirtinger ? "true" : "false")
       << ", \"period\": " << (r.pass.period ? "true" : "false")
       << ", \"hopf\": " << (r.pass.hopf ? "true" : "false")
       << ", \"closed_form\": " << (r.pass.closed_form ? "true" : "false")
       << ", \"minimality\": " << (r.pass.minimality ? "true" : "false")
       << ", \"conformality\": " << (r.pass.conformality ? "true" : "false")
       << ", \"liouville\": " << (r.pass.liouville ? "true" : "false")
       << ", \"gauss\": " << (r.pass.gauss ? "true" : "false") << "},\n";
    os << "  \"all_pass\": " << (r.all_pass ? "true" : "false") << "\n";
    os << "}\n";
}

}  // namespace lw3
