#include "lw3/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lw3 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool window_ok(const SurfaceGrid& s, std::size_t i, std::size_t j) {
    if (i == 0 || j == 0 || i + 1 >= s.spec.nx || j + 1 >= s.spec.ny) return false;
    for (std::size_t dj = j - 1; dj <= j + 1; ++dj) {
        for (std::size_t di = i - 1; di <= i + 1; ++di) {
            if (!s.valid(di, dj)) return false;
        }
    }
    return true;
}

}  // namespace

ShapeReport fundamental_forms(const SurfaceGrid& surface, const WeierstrassChart* chart) {
    const GridSpec& spec = surface.spec;
    if (spec.nx < 5 || spec.ny < 5) {
        throw ContractViolation("fundamental_forms needs a grid of at least 5x5 nodes");
    }
    ShapeReport rep;
    rep.spec = spec;
    rep.eps = surface.eps;
    const std::size_t total = spec.size();
    for (auto* f : {&rep.E, &rep.F, &rep.G, &rep.l, &rep.m, &rep.n, &rep.H, &rep.K, &rep.k1,
                    &rep.k2, &rep.lambda, &rep.gauss_residual}) {
        f->assign(total, kNaN);
    }
    rep.N.assign(total, LVec3{});
    rep.valid.assign(total, 0);
    rep.lambda_valid.assign(total, 0);
    rep.gauss_valid.assign(total, 0);

    const double e = sign(surface.eps);
    const double hx = spec.hx, hy = spec.hy;

    // Orientation: +1 keeps the raw cross_l(psi_x, psi_y) direction. With a
    // chart, pick the sign that matches the unprojected Gauss map at a
    // reference node.
    double orient = 1.0;
    bool orient_fixed = chart == nullptr;

    rep.min_E = std::numeric_limits<double>::infinity();
    double max_abs_E = 0.0;

    for (std::size_t j = 1; j + 1 < spec.ny; ++j) {
        for (std::size_t i = 1; i + 1 < spec.nx; ++i) {
            if (!window_ok(surface, i, j)) continue;
            const LVec3& c = surface.at(i, j);
            const LVec3& xp = surface.at(i + 1, j);
            const LVec3& xm = surface.at(i - 1, j);
            const LVec3& yp = surface.at(i, j + 1);
            const LVec3& ym = surface.at(i, j - 1);

            const LVec3 psix = (xp - xm) / (2.0 * hx);
            const LVec3 psiy = (yp - ym) / (2.0 * hy);
            const LVec3 psixx = (xp - 2.0 * c + xm) / (hx * hx);
            const LVec3 psiyy = (yp - 2.0 * c + ym) / (hy * hy);
            const LVec3 psixy = (surface.at(i + 1, j + 1) - surface.at(i + 1, j - 1) -
                                 surface.at(i - 1, j + 1) + surface.at(i - 1, j - 1)) /
                                (4.0 * hx * hy);

            const double E = inner(psix, psix);
            const double F = inner(psix, psiy);
            const double G = inner(psiy, psiy);
            const double euclid2 = psix.x1 * psix.x1 + psix.x2 * psix.x2 + psix.x3 * psix.x3;
            if (std::fabs(E) <= 1e-12 * (1.0 + euclid2)) {
                ++rep.n_degenerate_metric;
                continue;
            }
            LVec3 normal = cross_l(psix, psiy) / E;
            const double nn = inner(normal, normal);
            if (-e * nn <= 0.0) {
                ++rep.n_degenerate_metric;
                continue;
            }
            normal = normal / std::sqrt(-e * nn);
            if (!orient_fixed) {
                const LVec3 from_chart = stereo_unproject(chart->g(spec.node(i, j, surface.eps)));
                const LVec3 diff_plus = normal - from_chart;
                const LVec3 diff_minus = normal + from_chart;
                orient = euclid_norm(diff_plus) <= euclid_norm(diff_minus) ? 1.0 : -1.0;
                orient_fixed = true;
            }
            normal = orient * normal;

            const std::size_t k = spec.index(i, j);
            rep.E[k] = E;
            rep.F[k] = F;
            rep.G[k] = G;
            rep.N[k] = normal;
            rep.l[k] = inner(psixx, normal);
            rep.m[k] = inner(psixy, normal);
            rep.n[k] = inner(psiyy, normal);
            rep.valid[k] = 1;
            ++rep.n_valid;

            rep.max_abs_F = std::max(rep.max_abs_F, std::fabs(F));
            rep.max_abs_E_minus_epsG = std::max(rep.max_abs_E_minus_epsG, std::fabs(E - e * G));
            rep.min_E = std::min(rep.min_E, E);
            if (std::fabs(E) > max_abs_E) {
                max_abs_E = std::fabs(E);
                rep.max_E = E;
            }
        }
    }
    if (rep.n_valid == 0) {
        throw DegenerateMetric("first fundamental form degenerate on the whole grid");
    }
    return rep;
}

ShapeReport& curvatures(ShapeReport& rep, bool treat_minimal) {
    const double e = sign(rep.eps);
    rep.max_abs_H = 0.0;
    for (std::size_t k = 0; k < rep.spec.size(); ++k) {
        if (!rep.valid[k]) continue;
        const double E = rep.E[k];
        const double H = -(e * rep.l[k] + rep.n[k]) / (2.0 * E);
        const double K = (rep.m[k] * rep.m[k] - rep.l[k] * rep.n[k]) / (E * E);
        rep.H[k] = H;
        rep.K[k] = K;
        rep.max_abs_H = std::max(rep.max_abs_H, std::fabs(H));
        const double disc = treat_minimal ? e * K : H * H + e * K;
        if (disc > 0.0) {
            const double root = std::sqrt(disc);
            const double h_used = treat_minimal ? 0.0 : H;
            rep.k1[k] = -e * h_used + root;
            rep.k2[k] = -e * h_used - root;
            rep.lambda[k] = -0.25 * std::log(disc);
            rep.lambda_valid[k] = 1;
        }
    }
    return rep;
}

double gauss_equation_residual(ShapeReport& rep) {
    const GridSpec& spec = rep.spec;
    const double e = sign(rep.eps);
    rep.max_gauss_residual = 0.0;
    auto loge = [&](std::size_t i, std::size_t j) {
        return 0.5 * std::log(std::fabs(rep.E[spec.index(i, j)]));
    };
    for (std::size_t j = 2; j + 2 < spec.ny; ++j) {
        for (std::size_t i = 2; i + 2 < spec.nx; ++i) {
            bool ok = true;
            for (std::size_t dj = j - 1; dj <= j + 1 && ok; ++dj) {
                for (std::size_t di = i - 1; di <= i + 1 && ok; ++di) {
                    ok = rep.valid[spec.index(di, dj)] != 0 && rep.E[spec.index(di, dj)] > 0.0;
                }
            }
            if (!ok || !rep.valid[spec.index(i, j)] || !std::isfinite(rep.K[spec.index(i, j)])) {
                continue;
            }
            const double lxx = (loge(i + 1, j) - 2.0 * loge(i, j) + loge(i - 1, j)) / (spec.hx * spec.hx);
            const double lyy = (loge(i, j + 1) - 2.0 * loge(i, j) + loge(i, j - 1)) / (spec.hy * spec.hy);
            const std::size_t k = spec.index(i, j);
            const double res = rep.K[k] + (lxx + e * lyy) / rep.E[k];
            rep.gauss_residual[k] = res;
            rep.gauss_valid[k] = 1;
            rep.max_gauss_residual = std::max(rep.max_gauss_residual, std::fabs(res));
        }
    }
    return rep.max_gauss_residual;
}

RealField lambda_field(const ShapeReport& rep) {
    RealField f;
    f.spec = rep.spec;
    f.values = rep.lambda;
    f.mask = rep.lambda_valid;
    return f;
}

}  // namespace lw3
