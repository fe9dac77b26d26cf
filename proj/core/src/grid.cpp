#include "lw3/grid.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace lw3 {

GridSpec GridSpec::from_rect(const Rect& r, std::size_t nx, std::size_t ny) {
    if (nx < 2 || ny < 2) {
        throw ContractViolation("grid needs at least 2 nodes per axis");
    }
    if (!(r.x1 > r.x0) || !(r.y1 > r.y0)) {
        throw ContractViolation("grid rectangle must have positive extent");
    }
    GridSpec s;
    s.x0 = r.x0;
    s.y0 = r.y0;
    s.hx = (r.x1 - r.x0) / static_cast<double>(nx - 1);
    s.hy = (r.y1 - r.y0) / static_cast<double>(ny - 1);
    s.nx = nx;
    s.ny = ny;
    return s;
}

std::size_t GridField::count_valid() const {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

std::size_t RealField::count_valid() const {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

GridField sample_field(const GridSpec& spec, Eps eps, const ScalarFn& fn) {
    GridField f;
    f.spec = spec;
    f.eps = eps;
    f.values.assign(spec.size(), zero(eps));
    f.mask.assign(spec.size(), 0);
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            try {
                const EpsScalar v = fn(spec.node(i, j, eps));
                if (finite(v)) {
                    f.values[spec.index(i, j)] = v;
                    f.mask[spec.index(i, j)] = 1;
                }
            } catch (const Error&) {
                // node stays masked
            }
        }
    }
    return f;
}

namespace {

// Directional derivative along one axis with mask awareness. Returns nullopt
// when there is no 2nd-order stencil support.
std::optional<EpsScalar> axis_derivative(const GridField& f, std::size_t i, std::size_t j,
                                         bool along_x) {
    const auto& s = f.spec;
    const double h = along_x ? s.hx : s.hy;
    const std::size_t n = along_x ? s.nx : s.ny;
    const std::size_t k = along_x ? i : j;
    auto value = [&](std::size_t t) -> const EpsScalar& {
        return along_x ? f.at(t, j) : f.at(i, t);
    };
    auto ok = [&](std::size_t t) { return along_x ? f.valid(t, j) : f.valid(i, t); };

    if (k > 0 && k + 1 < n && ok(k - 1) && ok(k + 1)) {
        return (value(k + 1) - value(k - 1)) / (2.0 * h);
    }
    if (k + 2 < n && ok(k + 1) && ok(k + 2)) {
        return (-3.0 * value(k) + 4.0 * value(k + 1) - value(k + 2)) / (2.0 * h);
    }
    if (k >= 2 && ok(k - 1) && ok(k - 2)) {
        return (3.0 * value(k) - 4.0 * value(k - 1) + value(k - 2)) / (2.0 * h);
    }
    return std::nullopt;
}

// dz    = (dx + u^{-1} dy) / 2,  dzbar = (dx - u^{-1} dy) / 2, with
// u^{-1} = -eps * u. This reduces to the usual complex operators for
// eps = +1 and to the paracomplex ones for eps = -1; both annihilate z.
GridField wirtinger(const GridField& f, bool bar) {
    GridField d;
    d.spec = f.spec;
    d.eps = f.eps;
    d.values.assign(f.spec.size(), zero(f.eps));
    d.mask.assign(f.spec.size(), 0);
    const EpsScalar u_inv = -sign(f.eps) * imag_unit(f.eps);
    for (std::size_t j = 0; j < f.spec.ny; ++j) {
        for (std::size_t i = 0; i < f.spec.nx; ++i) {
            if (!f.valid(i, j)) continue;
            const auto dx = axis_derivative(f, i, j, true);
            const auto dy = axis_derivative(f, i, j, false);
            if (!dx || !dy) continue;
            const EpsScalar t = u_inv * (*dy);
            d.values[d.spec.index(i, j)] = bar ? 0.5 * (*dx - t) : 0.5 * (*dx + t);
            d.mask[d.spec.index(i, j)] = 1;
        }
    }
    return d;
}

}  // namespace

GridField wirtinger_dz(const GridField& f) { return wirtinger(f, false); }
GridField wirtinger_dzbar(const GridField& f) { return wirtinger(f, true); }

double wirtinger_residual(const GridField& f) {
    if (f.spec.nx < 3 || f.spec.ny < 3) {
        throw ContractViolation("wirtinger_residual needs a grid of at least 3x3 nodes");
    }
    const GridField d = wirtinger_dzbar(f);
    double worst = 0.0;
    std::size_t n = 0;
    for (std::size_t j = 0; j < d.spec.ny; ++j) {
        for (std::size_t i = 0; i < d.spec.nx; ++i) {
            if (!d.valid(i, j)) continue;
            worst = std::max(worst, mag(d.at(i, j)));
            ++n;
        }
    }
    if (n == 0) {
        throw ContractViolation("wirtinger_residual: no node with stencil support");
    }
    return worst;
}

}  // namespace lw3
