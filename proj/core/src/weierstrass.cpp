#include "lw3/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace lw3 {

namespace {

// Evaluate an optional chart evaluator, mapping any failure to nullopt.
std::optional<EpsScalar> try_eval(const ScalarFn& fn, const EpsScalar& z) {
    if (!fn) return std::nullopt;
    try {
        const EpsScalar v = fn(z);
        if (!finite(v)) return std::nullopt;
        return v;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

NodeStatus chart_node_status(const WeierstrassChart& chart, const EpsScalar& z) {
    if (chart.singular_predicate && chart.singular_predicate(z)) return NodeStatus::singular;
    const auto gv = try_eval(chart.g, z);
    const auto fv = try_eval(chart.f, z);
    if (!gv || !fv) return NodeStatus::singular;
    if (!chart.enforce_regularity) return NodeStatus::ok;
    if (std::fabs(squared_norm(*gv) - sign(chart.eps)) <= chart.delta_g) {
        return NodeStatus::degenerate;
    }
    const double ff = squared_norm(*fv);
    if (ff <= 1e-14 * (1.0 + mag(*fv) * mag(*fv))) return NodeStatus::degenerate;
    return NodeStatus::ok;
}

std::array<EpsScalar, 3> phi_from_data(const WeierstrassChart& chart, const EpsScalar& z) {
    if (chart_node_status(chart, z) == NodeStatus::singular) {
        throw SingularNode("phi_from_data at singular node z = " + to_string(z));
    }
    const EpsScalar g = chart.g(z);
    const EpsScalar f = chart.f(z);
    const EpsScalar g2 = g * g;
    const EpsScalar u = imag_unit(chart.eps);
    const EpsScalar unit = one(chart.eps);
    if (chart.eps == Eps::spacelike) {
        return {0.25 * (f * (unit + g2)), 0.25 * (u * (f * (unit - g2))), -0.5 * (f * g)};
    }
    return {0.5 * (f * g), 0.25 * (f * (unit - g2)), 0.25 * (u * (f * (unit + g2)))};
}

std::pair<GridField, GridField> data_from_phi(const std::array<GridField, 3>& phi, Eps eps) {
    const GridSpec& spec = phi[0].spec;
    GridField f_field, g_field;
    f_field.spec = g_field.spec = spec;
    f_field.eps = g_field.eps = eps;
    f_field.values.assign(spec.size(), zero(eps));
    g_field.values.assign(spec.size(), zero(eps));
    f_field.mask.assign(spec.size(), 0);
    g_field.mask.assign(spec.size(), 0);
    const EpsScalar u = imag_unit(eps);
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            if (!phi[0].valid(i, j) || !phi[1].valid(i, j) || !phi[2].valid(i, j)) continue;
            const EpsScalar p1 = phi[0].at(i, j);
            const EpsScalar p2 = phi[1].at(i, j);
            const EpsScalar p3 = phi[2].at(i, j);
            EpsScalar den, num, fv;
            if (eps == Eps::spacelike) {
                fv = 2.0 * (p1 - u * p2);
                den = -p1 + u * p2;
                num = p3;
            } else {
                fv = 2.0 * (p2 + u * p3);
                den = p2 + u * p3;
                num = p1;
            }
            try {
                const EpsScalar gv = num * inverse(den);
                const std::size_t k = spec.index(i, j);
                f_field.values[k] = fv;
                g_field.values[k] = gv;
                f_field.mask[k] = 1;
                g_field.mask[k] = 1;
            } catch (const NullDivisor&) {
                // denominator on the null cone: node stays masked
            }
        }
    }
    return {f_field, g_field};
}

WeierstrassChart from_developing_map(ScalarFn g, ScalarFn g_prime, Eps eps, const Rect& domain,
                                     double delta_g) {
    WeierstrassChart chart;
    chart.eps = eps;
    chart.domain = domain;
    chart.g = std::move(g);
    chart.g_prime = std::move(g_prime);
    chart.delta_g = delta_g;
    const double e = sign(eps);
    const ScalarFn gp = chart.g_prime;
    chart.f = [gp, e](const EpsScalar& z) { return -e * inverse(gp(z)); };
    return chart;
}

std::size_t SurfaceGrid::count_valid() const {
    return static_cast<std::size_t>(
        std::count(status.begin(), status.end(), NodeStatus::ok));
}

namespace {

struct PhiVec {
    EpsScalar c[3];
};

PhiVec operator+(const PhiVec& a, const PhiVec& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}
PhiVec operator-(const PhiVec& a, const PhiVec& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
}
PhiVec operator*(double s, const PhiVec& a) { return {{s * a.c[0], s * a.c[1], s * a.c[2]}}; }
PhiVec operator*(const EpsScalar& s, const PhiVec& a) {
    return {{s * a.c[0], s * a.c[1], s * a.c[2]}};
}

PhiVec zero_vec(Eps eps) { return {{zero(eps), zero(eps), zero(eps)}}; }

// Prefix integrals P[k] = int_{t_s}^{t_k} f dt on a uniform line of samples,
// 4th order: composite Simpson for even interval counts, a Simpson-3/8 patch
// for odd counts, and a one-sided 4-point rule for the first interval.
//
// `have(k)` must be true for every sample the caller wants reached; the
// routine fills `reached` accordingly and stops at the first missing sample.
void prefix_integrals(std::size_t n, std::size_t s, double h, Eps eps,
                      const std::function<const PhiVec&(std::size_t)>& sample,
                      const std::function<bool(std::size_t)>& have, std::vector<PhiVec>& out,
                      std::vector<std::uint8_t>& reached) {
    out.assign(n, zero_vec(eps));
    reached.assign(n, 0);
    reached[s] = 1;

    auto first_interval = [&](std::size_t a, std::size_t b, double step) -> PhiVec {
        // one step from t_a to t_b = t_a + step, using up to two more samples
        const long dir = b > a ? 1 : -1;
        const auto idx = [&](long off) { return static_cast<std::size_t>(static_cast<long>(a) + dir * off); };
        const bool have2 = (dir > 0) ? (a + 3 < n && have(idx(2)) && have(idx(3)))
                                     : (a >= 3 && have(idx(2)) && have(idx(3)));
        if (have2) {
            // h/24 (9 f0 + 19 f1 - 5 f2 + f3)
            return (step / 24.0) *
                   (9.0 * sample(a) + 19.0 * sample(b) - 5.0 * sample(idx(2)) + 1.0 * sample(idx(3)));
        }
        const bool have1 = (dir > 0) ? (a + 2 < n && have(idx(2))) : (a >= 2 && have(idx(2)));
        if (have1) {
            // h/12 (5 f0 + 8 f1 - f2)
            return (step / 12.0) * (5.0 * sample(a) + 8.0 * sample(b) - 1.0 * sample(idx(2)));
        }
        return (step / 2.0) * (sample(a) + sample(b));  // trapezoid fallback
    };

    for (int dir : {+1, -1}) {
        double step = dir * h;
        long k = static_cast<long>(s) + dir;
        std::size_t d = 1;
        while (k >= 0 && k < static_cast<long>(n)) {
            const std::size_t uk = static_cast<std::size_t>(k);
            if (!have(uk)) break;
            if (d == 1) {
                out[uk] = first_interval(s, uk, step);
            } else if (d % 2 == 0) {
                const std::size_t prev = static_cast<std::size_t>(k - 2 * dir);
                const std::size_t mid = static_cast<std::size_t>(k - dir);
                out[uk] = out[prev] +
                          (step / 3.0) * (sample(prev) + 4.0 * sample(mid) + 1.0 * sample(uk));
            } else {
                const std::size_t p3 = static_cast<std::size_t>(k - 3 * dir);
                const std::size_t p2 = static_cast<std::size_t>(k - 2 * dir);
                const std::size_t p1 = static_cast<std::size_t>(k - dir);
                out[uk] = out[p3] + (3.0 * step / 8.0) * (sample(p3) + 3.0 * sample(p2) +
                                                          3.0 * sample(p1) + 1.0 * sample(uk));
            }
            reached[uk] = 1;
            k += dir;
            ++d;
        }
    }
}

LVec3 two_re(const PhiVec& v) { return {2.0 * v.c[0].re, 2.0 * v.c[1].re, 2.0 * v.c[2].re}; }

// Composite Simpson over a whole sampled line (all samples assumed present).
PhiVec line_integral(const std::vector<PhiVec>& f, double h, Eps eps) {
    const std::size_t n = f.size();
    PhiVec acc = zero_vec(eps);
    if (n < 2) return acc;
    std::size_t m = n - 1;  // interval count
    std::size_t end = n - 1;
    if (m % 2 == 1) {
        if (m == 1) return (h / 2.0) * (f[0] + f[1]);
        // Simpson-3/8 on the last three intervals
        acc = (3.0 * h / 8.0) * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + 1.0 * f[n - 1]);
        end = n - 4;
    }
    for (std::size_t k = 0; k + 2 <= end; k += 2) {
        acc = acc + (h / 3.0) * (f[k] + 4.0 * f[k + 1] + 1.0 * f[k + 2]);
    }
    return acc;
}

}  // namespace

std::array<GridField, 3> sample_phi(const WeierstrassChart& chart, const GridSpec& spec) {
    std::array<GridField, 3> phi;
    for (auto& f : phi) {
        f.spec = spec;
        f.eps = chart.eps;
        f.values.assign(spec.size(), zero(chart.eps));
        f.mask.assign(spec.size(), 0);
    }
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const EpsScalar z = spec.node(i, j, chart.eps);
            if (chart_node_status(chart, z) == NodeStatus::singular) continue;
            try {
                const auto v = phi_from_data(chart, z);
                const std::size_t k = spec.index(i, j);
                for (std::size_t c = 0; c < 3; ++c) {
                    phi[c].values[k] = v[c];
                    phi[c].mask[k] = 1;
                }
            } catch (const Error&) {
                // stays masked
            }
        }
    }
    return phi;
}

SurfaceGrid integrate_immersion(const WeierstrassChart& chart, const GridSpec& spec,
                                std::size_t i0, std::size_t j0, const IntegrateOptions& opt) {
    if (i0 >= spec.nx || j0 >= spec.ny) {
        throw ContractViolation("integration base point outside the grid");
    }
    const Eps eps = chart.eps;
    const std::size_t total = spec.size();

    std::vector<NodeStatus> status(total, NodeStatus::singular);
    std::vector<PhiVec> phi(total, zero_vec(eps));
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const EpsScalar z = spec.node(i, j, eps);
            const NodeStatus st = chart_node_status(chart, z);
            status[spec.index(i, j)] = st;
            if (st != NodeStatus::singular) {
                const auto v = phi_from_data(chart, z);
                phi[spec.index(i, j)] = {{v[0], v[1], v[2]}};
            }
        }
    }
    if (status[spec.index(i0, j0)] == NodeStatus::singular) {
        throw ContractViolation("integration base point is a singular node");
    }

    // Leg 1: along the row j0.
    std::vector<PhiVec> row_prefix;
    std::vector<std::uint8_t> row_reached;
    prefix_integrals(
        spec.nx, i0, spec.hx, eps,
        [&](std::size_t i) -> const PhiVec& { return phi[spec.index(i, j0)]; },
        [&](std::size_t i) { return status[spec.index(i, j0)] != NodeStatus::singular; },
        row_prefix, row_reached);

    // Leg 2: column by column, then psi = 2 Re(I1 + u I2).
    const EpsScalar u = imag_unit(eps);
    std::vector<LVec3> psi(total, LVec3{});
    std::vector<std::uint8_t> defined(total, 0);
    std::vector<PhiVec> col_prefix;
    std::vector<std::uint8_t> col_reached;
    std::size_t unreachable = 0;
    for (std::size_t i = 0; i < spec.nx; ++i) {
        if (!row_reached[i]) {
            for (std::size_t j = 0; j < spec.ny; ++j) {
                if (status[spec.index(i, j)] != NodeStatus::singular) ++unreachable;
            }
            continue;
        }
        prefix_integrals(
            spec.ny, j0, spec.hy, eps,
            [&](std::size_t j) -> const PhiVec& { return phi[spec.index(i, j)]; },
            [&](std::size_t j) { return status[spec.index(i, j)] != NodeStatus::singular; },
            col_prefix, col_reached);
        for (std::size_t j = 0; j < spec.ny; ++j) {
            const std::size_t k = spec.index(i, j);
            if (status[k] == NodeStatus::singular) continue;
            if (!col_reached[j]) {
                ++unreachable;
                continue;
            }
            psi[k] = two_re(row_prefix[i] + u * col_prefix[j]);
            defined[k] = 1;
        }
    }
    if (unreachable > 0) {
        throw PathBlocked("axis path crosses singular nodes; " + std::to_string(unreachable) +
                          " node(s) unreachable");
    }

    SurfaceGrid surface;
    surface.spec = spec;
    surface.eps = eps;
    surface.psi = std::move(psi);
    surface.status = std::move(status);
    surface.provenance = Provenance::integrated;

    if (opt.check_periods && spec.nx >= 3 && spec.ny >= 3) {
        bool loop_ok = true;
        for (std::size_t i = 0; i < spec.nx && loop_ok; ++i) {
            loop_ok = surface.defined(i, 0) && surface.defined(i, spec.ny - 1);
        }
        for (std::size_t j = 0; j < spec.ny && loop_ok; ++j) {
            loop_ok = surface.defined(0, j) && surface.defined(spec.nx - 1, j);
        }
        if (loop_ok) {
            const double res = period_residual(chart, spec, 0, spec.nx - 1, 0, spec.ny - 1);
            if (res > opt.period_tol) {
                throw PeriodDetected("real period " + std::to_string(res) +
                                     " exceeds tolerance; domain not simply connected");
            }
        }
    }
    return surface;
}

SurfaceGrid integrate_immersion(const WeierstrassChart& chart, const GridSpec& spec,
                                const EpsScalar& z0, const IntegrateOptions& opt) {
    const double fi = (z0.re - spec.x0) / spec.hx;
    const double fj = (z0.im - spec.y0) / spec.hy;
    const long i = std::lround(fi), j = std::lround(fj);
    if (i < 0 || j < 0 || i >= static_cast<long>(spec.nx) || j >= static_cast<long>(spec.ny)) {
        throw ContractViolation("integration base point outside the grid");
    }
    return integrate_immersion(chart, spec, static_cast<std::size_t>(i),
                               static_cast<std::size_t>(j), opt);
}

SurfaceGrid surface_from_closed_form(const std::function<LVec3(double, double)>& psi_fn,
                                     const GridSpec& spec, Eps eps,
                                     const WeierstrassChart* mask_chart) {
    SurfaceGrid s;
    s.spec = spec;
    s.eps = eps;
    s.psi.assign(spec.size(), LVec3{});
    s.status.assign(spec.size(), NodeStatus::ok);
    s.provenance = Provenance::closed_form;
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const std::size_t k = spec.index(i, j);
            s.psi[k] = psi_fn(spec.x(i), spec.y(j));
            if (mask_chart) {
                s.status[k] = chart_node_status(*mask_chart, spec.node(i, j, eps));
            }
        }
    }
    return s;
}

double period_residual(const WeierstrassChart& chart, const GridSpec& spec, std::size_t i0,
                       std::size_t i1, std::size_t j0, std::size_t j1) {
    if (i1 <= i0 + 1 || j1 <= j0 + 1 || i1 >= spec.nx || j1 >= spec.ny) {
        throw ContractViolation("period loop must be a nondegenerate node rectangle");
    }
    const Eps eps = chart.eps;
    auto edge = [&](bool along_x, std::size_t fixed, std::size_t from, std::size_t to) {
        std::vector<PhiVec> samples;
        samples.reserve(to - from + 1);
        for (std::size_t k = from; k <= to; ++k) {
            const EpsScalar z = along_x ? spec.node(k, fixed, eps) : spec.node(fixed, k, eps);
            const auto v = phi_from_data(chart, z);
            samples.push_back({{v[0], v[1], v[2]}});
        }
        return line_integral(samples, along_x ? spec.hx : spec.hy, eps);
    };
    const EpsScalar u = imag_unit(eps);
    const PhiVec bottom = edge(true, j0, i0, i1);
    const PhiVec top = edge(true, j1, i0, i1);
    const PhiVec left = edge(false, i0, j0, j1);
    const PhiVec right = edge(false, i1, j0, j1);
    const PhiVec loop = bottom + u * right - top - u * left;
    const LVec3 period = two_re(loop);
    return euclid_norm(period);
}

double conformal_factor(const WeierstrassChart& chart, const EpsScalar& z) {
    const NodeStatus st = chart_node_status(chart, z);
    if (st != NodeStatus::ok) {
        throw SingularNode("conformal_factor at non-regular node z = " + to_string(z));
    }
    const double gg = squared_norm(chart.g(z));
    const double ff = squared_norm(chart.f(z));
    const double t = 1.0 - sign(chart.eps) * gg;
    return 0.25 * ff * t * t;
}

LVec3 gauss_map(const WeierstrassChart& chart, const EpsScalar& z) {
    if (chart_node_status(chart, z) == NodeStatus::singular) {
        throw SingularNode("gauss_map at singular node z = " + to_string(z));
    }
    return stereo_unproject(chart.g(z));
}

EpsScalar hopf_density(const WeierstrassChart& chart, const EpsScalar& z) {
    if (chart_node_status(chart, z) == NodeStatus::singular) {
        throw SingularNode("hopf_density at singular node z = " + to_string(z));
    }
    return -sign(chart.eps) * (chart.f(z) * chart.g_prime(z));
}

}  // namespace lw3
