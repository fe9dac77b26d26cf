#include "lw3/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lw3 {

RealField lambda_from_g(const ScalarFn& g, const ScalarFn& g_prime, Eps eps,
                        const GridSpec& spec) {
    RealField out;
    out.spec = spec;
    out.values.assign(spec.size(), std::numeric_limits<double>::quiet_NaN());
    out.mask.assign(spec.size(), 0);
    const double e = sign(eps);
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const EpsScalar z = spec.node(i, j, eps);
            try {
                const EpsScalar gv = g(z);
                const EpsScalar gp = g_prime(z);
                if (!finite(gv) || !finite(gp)) continue;
                // g' g'bar > 0 guarantees a real radicand; no complex sqrt needed.
                const double q = squared_norm(gp);
                const double band = 1.0 - e * squared_norm(gv);
                if (q <= 1e-12 * (1.0 + mag(gp) * mag(gp))) continue;
                if (std::fabs(band) <= 1e-12 * (1.0 + std::fabs(squared_norm(gv)))) continue;
                const std::size_t k = spec.index(i, j);
                out.values[k] = std::log(std::fabs(band)) - std::log(2.0 * std::sqrt(q));
                out.mask[k] = 1;
            } catch (const Error&) {
                // node stays masked
            }
        }
    }
    return out;
}

double liouville_residual(const RealField& lambda, Eps eps) {
    const GridSpec& spec = lambda.spec;
    if (spec.nx < 3 || spec.ny < 3) {
        throw ContractViolation("liouville_residual needs a grid of at least 3x3 nodes");
    }
    const double e = sign(eps);
    double worst = 0.0;
    bool any = false;
    for (std::size_t j = 1; j + 1 < spec.ny; ++j) {
        for (std::size_t i = 1; i + 1 < spec.nx; ++i) {
            if (!lambda.valid(i, j) || !lambda.valid(i - 1, j) || !lambda.valid(i + 1, j) ||
                !lambda.valid(i, j - 1) || !lambda.valid(i, j + 1)) {
                continue;
            }
            const double c = lambda.at(i, j);
            const double lxx =
                (lambda.at(i + 1, j) - 2.0 * c + lambda.at(i - 1, j)) / (spec.hx * spec.hx);
            const double lyy =
                (lambda.at(i, j + 1) - 2.0 * c + lambda.at(i, j - 1)) / (spec.hy * spec.hy);
            const double res = std::exp(-2.0 * c) * (lxx + e * lyy) + e * std::exp(-4.0 * c);
            worst = std::max(worst, std::fabs(res));
            any = true;
        }
    }
    if (!any) {
        throw ContractViolation("liouville_residual: no interior node with a valid stencil");
    }
    return worst;
}

DevelopingMap transform_developing_map(const DevelopingMap& dev, const MobiusParams& t) {
    const ScalarFn g = dev.g;
    const ScalarFn gp = dev.g_prime;
    const MobiusParams tt = t;
    DevelopingMap out;
    out.g = [g, tt](const EpsScalar& z) { return apply(tt, g(z)); };
    out.g_prime = [g, gp, tt](const EpsScalar& z) {
        const EpsScalar den = conj(tt.b) * g(z) + conj(tt.a);
        return gp(z) * inverse(den * den);
    };
    return out;
}

}  // namespace lw3
