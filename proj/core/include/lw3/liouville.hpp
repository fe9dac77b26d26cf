#pragma once

#include "lw3/grid.hpp"
#include "lw3/mobius.hpp"

namespace lw3 {

/// A developing map with its analytic derivative.
struct DevelopingMap {
    ScalarFn g;
    ScalarFn g_prime;
};

/// lambda = log( |1 - eps g gbar| / (2 sqrt(g' g'bar)) ) sampled over the
/// grid. Nodes violating g' g'bar > 0 or g gbar != eps are masked.
RealField lambda_from_g(const ScalarFn& g, const ScalarFn& g_prime, Eps eps,
                        const GridSpec& spec);

/// max over interior valid nodes of
/// | e^{-2 lambda} (lambda_xx + eps lambda_yy) + eps e^{-4 lambda} |
/// by central differences.
double liouville_residual(const RealField& lambda, Eps eps);

/// g~ = T_ab o g with the closed-form chain rule g~' = g' / (bbar g + abar)^2.
/// Nodes where the denominator is null are masked by evaluator failure.
DevelopingMap transform_developing_map(const DevelopingMap& dev, const MobiusParams& t);

}  // namespace lw3
