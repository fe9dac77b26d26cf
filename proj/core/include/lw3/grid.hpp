#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lw3/eps_scalar.hpp"

namespace lw3 {

struct Rect {
    double x0 = 0.0, x1 = 0.0;
    double y0 = 0.0, y1 = 0.0;
};

/// Uniform rectangular node lattice. Node (i, j) sits at
/// (x0 + i hx, y0 + j hy), 0 <= i < nx, 0 <= j < ny.
struct GridSpec {
    double x0 = 0.0, y0 = 0.0;
    double hx = 1.0, hy = 1.0;
    std::size_t nx = 0, ny = 0;

    static GridSpec from_rect(const Rect& r, std::size_t nx, std::size_t ny);

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * hx; }
    double y(std::size_t j) const { return y0 + static_cast<double>(j) * hy; }
    std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
    std::size_t size() const { return nx * ny; }
    EpsScalar node(std::size_t i, std::size_t j, Eps eps) const { return {x(i), y(j), eps}; }
};

/// Sampled scalar field over a grid, with a validity mask (true = valid node).
struct GridField {
    GridSpec spec;
    Eps eps = Eps::spacelike;
    std::vector<EpsScalar> values;
    std::vector<std::uint8_t> mask;

    const EpsScalar& at(std::size_t i, std::size_t j) const { return values[spec.index(i, j)]; }
    bool valid(std::size_t i, std::size_t j) const { return mask[spec.index(i, j)] != 0; }
    std::size_t count_valid() const;
};

using ScalarFn = std::function<EpsScalar(const EpsScalar&)>;

/// Evaluate fn at every node. Nodes where fn throws or returns a non-finite
/// value are masked out.
GridField sample_field(const GridSpec& spec, Eps eps, const ScalarFn& fn);

/// Grid Wirtinger derivatives. Central differences in the interior,
/// 2nd-order one-sided stencils against mask/grid boundaries; nodes without
/// enough support are masked in the result.
GridField wirtinger_dz(const GridField& f);
GridField wirtinger_dzbar(const GridField& f);

/// max over computable valid nodes of |df/dzbar| (Euclidean magnitude).
/// A field is declared K-holomorphic at tolerance t when this is <= t.
/// Throws ContractViolation when fewer than a 3x3 block of valid nodes exists.
double wirtinger_residual(const GridField& f);

/// Real-valued field with a mask; used for lambda and curvature fields.
struct RealField {
    GridSpec spec;
    std::vector<double> values;
    std::vector<std::uint8_t> mask;

    double at(std::size_t i, std::size_t j) const { return values[spec.index(i, j)]; }
    bool valid(std::size_t i, std::size_t j) const { return mask[spec.index(i, j)] != 0; }
    std::size_t count_valid() const;
};

}  // namespace lw3
