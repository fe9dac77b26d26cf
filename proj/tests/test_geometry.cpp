#include <cmath>

#include "doctest.h"
#include "lw3/gallery.hpp"
#include "lw3/geometry.hpp"
#include "lw3/liouville.hpp"

using namespace lw3;

namespace {

SurfaceGrid integrated_window(const GalleryEntry& e, std::size_t n = 201) {
    const GridSpec spec = GridSpec::from_rect(e.verify_window, n, n);
    return integrate_immersion(e.chart, spec, spec.nx / 2, spec.ny / 2);
}

}  // namespace

TEST_CASE("flat plane") {
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 21, 21);
    const SurfaceGrid s = surface_from_closed_form(
        [](double x, double y) -> LVec3 { return {x, y, 0.0}; }, spec, Eps::spacelike);
    ShapeReport rep = fundamental_forms(s);
    curvatures(rep);
    const std::size_t k = spec.index(10, 10);
    CHECK(rep.E[k] == doctest::Approx(1.0));
    CHECK(rep.G[k] == doctest::Approx(1.0));
    CHECK(rep.F[k] == doctest::Approx(0.0));
    CHECK(rep.l[k] == doctest::Approx(0.0));
    CHECK(rep.m[k] == doctest::Approx(0.0));
    CHECK(rep.n[k] == doctest::Approx(0.0));
    CHECK(std::fabs(inner(rep.N[k], rep.N[k]) + 1.0) <= 1e-12);
    CHECK(rep.H[k] == doctest::Approx(0.0));
    CHECK(rep.K[k] == doctest::Approx(0.0));
    CHECK(rep.lambda_valid[k] == 0);  // H^2 + eps K = 0: lambda undefined
}

TEST_CASE("catenoid first form and curvature identities") {
    const GalleryEntry e = get_example("elliptic_catenoid");
    const SurfaceGrid s = integrated_window(e);
    ShapeReport rep = fundamental_forms(s, &e.chart);
    curvatures(rep, true);

    double worst_E = 0.0, worst_K = 0.0;
    for (std::size_t j = 0; j < rep.spec.ny; ++j) {
        for (std::size_t i = 0; i < rep.spec.nx; ++i) {
            const std::size_t k = rep.spec.index(i, j);
            if (!rep.valid[k]) continue;
            const double sh = std::sinh(rep.spec.x(i));
            worst_E = std::max(worst_E, std::fabs(rep.E[k] - sh * sh));
            // K = eps e^{-4 lambda} with lambda = log sinh x
            worst_K = std::max(worst_K, std::fabs(rep.K[k] * sh * sh * sh * sh - 1.0));
        }
    }
    CHECK(worst_E <= 1e-5);
    CHECK(rep.max_abs_F <= 1e-6);
    CHECK(worst_K <= 1e-4);
    CHECK(rep.max_abs_H <= 5e-5);

    // sign(E G - F^2) = eps
    for (std::size_t k = 0; k < rep.spec.size(); ++k) {
        if (!rep.valid[k]) continue;
        CHECK(rep.E[k] * rep.G[k] - rep.F[k] * rep.F[k] > 0.0);
    }
}

TEST_CASE("timelike enneper conformality signs") {
    const GalleryEntry e = get_example("timelike_enneper");
    const SurfaceGrid s = integrated_window(e);
    ShapeReport rep = fundamental_forms(s, &e.chart);
    double worst = 0.0;
    for (std::size_t j = 0; j < rep.spec.ny; ++j) {
        for (std::size_t i = 0; i < rep.spec.nx; ++i) {
            const std::size_t k = rep.spec.index(i, j);
            if (!rep.valid[k]) continue;
            const double x = rep.spec.x(i), y = rep.spec.y(j);
            const double ref = (1.0 + x * x - y * y) / 2.0;
            worst = std::max(worst, std::fabs(rep.E[k] - ref * ref));
            CHECK(rep.G[k] < 0.0);  // timelike y-direction
            CHECK(rep.E[k] * rep.G[k] - rep.F[k] * rep.F[k] < 0.0);  // sign(EG - F^2) = eps
        }
    }
    CHECK(worst <= 1e-5);
    CHECK(rep.max_abs_E_minus_epsG <= 1e-6 * rep.max_E);
}

TEST_CASE("hyperbolic catenoid curvature identity") {
    const GalleryEntry e = get_example("hyperbolic_catenoid");
    const SurfaceGrid s = integrated_window(e);
    ShapeReport rep = fundamental_forms(s, &e.chart);
    curvatures(rep, true);
    double worst = 0.0;
    for (std::size_t j = 0; j < rep.spec.ny; ++j) {
        for (std::size_t i = 0; i < rep.spec.nx; ++i) {
            const std::size_t k = rep.spec.index(i, j);
            if (!rep.valid[k]) continue;
            const double ch = std::cosh(rep.spec.x(i));
            // eps K = e^{-4 lambda} with lambda = log cosh x, eps = -1
            worst = std::max(worst, std::fabs(-rep.K[k] * ch * ch * ch * ch - 1.0));
        }
    }
    CHECK(worst <= 1e-4);
    CHECK(rep.max_abs_H <= 5e-5);
}

TEST_CASE("liouville normal form of the second fundamental form") {
    for (const char* name : {"elliptic_catenoid", "minkowski_bonnet", "timelike_bonnet",
                             "hyperbolic_catenoid"}) {
        const GalleryEntry e = get_example(name);
        const SurfaceGrid s = integrated_window(e, 101);
        ShapeReport rep = fundamental_forms(s, &e.chart);
        const double eps_val = sign(e.eps);
        double worst_l = 0.0, worst_m = 0.0, worst_n = 0.0;
        for (std::size_t k = 0; k < rep.spec.size(); ++k) {
            if (!rep.valid[k]) continue;
            worst_l = std::max(worst_l, std::fabs(rep.l[k] - 1.0));
            worst_m = std::max(worst_m, std::fabs(rep.m[k]));
            worst_n = std::max(worst_n, std::fabs(rep.n[k] + eps_val));
        }
        CHECK(worst_l <= 1e-4);
        CHECK(worst_m <= 1e-4);
        CHECK(worst_n <= 1e-4);
    }
}

TEST_CASE("gauss equation residual") {
    const GalleryEntry e = get_example("elliptic_catenoid");
    const SurfaceGrid s = integrated_window(e);
    ShapeReport rep = fundamental_forms(s, &e.chart);
    curvatures(rep, true);
    CHECK(gauss_equation_residual(rep) <= 1e-3);
}

TEST_CASE("hopf modulus squared equals E^2 (H^2 + eps K)") {
    for (const char* name : {"elliptic_catenoid", "timelike_enneper", "helicoid"}) {
        const GalleryEntry e = get_example(name);
        const SurfaceGrid s = integrated_window(e, 101);
        ShapeReport rep = fundamental_forms(s, &e.chart);
        curvatures(rep, false);
        const double eps_val = sign(e.eps);
        double worst = 0.0;
        for (std::size_t j = 0; j < rep.spec.ny; ++j) {
            for (std::size_t i = 0; i < rep.spec.nx; ++i) {
                const std::size_t k = rep.spec.index(i, j);
                if (!rep.valid[k]) continue;
                const EpsScalar alpha =
                    hopf_density(e.chart, rep.spec.node(i, j, e.eps));
                const double a2 = squared_norm(alpha);
                const double rhs = rep.E[k] * rep.E[k] *
                                   (rep.H[k] * rep.H[k] + eps_val * rep.K[k]);
                worst = std::max(worst, std::fabs(rhs - a2) / std::fabs(a2));
            }
        }
        CHECK(worst <= 1e-4);
    }
}

TEST_CASE("lambda from curvature matches the chart conformal factor") {
    const GalleryEntry e = get_example("minkowski_bonnet");
    const SurfaceGrid s = integrated_window(e, 201);
    ShapeReport rep = fundamental_forms(s, &e.chart);
    curvatures(rep, true);
    double worst = 0.0;
    for (std::size_t j = 0; j < rep.spec.ny; ++j) {
        for (std::size_t i = 0; i < rep.spec.nx; ++i) {
            const std::size_t k = rep.spec.index(i, j);
            if (!rep.lambda_valid[k]) continue;
            const double ref = e.reference_lambda(rep.spec.x(i), rep.spec.y(j));
            worst = std::max(worst, std::fabs(rep.lambda[k] - ref));
        }
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("induced metric of the integrated surface matches the chart conformal factor") {
    // (E + eps G)/2 = 2 <psi_z, psi_zbar> = e^{2 lambda} from the data
    for (const char* name : {"elliptic_catenoid", "hyperbolic_catenoid", "helicoid"}) {
        CAPTURE(name);
        const GalleryEntry e = get_example(name);
        const SurfaceGrid s = integrated_window(e);
        const ShapeReport rep = fundamental_forms(s, &e.chart);
        const double eps_val = sign(e.eps);
        double worst = 0.0;
        for (std::size_t j = 0; j < rep.spec.ny; ++j) {
            for (std::size_t i = 0; i < rep.spec.nx; ++i) {
                const std::size_t k = rep.spec.index(i, j);
                if (!rep.valid[k]) continue;
                const double metric = 0.5 * (rep.E[k] + eps_val * rep.G[k]);
                const double factor =
                    conformal_factor(e.chart, rep.spec.node(i, j, e.eps));
                worst = std::max(worst, std::fabs(metric - factor));
            }
        }
        CHECK(worst <= 1e-5);
    }
}

TEST_CASE("metric degeneracy is reported") {
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 11, 11);
    // rank-1 map: psi_y = 0 everywhere
    const SurfaceGrid s = surface_from_closed_form(
        [](double x, double) -> LVec3 { return {x, 0.0, 0.0}; }, spec, Eps::spacelike);
    CHECK_THROWS_AS(void(fundamental_forms(s)), DegenerateMetric);
}

TEST_CASE("small grids are rejected") {
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 4, 4);
    const SurfaceGrid s = surface_from_closed_form(
        [](double x, double y) -> LVec3 { return {x, y, 0.0}; }, spec, Eps::spacelike);
    CHECK_THROWS_AS(void(fundamental_forms(s)), ContractViolation);
}
