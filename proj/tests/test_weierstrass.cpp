#include <cmath>
#include <random>

#include "doctest.h"
#include "lw3/gallery.hpp"
#include "lw3/weierstrass.hpp"

using namespace lw3;

namespace {

WeierstrassChart enneper_chart(Eps eps, const Rect& domain) {
    WeierstrassChart c;
    c.eps = eps;
    c.domain = domain;
    c.g = [](const EpsScalar& z) { return z; };
    c.g_prime = [](const EpsScalar& z) { return one(z.eps); };
    const double f0 = eps == Eps::spacelike ? -1.0 : 1.0;
    c.f = [f0](const EpsScalar& z) { return real_scalar(f0, z.eps); };
    c.f_prime = [](const EpsScalar& z) { return zero(z.eps); };
    return c;
}

LVec3 enneper_psi(double x, double y) {
    return {-0.5 * (x + x * x * x / 3.0 - y * y * x), 0.5 * (y + y * y * y / 3.0 - x * x * y),
            0.5 * (x * x - y * y)};
}

}  // namespace

TEST_CASE("phi_from_data at the reference points") {
    const auto cs = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    const auto phi_s = phi_from_data(cs, zero(Eps::spacelike));
    CHECK(phi_s[0].re == doctest::Approx(-0.25));
    CHECK(phi_s[0].im == doctest::Approx(0.0));
    CHECK(phi_s[1].re == doctest::Approx(0.0));
    CHECK(phi_s[1].im == doctest::Approx(-0.25));
    CHECK(mag(phi_s[2]) == doctest::Approx(0.0));

    const auto ct = enneper_chart(Eps::timelike, {-1, 1, -1, 1});
    const auto phi_t = phi_from_data(ct, zero(Eps::timelike));
    CHECK(mag(phi_t[0]) == doctest::Approx(0.0));
    CHECK(phi_t[1].re == doctest::Approx(0.25));
    CHECK(phi_t[1].im == doctest::Approx(0.0));
    CHECK(phi_t[2].re == doctest::Approx(0.0));
    CHECK(phi_t[2].im == doctest::Approx(0.25));
}

TEST_CASE("isotropy holds identically") {
    std::mt19937_64 rng(59u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const char* name : {"elliptic_catenoid", "minkowski_bonnet", "timelike_bonnet",
                             "helicoid", "minkowski_thomsen"}) {
        const GalleryEntry e = get_example(name);
        for (int k = 0; k < 200; ++k) {
            const double x =
                e.default_domain.x0 + u(rng) * (e.default_domain.x1 - e.default_domain.x0);
            const double y =
                e.default_domain.y0 + u(rng) * (e.default_domain.y1 - e.default_domain.y0);
            const EpsScalar z = scalar(x, y, e.eps);
            if (chart_node_status(e.chart, z) == NodeStatus::singular) continue;
            const auto phi = phi_from_data(e.chart, z);
            const EpsScalar iso = phi[0] * phi[0] + phi[1] * phi[1] - phi[2] * phi[2];
            double scale = 0.0;
            for (const auto& p : phi) scale = std::max(scale, mag(p) * mag(p));
            CHECK(mag(iso) <= 1e-12 * (1.0 + scale));
        }
    }
}

TEST_CASE("data_from_phi round trip") {
    const Rect r{-1, 1, -1, 1};
    const GridSpec spec = GridSpec::from_rect(r, 21, 21);

    for (Eps eps : {Eps::spacelike, Eps::timelike}) {
        const auto chart = enneper_chart(eps, r);
        const auto phi = sample_phi(chart, spec);
        const auto [f_field, g_field] = data_from_phi(phi, eps);
        double worst_f = 0.0, worst_g = 0.0;
        std::size_t n = 0;
        for (std::size_t j = 0; j < spec.ny; ++j) {
            for (std::size_t i = 0; i < spec.nx; ++i) {
                if (!g_field.valid(i, j)) continue;
                const EpsScalar z = spec.node(i, j, eps);
                worst_f = std::max(worst_f, mag(f_field.at(i, j) - chart.f(z)));
                worst_g = std::max(worst_g, mag(g_field.at(i, j) - chart.g(z)));
                ++n;
            }
        }
        CHECK(n > 300);
        CHECK(worst_f <= 1e-13);
        CHECK(worst_g <= 1e-12);
    }

    // degenerate phi masks everywhere
    std::array<GridField, 3> zero_phi;
    for (auto& f : zero_phi) {
        f = sample_field(spec, Eps::spacelike, [](const EpsScalar& z) { return zero(z.eps); });
    }
    const auto [fz, gz] = data_from_phi(zero_phi, Eps::spacelike);
    CHECK(gz.count_valid() == 0);
}

TEST_CASE("from_developing_map produces the printed f") {
    // g = z -> f = -1 (spacelike)
    const auto c1 = from_developing_map([](const EpsScalar& z) { return z; },
                                        [](const EpsScalar& z) { return one(z.eps); },
                                        Eps::spacelike, {-1, 1, -1, 1});
    CHECK(mag(c1.f(scalar(0.3, 0.1, Eps::spacelike)) - real_scalar(-1.0, Eps::spacelike)) <=
          1e-15);

    // g = -e^z -> f = e^{-z} (spacelike catenoid)
    const auto c2 = from_developing_map([](const EpsScalar& z) { return -exp(z); },
                                        [](const EpsScalar& z) { return -exp(z); },
                                        Eps::spacelike, {0.1, 2, -1, 1});
    const EpsScalar z2 = scalar(0.7, -0.4, Eps::spacelike);
    CHECK(mag(c2.f(z2) - exp(-z2)) <= 1e-14);

    // g = -exp(z) -> f = -exp(-z) (timelike catenoid)
    const auto c3 = from_developing_map([](const EpsScalar& z) { return -exp(z); },
                                        [](const EpsScalar& z) { return -exp(z); },
                                        Eps::timelike, {-1, 1, -1, 1});
    const EpsScalar z3 = scalar(0.2, 0.5, Eps::timelike);
    CHECK(mag(c3.f(z3) + exp(-z3)) <= 1e-14);

    // the Hopf density of a normalized chart is 1
    CHECK(mag(hopf_density(c2, z2) - one(Eps::spacelike)) <= 1e-14);
    CHECK(mag(hopf_density(c3, z3) - one(Eps::timelike)) <= 1e-14);
}

TEST_CASE("integrate_immersion matches the Enneper closed form") {
    const auto chart = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 201, 201);
    const SurfaceGrid s = integrate_immersion(chart, spec, 100, 100);

    // base point
    CHECK(euclid_norm(s.at(100, 100)) == doctest::Approx(0.0));

    // psi(1, 0) = (-2/3, 0, 1/2)
    const LVec3 corner = s.at(200, 100);
    CHECK(corner.x1 == doctest::Approx(-2.0 / 3.0).epsilon(1e-8));
    CHECK(corner.x2 == doctest::Approx(0.0));
    CHECK(corner.x3 == doctest::Approx(0.5).epsilon(1e-8));

    double worst = 0.0;
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            if (!s.defined(i, j)) continue;
            worst = std::max(worst, max_abs(s.at(i, j) - enneper_psi(spec.x(i), spec.y(j))));
        }
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("integrate_immersion matches the catenoid closed form with offset") {
    const GalleryEntry e = get_example("elliptic_catenoid");
    const GridSpec spec = GridSpec::from_rect({0.5, 1.5, -1.0, 1.0}, 101, 101);
    const SurfaceGrid s = integrate_immersion(e.chart, spec, scalar(1.0, 0.0, e.eps));
    const LVec3 offset = e.closed_form(1.0, 0.0);
    double worst = 0.0;
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            const LVec3 ref = e.closed_form(spec.x(i), spec.y(j)) - offset;
            worst = std::max(worst, max_abs(s.at(i, j) - ref));
        }
    }
    CHECK(worst <= 1e-7);
}

TEST_CASE("integration is blocked by singular nodes on the path") {
    auto chart = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    chart.singular_predicate = [](const EpsScalar& z) { return std::fabs(z.re - 0.5) < 0.04; };
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 21, 21);
    CHECK_THROWS_AS(void(integrate_immersion(chart, spec, 10, 10)), PathBlocked);
}

TEST_CASE("period residuals") {
    const auto chart = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    const GridSpec spec = GridSpec::from_rect({-1, 1, -1, 1}, 81, 81);
    // loop [-0.5, 0.5]^2: nodes 20..60
    CHECK(period_residual(chart, spec, 20, 60, 20, 60) <= 1e-10);

    const GalleryEntry cat = get_example("elliptic_catenoid");
    const GridSpec cspec = GridSpec::from_rect({0.9, 2.1, -0.9, 0.9}, 121, 181);
    CHECK(period_residual(cat.chart, cspec, 10, 110, 10, 170) <= 1e-9);

    // conj-corrupted chart over an off-center loop has an O(1) real period
    WeierstrassChart bad = chart;
    bad.g = [](const EpsScalar& z) { return conj(z); };
    const GridSpec bspec = GridSpec::from_rect({0.1, 0.7, 0.2, 0.8}, 41, 41);
    CHECK(period_residual(bad, bspec, 0, 40, 0, 40) >= 1e-3);
}

TEST_CASE("integration refuses non-exact loops") {
    WeierstrassChart bad = enneper_chart(Eps::spacelike, {0, 1, 0, 1});
    bad.g = [](const EpsScalar& z) { return conj(z); };
    const GridSpec spec = GridSpec::from_rect({0.1, 0.9, 0.1, 0.9}, 21, 21);
    CHECK_THROWS_AS(void(integrate_immersion(bad, spec, 10, 10)), PeriodDetected);
}

TEST_CASE("conformal factor") {
    const auto cs = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    CHECK(conformal_factor(cs, zero(Eps::spacelike)) == doctest::Approx(0.25));
    CHECK_THROWS_AS(void(conformal_factor(cs, scalar(1.0, 0.0, Eps::spacelike))), SingularNode);

    const GalleryEntry cat = get_example("elliptic_catenoid");
    for (double x : {0.9, 1.4, 2.0}) {
        CHECK(conformal_factor(cat.chart, scalar(x, 0.3, cat.eps)) ==
              doctest::Approx(std::sinh(x) * std::sinh(x)).epsilon(1e-12));
    }

    const GalleryEntry hyp = get_example("hyperbolic_catenoid");
    for (double x : {-0.5, 0.0, 0.6}) {
        CHECK(conformal_factor(hyp.chart, scalar(x, 0.4, hyp.eps)) ==
              doctest::Approx(std::cosh(x) * std::cosh(x)).epsilon(1e-12));
    }
}

TEST_CASE("gauss map identities") {
    const auto cs = enneper_chart(Eps::spacelike, {-1, 1, -1, 1});
    const LVec3 n0 = gauss_map(cs, zero(Eps::spacelike));
    CHECK(euclid_norm(n0 - LVec3{0, 0, -1}) <= 1e-15);

    const auto ct = enneper_chart(Eps::timelike, {-1, 1, -1, 1});
    const LVec3 n1 = gauss_map(ct, zero(Eps::timelike));
    CHECK(euclid_norm(n1 - LVec3{1, 0, 0}) <= 1e-15);

    std::mt19937_64 rng(61u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& name : gallery_names()) {
        const GalleryEntry e = get_example(name);
        for (int k = 0; k < 50; ++k) {
            const double x =
                e.verify_window.x0 + u(rng) * (e.verify_window.x1 - e.verify_window.x0);
            const double y =
                e.verify_window.y0 + u(rng) * (e.verify_window.y1 - e.verify_window.y0);
            const EpsScalar z = scalar(x, y, e.eps);
            const LVec3 n = gauss_map(e.chart, z);
            CHECK(inner(n, n) == doctest::Approx(-sign(e.eps)).epsilon(1e-12));
            CHECK(mag(stereo_project(n, e.eps) - e.chart.g(z)) <= 1e-12);
        }
    }
}

TEST_CASE("hopf density of a simple pole with double-zero density stays finite") {
    // g = 1/z with f = -eps z^2: alpha = -eps f g' = -1 identically
    for (Eps eps : {Eps::spacelike, Eps::timelike}) {
        WeierstrassChart c;
        c.eps = eps;
        c.domain = {-1, 1, -1, 1};
        c.g = [](const EpsScalar& z) { return inverse(z); };
        c.g_prime = [](const EpsScalar& z) { return -inverse(z * z); };
        const double e = sign(eps);
        c.f = [e](const EpsScalar& z) { return -e * (z * z); };
        for (double t : {0.02, 0.1, 0.3}) {
            const EpsScalar z = scalar(t, t / 3.0, eps);
            const EpsScalar alpha = hopf_density(c, z);
            CHECK(mag(alpha - real_scalar(-1.0, eps)) <= 1e-10);
        }
    }
}
