#include "lw3/gallery.hpp"

#include <cmath>

namespace lw3 {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double resolve_bonnet_b(const GalleryParams& p, bool timelike, double& a) {
    if (timelike) {
        // a^2 - b^2 = 1, a >= 1, b <= 0
        double b;
        if (p.a && p.b) {
            a = *p.a;
            b = *p.b;
            if (std::fabs(a * a - b * b - 1.0) > 1e-9) {
                throw ParamConstraintViolation("timelike_bonnet requires a^2 - b^2 = 1");
            }
        } else if (p.a) {
            a = *p.a;
            if (a < 1.0) throw ParamConstraintViolation("timelike_bonnet requires a >= 1");
            b = -std::sqrt(a * a - 1.0);
        } else if (p.b) {
            b = *p.b;
            a = std::sqrt(1.0 + b * b);
        } else {
            a = 2.0;
            b = -std::sqrt(3.0);
        }
        if (a < 1.0 || b > 0.0) {
            throw ParamConstraintViolation("timelike_bonnet requires a >= 1 and b <= 0");
        }
        return b;
    }
    // a^2 + b^2 = 1, 0 < a <= 1, 0 <= b < 1
    double b;
    if (p.a && p.b) {
        a = *p.a;
        b = *p.b;
        if (std::fabs(a * a + b * b - 1.0) > 1e-9) {
            throw ParamConstraintViolation("minkowski family requires a^2 + b^2 = 1");
        }
    } else if (p.a) {
        a = *p.a;
        if (a <= 0.0 || a > 1.0) {
            throw ParamConstraintViolation("minkowski family requires 0 < a <= 1");
        }
        b = std::sqrt(std::max(0.0, 1.0 - a * a));
    } else if (p.b) {
        b = *p.b;
        if (b < 0.0 || b >= 1.0) {
            throw ParamConstraintViolation("minkowski family requires 0 <= b < 1");
        }
        a = std::sqrt(1.0 - b * b);
    } else {
        a = 0.8;
        b = 0.6;
    }
    if (a <= 0.0 || a > 1.0 || b < 0.0 || b >= 1.0) {
        throw ParamConstraintViolation("minkowski family requires 0 < a <= 1 and 0 <= b < 1");
    }
    return b;
}

void reject_params(const GalleryParams& p, std::string_view name) {
    if (p.a || p.b) {
        throw ParamConstraintViolation(std::string(name) + " takes no parameters");
    }
}

GalleryEntry spacelike_enneper(const GalleryParams& p) {
    reject_params(p, "spacelike_enneper");
    GalleryEntry e;
    e.name = "spacelike_enneper";
    e.eps = Eps::spacelike;
    e.default_domain = {-0.45, 0.45, -0.45, 0.45};
    e.verify_window = {-0.1, 0.1, -0.1, 0.1};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [](const EpsScalar& z) { return z; };
    e.chart.g_prime = [](const EpsScalar& z) { return one(z.eps); };
    e.chart.f = [](const EpsScalar& z) { return real_scalar(-1.0, z.eps); };
    e.chart.f_prime = [](const EpsScalar& z) { return zero(z.eps); };
    e.closed_form = [](double x, double y) -> LVec3 {
        return {-0.5 * (x + x * x * x / 3.0 - y * y * x),
                0.5 * (y + y * y * y / 3.0 - x * x * y), 0.5 * (x * x - y * y)};
    };
    e.reference_lambda = [](double x, double y) {
        return std::log(std::fabs(1.0 - x * x - y * y) / 2.0);
    };
    return e;
}

GalleryEntry elliptic_catenoid(const GalleryParams& p) {
    reject_params(p, "elliptic_catenoid");
    GalleryEntry e;
    e.name = "elliptic_catenoid";
    e.eps = Eps::spacelike;
    e.default_domain = {0.8, 2.4, -1.2, 1.2};
    e.verify_window = {1.7, 1.9, -0.1, 0.1};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [](const EpsScalar& z) { return -exp(z); };
    e.chart.g_prime = [](const EpsScalar& z) { return -exp(z); };
    e.chart.f = [](const EpsScalar& z) { return exp(-z); };
    e.chart.f_prime = [](const EpsScalar& z) { return -exp(-z); };
    e.closed_form = [](double x, double y) -> LVec3 {
        return {std::sinh(x) * std::cos(y), std::sinh(x) * std::sin(y), x};
    };
    e.reference_lambda = [](double x, double) { return std::log(std::sinh(x)); };
    return e;
}

GalleryEntry minkowski_bonnet(const GalleryParams& p) {
    GalleryEntry e;
    e.name = "minkowski_bonnet";
    e.eps = Eps::spacelike;
    e.has_params = true;
    e.b = resolve_bonnet_b(p, false, e.a);
    const double a = e.a, b = e.b;
    const double x_min = std::asinh(b / a) + 0.35;
    const double x_center = std::asinh(2.0 / a);
    e.default_domain = {x_min, std::max(x_center + 0.35, x_min + 1.0), -1.0, 1.0};
    e.verify_window = {x_center - 0.1, x_center + 0.1, -0.1, 0.1};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [a, b](const EpsScalar& z) { return -a * exp(z) - real_scalar(b, z.eps); };
    e.chart.g_prime = [a](const EpsScalar& z) { return -a * exp(z); };
    e.chart.f = [a](const EpsScalar& z) { return exp(-z) / a; };
    e.chart.f_prime = [a](const EpsScalar& z) { return -1.0 / a * exp(-z); };
    e.closed_form = [a, b](double x, double y) -> LVec3 {
        const double emx = std::exp(-x);
        return {(-emx / a + a * std::cosh(x)) * std::cos(y) + b * x,
                a * std::sinh(x) * std::sin(y) + b * y, x - b * emx / a * std::cos(y)};
    };
    e.reference_lambda = [a, b](double x, double y) {
        return std::log(a * std::sinh(x) + b * std::cos(y));
    };
    return e;
}

GalleryEntry helicoid(const GalleryParams& p) {
    reject_params(p, "helicoid");
    GalleryEntry e;
    e.name = "helicoid";
    e.eps = Eps::spacelike;
    e.default_domain = {1.0, 3.0, -0.8, 0.8};
    e.verify_window = {2.0, 2.2, -0.1, 0.1};
    // Principal branch sqrt(i) = exp(i pi / 4), fixed once.
    const double c = std::sqrt(0.5);
    const EpsScalar w = scalar(c, c, Eps::spacelike);
    const EpsScalar w_conj = conj(w);
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [w](const EpsScalar& z) { return -exp(w * z); };
    e.chart.g_prime = [w](const EpsScalar& z) { return -(w * exp(w * z)); };
    e.chart.f = [w, w_conj](const EpsScalar& z) { return w_conj * exp(-(w * z)); };
    e.chart.f_prime = [w](const EpsScalar& z) { return -exp(-(w * z)); };
    e.closed_form = [](double x, double y) -> LVec3 {
        const double s = (x + y) / kSqrt2, d = (x - y) / kSqrt2;
        return {std::sin(s) * std::cosh(d), -std::cos(s) * std::cosh(d), s};
    };
    e.reference_lambda = [](double x, double y) {
        return std::log(std::sinh((x - y) / kSqrt2));
    };
    return e;
}

GalleryEntry minkowski_thomsen(const GalleryParams& p) {
    GalleryEntry e;
    e.name = "minkowski_thomsen";
    e.eps = Eps::spacelike;
    e.has_params = true;
    e.b = resolve_bonnet_b(p, false, e.a);
    const double a = e.a, b = e.b;
    const double d_min = kSqrt2 * std::asinh(b / a);  // exclusion: x - y = d_min
    const double d_center = kSqrt2 * std::asinh(2.0 / a);
    e.default_domain = {d_min + 0.7, std::max(d_center + 0.35, d_min + 2.3), -0.6, 0.6};
    e.verify_window = {d_center - 0.1, d_center + 0.1, -0.1, 0.1};
    const double c = std::sqrt(0.5);
    const EpsScalar w = scalar(c, c, Eps::spacelike);
    const EpsScalar w_conj = conj(w);
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [a, b, w](const EpsScalar& z) {
        return -(a * exp(w * z) + real_scalar(b, z.eps));
    };
    e.chart.g_prime = [a, w](const EpsScalar& z) { return -a * (w * exp(w * z)); };
    e.chart.f = [a, w, w_conj](const EpsScalar& z) { return (1.0 / a) * (w_conj * exp(-(w * z))); };
    e.chart.f_prime = [a, w](const EpsScalar& z) { return (-1.0 / a) * exp(-(w * z)); };
    e.closed_form = [a, b](double x, double y) -> LVec3 {
        const double s = (x + y) / kSqrt2, d = (x - y) / kSqrt2;
        const double emd = std::exp(-d);
        return {(emd / a + a * std::sinh(d)) * std::sin(s) + b * s,
                -a * std::cosh(d) * std::cos(s) + b * (-x + y) / kSqrt2,
                s + b * emd / a * std::sin(s)};
    };
    e.reference_lambda = [a, b](double x, double y) {
        const double s = (x + y) / kSqrt2, d = (x - y) / kSqrt2;
        return std::log(a * std::sinh(d) + b * std::cos(s));
    };
    return e;
}

GalleryEntry timelike_enneper(const GalleryParams& p) {
    reject_params(p, "timelike_enneper");
    GalleryEntry e;
    e.name = "timelike_enneper";
    e.eps = Eps::timelike;
    e.default_domain = {-0.7, 0.7, -0.7, 0.7};
    e.verify_window = {0.55, 0.75, -0.1, 0.1};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [](const EpsScalar& z) { return z; };
    e.chart.g_prime = [](const EpsScalar& z) { return one(z.eps); };
    e.chart.f = [](const EpsScalar& z) { return one(z.eps); };
    e.chart.f_prime = [](const EpsScalar& z) { return zero(z.eps); };
    e.closed_form = [](double x, double y) -> LVec3 {
        return {0.5 * (x * x + y * y), 0.5 * (x - x * x * x / 3.0 - y * y * x),
                0.5 * (y + y * y * y / 3.0 + x * x * y)};
    };
    e.reference_lambda = [](double x, double y) {
        return std::log(std::fabs(1.0 + x * x - y * y) / 2.0);
    };
    return e;
}

GalleryEntry hyperbolic_catenoid(const GalleryParams& p) {
    reject_params(p, "hyperbolic_catenoid");
    GalleryEntry e;
    e.name = "hyperbolic_catenoid";
    e.eps = Eps::timelike;
    e.default_domain = {-0.7, 0.7, -0.7, 0.7};
    e.verify_window = {-0.1, 0.1, -0.1, 0.1};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [](const EpsScalar& z) { return -exp(z); };
    e.chart.g_prime = [](const EpsScalar& z) { return -exp(z); };
    e.chart.f = [](const EpsScalar& z) { return -exp(-z); };
    e.chart.f_prime = [](const EpsScalar& z) { return exp(-z); };
    e.closed_form = [](double x, double y) -> LVec3 {
        return {x, std::cosh(x) * std::cosh(y), -std::cosh(x) * std::sinh(y)};
    };
    e.reference_lambda = [](double x, double) { return std::log(std::cosh(x)); };
    return e;
}

GalleryEntry timelike_bonnet(const GalleryParams& p) {
    GalleryEntry e;
    e.name = "timelike_bonnet";
    e.eps = Eps::timelike;
    e.has_params = true;
    e.b = resolve_bonnet_b(p, true, e.a);
    const double a = e.a, b = e.b;
    double y_half = 0.7;
    if (b < 0.0) {
        // a cosh(x) + b cosh(y) > 0 must hold on the whole domain
        y_half = std::min(0.7, 0.75 * std::acosh(a / -b));
    }
    e.default_domain = {-1.2, 1.2, -y_half, y_half};
    const double wy = std::min(0.1, 0.8 * y_half);
    e.verify_window = {0.9, 1.1, -wy, wy};
    e.chart.eps = e.eps;
    e.chart.domain = e.default_domain;
    e.chart.g = [a, b](const EpsScalar& z) { return -a * exp(z) - real_scalar(b, z.eps); };
    e.chart.g_prime = [a](const EpsScalar& z) { return -a * exp(z); };
    e.chart.f = [a](const EpsScalar& z) { return (-1.0 / a) * exp(-z); };
    e.chart.f_prime = [a](const EpsScalar& z) { return (1.0 / a) * exp(-z); };
    e.closed_form = [a, b](double x, double y) -> LVec3 {
        const double emx = std::exp(-x);
        return {x - b * emx / a * std::cosh(y),
                (emx / a + a * std::sinh(x)) * std::cosh(y) + b * x,
                -a * std::cosh(x) * std::sinh(y) - b * y};
    };
    e.reference_lambda = [a, b](double x, double y) {
        return std::log(a * std::cosh(x) + b * std::cosh(y));
    };
    return e;
}

Rect inscribed_rotated_rect(const Rect& target) {
    // Largest axis-aligned square S around w_conj * center(target) whose
    // image under z -> exp(i pi/4) z fits inside target.
    const double cx = 0.5 * (target.x0 + target.x1);
    const double cy = 0.5 * (target.y0 + target.y1);
    const double hwx = 0.5 * (target.x1 - target.x0);
    const double hwy = 0.5 * (target.y1 - target.y0);
    const double px = (cx + cy) / kSqrt2;   // conj(w) * c
    const double py = (cy - cx) / kSqrt2;
    const double s = std::min(hwx, hwy) / kSqrt2;
    return {px - s, px + s, py - s, py + s};
}

}  // namespace

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names = {
        "spacelike_enneper", "elliptic_catenoid", "minkowski_bonnet", "helicoid",
        "minkowski_thomsen", "timelike_enneper",  "hyperbolic_catenoid", "timelike_bonnet",
    };
    return names;
}

std::string param_constraints(std::string_view name) {
    if (name == "minkowski_bonnet" || name == "minkowski_thomsen") {
        return "a^2 + b^2 = 1, 0 < a <= 1, 0 <= b < 1 (default a=0.8, b=0.6)";
    }
    if (name == "timelike_bonnet") {
        return "a^2 - b^2 = 1, a >= 1, b <= 0 (default a=2, b=-sqrt(3))";
    }
    return "none";
}

GalleryEntry get_example(std::string_view name, const GalleryParams& params) {
    if (name == "spacelike_enneper") return spacelike_enneper(params);
    if (name == "elliptic_catenoid") return elliptic_catenoid(params);
    if (name == "minkowski_bonnet") return minkowski_bonnet(params);
    if (name == "helicoid") return helicoid(params);
    if (name == "minkowski_thomsen") return minkowski_thomsen(params);
    if (name == "timelike_enneper") return timelike_enneper(params);
    if (name == "hyperbolic_catenoid") return hyperbolic_catenoid(params);
    if (name == "timelike_bonnet") return timelike_bonnet(params);
    std::string known;
    for (const auto& n : gallery_names()) known += " " + n;
    throw UnknownExample("unknown example '" + std::string(name) + "'; known:" + known);
}

GalleryEntry conjugate_surface(const GalleryEntry& entry) {
    GalleryEntry e;
    e.eps = entry.eps;
    e.has_params = entry.has_params;
    e.a = entry.a;
    e.b = entry.b;

    if (entry.eps == Eps::spacelike) {
        // Quarter-turn of the Liouville parameter: z* = exp(-i pi/4) z, so the
        // conjugate chart evaluates the original data at sqrt(i) z*.
        e.name = entry.name + "_conjugate";
        const double c = std::sqrt(0.5);
        const EpsScalar w = scalar(c, c, Eps::spacelike);
        const EpsScalar w_conj = conj(w);
        const WeierstrassChart base = entry.chart;
        e.chart.eps = entry.eps;
        e.chart.delta_g = base.delta_g;
        e.chart.g = [base, w](const EpsScalar& z) { return base.g(w * z); };
        e.chart.g_prime = [base, w](const EpsScalar& z) { return w * base.g_prime(w * z); };
        e.chart.f = [base, w, w_conj](const EpsScalar& z) { return w_conj * base.f(w * z); };
        if (base.f_prime) {
            e.chart.f_prime = [base, w](const EpsScalar& z) { return base.f_prime(w * z); };
        }
        if (base.singular_predicate) {
            auto pred = base.singular_predicate;
            e.chart.singular_predicate = [pred, w](const EpsScalar& z) { return pred(w * z); };
        }
        e.default_domain = inscribed_rotated_rect(entry.default_domain);
        e.verify_window = inscribed_rotated_rect(entry.verify_window);
        e.chart.domain = e.default_domain;
        if (entry.reference_lambda) {
            auto lam = entry.reference_lambda;
            e.reference_lambda = [lam](double x, double y) {
                return lam((x - y) / kSqrt2, (x + y) / kSqrt2);
            };
        }
        return e;
    }

    // Lorentz-conjugate: psi*_u = psi_v, psi*_v = psi_u, realized on the data
    // side as (f, g) -> (tau f, g), i.e. phi* = tau phi. Its Weingarten map
    // is not diagonalizable, so the curvature machinery does not apply.
    e.name = entry.name + "_lorentz_conjugate";
    const WeierstrassChart base = entry.chart;
    const EpsScalar tau = imag_unit(Eps::timelike);
    e.chart = base;
    e.chart.enforce_regularity = false;
    e.chart.f = [base, tau](const EpsScalar& z) { return tau * base.f(z); };
    if (base.f_prime) {
        e.chart.f_prime = [base, tau](const EpsScalar& z) { return tau * base.f_prime(z); };
    }
    e.default_domain = entry.default_domain;
    e.verify_window = entry.verify_window;
    e.chart.domain = e.default_domain;
    e.notes = "Weingarten not diagonalizable, curvature verification skipped";
    e.curvature_verified = false;
    return e;
}

}  // namespace lw3
