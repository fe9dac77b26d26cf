#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lw3/weierstrass.hpp"

namespace lw3 {

struct GalleryParams {
    std::optional<double> a;
    std::optional<double> b;
};

/// A named example surface: Weierstrass chart, reference closed form and
/// lambda where available, and the domains used for meshes and verification.
struct GalleryEntry {
    std::string name;
    Eps eps = Eps::spacelike;
    bool has_params = false;
    double a = 0.0, b = 0.0;
    WeierstrassChart chart;
    std::function<LVec3(double, double)> closed_form;      // may be empty
    std::function<double(double, double)> reference_lambda;  // may be empty
    Rect default_domain;
    /// 0.2 x 0.2 window where curvature thresholds are calibrated at h = 1e-3.
    Rect verify_window;
    std::string notes;
    bool curvature_verified = true;
};

/// The family names accepted by get_example, in listing order.
const std::vector<std::string>& gallery_names();

/// Parameter constraint description, for the CLI listing.
std::string param_constraints(std::string_view name);

/// Build a gallery entry. Parameterized families resolve a missing b from
/// their constraint (a^2 + b^2 = 1 resp. a^2 - b^2 = 1) and validate ranges.
GalleryEntry get_example(std::string_view name, const GalleryParams& params = {});

/// Spacelike entries: the quarter-turn-parameter conjugate (g*(z) = g(sqrt(i) z)).
/// Timelike entries: the Lorentz-conjugate (f, g) -> (tau f, g), whose
/// Weingarten map is not diagonalizable; curvature verification is skipped.
GalleryEntry conjugate_surface(const GalleryEntry& entry);

}  // namespace lw3
