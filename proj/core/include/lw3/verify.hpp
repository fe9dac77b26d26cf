#pragma once

#include <iosfwd>

#include "lw3/gallery.hpp"
#include "lw3/geometry.hpp"
#include "lw3/liouville.hpp"

namespace lw3 {

/// Pass thresholds for the verification report. Residuals that scale with
/// the grid step are calibrated at h = 1e-3 with 2nd-order stencils.
struct VerifyThresholds {
    double isotropy = 1e-12;              // max |phi1^2 + phi2^2 - phi3^2|
    double wirtinger = 1e-5;              // max |d phi_j / d zbar|
    double period = 1e-6;                 // || 2 Re oint phi dz ||
    double hopf_normal = 1e-13;           // max |alpha - 1| (Liouville-normalized data)
    double closed_form = 1e-6;            // sup |psi_integrated - psi_printed|
    double minimality = 5e-5;             // max |H|
    double conformality_rel = 1e-6;       // max|F|, max|E - eps G| vs max E
    double liouville = 1e-5;              // Liouville PDE residual of lambda(g)
    double gauss_norm = 1e-9;             // max |<N,N> + eps|
    double gauss_proj = 1e-12;            // max |pi(N) - g|
};

struct VerifyChecks {
    bool isotropy = false;
    bool wirtinger = false;
    bool period = false;
    bool hopf = false;
    bool closed_form = false;
    bool minimality = false;
    bool conformality = false;
    bool liouville = false;
    bool gauss = false;
};

struct VerifyReport {
    std::string example;
    Eps eps = Eps::spacelike;
    GridSpec grid;
    std::size_t nodes_total = 0;
    std::size_t nodes_valid = 0;

    double isotropy = 0.0;
    double wirtinger = 0.0;
    double period = 0.0;
    double hopf_dev = 0.0;
    double closed_form_dev = 0.0;  // NaN when the entry has no closed form
    double max_abs_H = 0.0;
    double max_abs_F = 0.0;
    double max_abs_E_minus_epsG = 0.0;
    double max_E = 0.0;
    double liouville = 0.0;
    double gauss_norm_dev = 0.0;
    double gauss_proj_dev = 0.0;

    bool curvature_checked = true;
    VerifyChecks pass;
    bool all_pass = false;
};

/// Run the full residual battery for one entry on the given grid.
VerifyReport verify_entry(const GalleryEntry& entry, const GridSpec& spec,
                          const VerifyThresholds& thresholds = {});

/// Default verification grid: the entry's calibration window at 201x201,
/// i.e. grid step 1e-3.
GridSpec default_verify_grid(const GalleryEntry& entry);

/// Deterministic, byte-stable renderings (numbers at 17 significant digits).
void print_report_text(std::ostream& os, const VerifyReport& r, const VerifyThresholds& t);
void print_report_json(std::ostream& os, const VerifyReport& r, const VerifyThresholds& t);

}  // namespace lw3
