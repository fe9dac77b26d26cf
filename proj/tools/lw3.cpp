// lw3: construct, transform and verify spacelike/timelike minimal surfaces
// in Lorentz-Minkowski 3-space from Weierstrass data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lw3/gallery.hpp"
#include "lw3/geometry.hpp"
#include "lw3/liouville.hpp"
#include "lw3/mesh_io.hpp"
#include "lw3/mobius.hpp"
#include "lw3/verify.hpp"

namespace {

using namespace lw3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_tuple(const std::string& text, std::size_t n, const char* what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (vals.size() != n) {
        throw ContractViolation(std::string(what) + " expects " + std::to_string(n) +
                                " comma-separated numbers");
    }
    return vals;
}

struct GridArgs {
    std::size_t nx = 0, ny = 0;  // 0 = unset
    std::string domain;          // "X0,X1,Y0,Y1"

    bool unset() const { return nx == 0 && ny == 0 && domain.empty(); }

    GridSpec resolve(const Rect& fallback, std::size_t default_n = 101) const {
        Rect r = fallback;
        if (!domain.empty()) {
            const auto v = parse_tuple(domain, 4, "--domain");
            r = {v[0], v[1], v[2], v[3]};
        }
        return GridSpec::from_rect(r, nx ? nx : default_n, ny ? ny : default_n);
    }
};

GalleryParams make_params(const std::optional<double>& a, const std::optional<double>& b) {
    GalleryParams p;
    p.a = a;
    p.b = b;
    return p;
}

void add_grid_options(CLI::App* cmd, GridArgs& grid) {
    cmd->add_option("--nx", grid.nx, "grid nodes along x")->check(CLI::PositiveNumber);
    cmd->add_option("--ny", grid.ny, "grid nodes along y")->check(CLI::PositiveNumber);
    cmd->add_option("--domain", grid.domain, "rectangle X0,X1,Y0,Y1 (default: per entry)");
}

int cmd_list() {
    for (const auto& name : gallery_names()) {
        const GalleryEntry e = get_example(name);
        std::cout << name << "\n";
        std::cout << "  eps: " << (e.eps == Eps::spacelike ? "+1" : "-1") << "\n";
        std::cout << "  params: " << param_constraints(name) << "\n";
        std::cout << "  default domain: [" << fmt(e.default_domain.x0) << ", "
                  << fmt(e.default_domain.x1) << "] x [" << fmt(e.default_domain.y0) << ", "
                  << fmt(e.default_domain.y1) << "]\n";
    }
    return 0;
}

int cmd_mesh(const GalleryEntry& entry, const GridArgs& grid, const std::string& out,
             const std::string& format) {
    const MeshFormat mf = parse_mesh_format(format);
    const GridSpec spec = grid.resolve(entry.default_domain);
    const MeshStats stats = render_mesh(entry, spec, out, mf);
    std::cout << "wrote " << out << ": " << stats.vertices << " vertices, " << stats.faces
              << (mf == MeshFormat::obj ? " triangles" : " rows") << " ("
              << stats.nodes_valid << "/" << stats.nodes_total << " nodes valid)\n";
    return 0;
}

int cmd_verify(const GalleryEntry& entry, const GridArgs& grid, bool json) {
    const GridSpec spec =
        grid.unset() ? default_verify_grid(entry) : grid.resolve(entry.verify_window, 201);
    const VerifyThresholds thresholds;
    const VerifyReport report = verify_entry(entry, spec, thresholds);
    if (json) {
        print_report_json(std::cout, report, thresholds);
    } else {
        print_report_text(std::cout, report, thresholds);
    }
    return report.all_pass ? 0 : 1;
}

int cmd_transform(const GalleryEntry& entry, const GridArgs& grid, const std::string& axis,
                  double theta, const std::string& translate, const std::string& out,
                  const std::string& format) {
    const auto av = parse_tuple(axis, 3, "--axis");
    LVec3 axis_vec{av[0], av[1], av[2]};
    LVec3 shift{};
    if (!translate.empty()) {
        const auto tv = parse_tuple(translate, 3, "--translate");
        shift = {tv[0], tv[1], tv[2]};
    }

    // causal type of the axis decides k; normalize to p^2+q^2-r^2 = k
    const double q = inner(axis_vec, axis_vec);
    int k = 0;
    if (std::fabs(q) > 1e-9 * (1.0 + euclid_norm(axis_vec) * euclid_norm(axis_vec))) {
        k = q > 0.0 ? 1 : -1;
        axis_vec = axis_vec / std::sqrt(std::fabs(q));
    }
    const AxisAngle ax = make_axis_angle(axis_vec, theta, k, 1e-9);
    const MobiusParams t = from_axis_angle(ax, entry.eps);
    const LMat3 r = to_rotation(t);

    const GridSpec spec = grid.resolve(entry.default_domain);
    const SurfaceGrid surface = integrate_immersion(entry.chart, spec, spec.nx / 2, spec.ny / 2);
    SurfaceGrid moved = surface;
    for (std::size_t idx = 0; idx < moved.psi.size(); ++idx) {
        moved.psi[idx] = r * moved.psi[idx] + shift;
    }

    const MeshFormat mf = parse_mesh_format(format);
    std::ofstream os(out);
    if (!os) throw Error("cannot open output file " + out);
    MeshStats stats;
    if (mf == MeshFormat::obj) {
        stats = write_obj(os, moved);
    } else {
        ShapeReport rep = fundamental_forms(moved);
        curvatures(rep, true);
        stats = write_csv(os, moved, rep);
    }

    // isometry invariance: E, H, K fields agree with the untransformed mesh
    ShapeReport before = fundamental_forms(surface);
    ShapeReport after = fundamental_forms(moved);
    curvatures(before, true);
    curvatures(after, true);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        if (!before.valid[idx] || !after.valid[idx]) continue;
        worst = std::max(worst, std::fabs(before.E[idx] - after.E[idx]));
        worst = std::max(worst, std::fabs(before.H[idx] - after.H[idx]));
        worst = std::max(worst, std::fabs(before.K[idx] - after.K[idx]));
    }
    const bool ok = worst <= 1e-6;
    std::cout << "wrote " << out << ": " << stats.vertices << " vertices, " << stats.faces
              << " faces\n";
    std::cout << "rotation: " << to_string(classify_lorentz(r)) << " component, axis type k="
              << ax.k << "\n";
    std::cout << "isometry invariance (max E/H/K drift): " << fmt(worst) << " tol=1e-06 "
              << (ok ? "pass" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_liouville(const GalleryEntry& entry, const GridArgs& grid, bool json) {
    // Default to the calibration window: the PDE residual is a finite
    // difference and needs the fine step; --domain/--nx override.
    const GridSpec spec =
        grid.unset() ? default_verify_grid(entry) : grid.resolve(entry.default_domain, 201);
    const RealField lam = lambda_from_g(entry.chart.g, entry.chart.g_prime, entry.eps, spec);
    const double residual = liouville_residual(lam, entry.eps);
    if (json) {
        std::cout << "{\n  \"example\": \"" << entry.name << "\",\n";
        std::cout << "  \"eps\": " << (entry.eps == Eps::spacelike ? 1 : -1) << ",\n";
        std::cout << "  \"grid\": {\"nx\": " << spec.nx << ", \"ny\": " << spec.ny
                  << ", \"x0\": " << fmt(spec.x0) << ", \"y0\": " << fmt(spec.y0)
                  << ", \"hx\": " << fmt(spec.hx) << ", \"hy\": " << fmt(spec.hy) << "},\n";
        std::cout << "  \"residual\": " << fmt(residual) << ",\n";
        std::cout << "  \"lambda\": [";
        for (std::size_t j = 0; j < spec.ny; ++j) {
            std::cout << (j == 0 ? "\n    [" : ",\n    [");
            for (std::size_t i = 0; i < spec.nx; ++i) {
                if (i) std::cout << ", ";
                if (lam.valid(i, j)) {
                    std::cout << fmt(lam.at(i, j));
                } else {
                    std::cout << "null";
                }
            }
            std::cout << "]";
        }
        std::cout << "\n  ]\n}\n";
    } else {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t k = 0; k < spec.size(); ++k) {
            if (!lam.mask[k]) continue;
            lo = std::min(lo, lam.values[k]);
            hi = std::max(hi, lam.values[k]);
        }
        std::cout << "example: " << entry.name << "\n";
        std::cout << "valid nodes: " << lam.count_valid() << "/" << spec.size() << "\n";
        std::cout << "lambda range: [" << fmt(lo) << ", " << fmt(hi) << "]\n";
        std::cout << "liouville_residual: " << fmt(residual) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal surfaces in Lorentz-Minkowski 3-space via Weierstrass data"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list gallery surfaces and their constraints");

    std::string example, out, format = "obj", axis, translate;
    std::optional<double> pa, pb;
    double theta = 0.0;
    bool json = false;
    GridArgs grid;

    auto add_example = [&](CLI::App* cmd) {
        cmd->add_option("--example", example, "gallery entry name")->required();
        cmd->add_option("--a", pa, "family parameter a");
        cmd->add_option("--b", pb, "family parameter b");
    };

    auto* mesh = app.add_subcommand("mesh", "integrate a surface and export OBJ/CSV");
    add_example(mesh);
    add_grid_options(mesh, grid);
    mesh->add_option("--out", out, "output path")->required();
    mesh->add_option("--format", format, "obj or csv");

    auto* verify = app.add_subcommand("verify", "run the residual battery; exit 0 iff all pass");
    add_example(verify);
    add_grid_options(verify, grid);
    verify->add_flag("--json", json, "machine-readable report");

    auto* transform =
        app.add_subcommand("transform", "apply an axis-angle rotation (+ translation) and re-verify");
    add_example(transform);
    add_grid_options(transform, grid);
    transform->add_option("--axis", axis, "rotation axis P,Q,R")->required();
    transform->add_option("--theta", theta, "rotation parameter")->required();
    transform->add_option("--translate", translate, "translation T1,T2,T3");
    transform->add_option("--out", out, "output path")->required();
    transform->add_option("--format", format, "obj or csv");

    auto* liouville =
        app.add_subcommand("liouville", "lambda field of the developing map and its PDE residual");
    add_example(liouville);
    add_grid_options(liouville, grid);
    liouville->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) return cmd_list();
        const GalleryEntry entry = get_example(example, make_params(pa, pb));
        if (mesh->parsed()) return cmd_mesh(entry, grid, out, format);
        if (verify->parsed()) return cmd_verify(entry, grid, json);
        if (transform->parsed())
            return cmd_transform(entry, grid, axis, theta, translate, out, format);
        if (liouville->parsed()) return cmd_liouville(entry, grid, json);
    } catch (const lw3::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
