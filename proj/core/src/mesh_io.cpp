#include "lw3/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

namespace lw3 {

namespace {

// All numeric output carries 17 significant digits.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

MeshFormat parse_mesh_format(std::string_view s) {
    if (s == "obj") return MeshFormat::obj;
    if (s == "csv") return MeshFormat::csv;
    throw ContractViolation("unknown mesh format '" + std::string(s) + "' (expected obj or csv)");
}

MeshStats write_obj(std::ostream& os, const SurfaceGrid& surface) {
    const GridSpec& spec = surface.spec;
    MeshStats stats;
    stats.nodes_total = spec.size();

    std::vector<std::size_t> vertex_id(spec.size(), 0);  // 1-based OBJ ids
    os << "# eps=" << (surface.eps == Eps::spacelike ? "+1" : "-1") << "\n";
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            if (!surface.valid(i, j)) continue;
            const LVec3& p = surface.at(i, j);
            vertex_id[spec.index(i, j)] = ++stats.vertices;
            os << "v " << fmt(p.x1) << ' ' << fmt(p.x2) << ' ' << fmt(p.x3) << "\n";
        }
    }
    stats.nodes_valid = stats.vertices;
    if (stats.vertices == 0) throw EmptyMesh("all nodes masked, nothing to export");

    for (std::size_t j = 0; j + 1 < spec.ny; ++j) {
        for (std::size_t i = 0; i + 1 < spec.nx; ++i) {
            const std::size_t v00 = vertex_id[spec.index(i, j)];
            const std::size_t v10 = vertex_id[spec.index(i + 1, j)];
            const std::size_t v01 = vertex_id[spec.index(i, j + 1)];
            const std::size_t v11 = vertex_id[spec.index(i + 1, j + 1)];
            if (!v00 || !v10 || !v01 || !v11) continue;
            os << "f " << v00 << ' ' << v10 << ' ' << v11 << "\n";
            os << "f " << v00 << ' ' << v11 << ' ' << v01 << "\n";
            stats.faces += 2;
        }
    }
    return stats;
}

MeshStats write_csv(std::ostream& os, const SurfaceGrid& surface, const ShapeReport& report) {
    const GridSpec& spec = surface.spec;
    MeshStats stats;
    stats.nodes_total = spec.size();
    os << "x,y,psi1,psi2,psi3,E,H,K,lambda\n";
    for (std::size_t j = 0; j < spec.ny; ++j) {
        for (std::size_t i = 0; i < spec.nx; ++i) {
            if (!surface.valid(i, j)) continue;
            const std::size_t k = spec.index(i, j);
            const LVec3& p = surface.psi[k];
            os << fmt(spec.x(i)) << ',' << fmt(spec.y(j)) << ',' << fmt(p.x1) << ','
               << fmt(p.x2) << ',' << fmt(p.x3) << ',' << fmt(report.E[k]) << ','
               << fmt(report.H[k]) << ',' << fmt(report.K[k]) << ',' << fmt(report.lambda[k])
               << "\n";
            ++stats.faces;
            ++stats.nodes_valid;
        }
    }
    stats.vertices = stats.nodes_valid;
    if (stats.nodes_valid == 0) throw EmptyMesh("all nodes masked, nothing to export");
    return stats;
}

MeshStats render_mesh(const GalleryEntry& entry, const SurfaceGrid& surface, std::ostream& os,
                      MeshFormat format) {
    if (format == MeshFormat::obj) return write_obj(os, surface);
    ShapeReport report = fundamental_forms(surface, &entry.chart);
    curvatures(report, true);
    return write_csv(os, surface, report);
}

MeshStats render_mesh(const GalleryEntry& entry, const GridSpec& spec,
                      const std::filesystem::path& out, MeshFormat format) {
    const SurfaceGrid surface =
        integrate_immersion(entry.chart, spec, spec.nx / 2, spec.ny / 2);
    std::ofstream os(out);
    if (!os) throw Error("cannot open output file " + out.string());
    return render_mesh(entry, surface, os, format);
}

}  // namespace lw3
