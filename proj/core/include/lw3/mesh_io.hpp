#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lw3/gallery.hpp"
#include "lw3/geometry.hpp"

namespace lw3 {

enum class MeshFormat { obj, csv };

/// Parses "obj" / "csv"; throws ContractViolation otherwise.
MeshFormat parse_mesh_format(std::string_view s);

struct MeshStats {
    std::size_t vertices = 0;
    std::size_t faces = 0;  // triangles (OBJ) or data rows (CSV)
    std::size_t nodes_total = 0;
    std::size_t nodes_valid = 0;
};

/// OBJ: `# eps=...` header, `v x1 x2 x3` per valid node, grid quads split
/// into two triangles; masked nodes are omitted and their faces dropped.
/// Numbers are printed with 17 significant digits.
MeshStats write_obj(std::ostream& os, const SurfaceGrid& surface);

/// CSV with header x,y,psi1,psi2,psi3,E,H,K,lambda, one row per valid node.
/// Curvature columns are nan where the stencil window is incomplete.
MeshStats write_csv(std::ostream& os, const SurfaceGrid& surface, const ShapeReport& report);

/// Integrate the entry on the grid and write the mesh. Throws EmptyMesh when
/// every node is masked.
MeshStats render_mesh(const GalleryEntry& entry, const GridSpec& spec,
                      const std::filesystem::path& out, MeshFormat format);

MeshStats render_mesh(const GalleryEntry& entry, const SurfaceGrid& surface, std::ostream& os,
                      MeshFormat format);

}  // namespace lw3
