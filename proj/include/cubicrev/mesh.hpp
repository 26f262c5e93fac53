// Triangle meshes of the surface from the (t, theta) parametrization.
#pragma once

#include <array>
#include <string>
#include <vector>

namespace cubicrev {

struct MeshConfig {
    double t_min = 0.2;
    double t_max = 8.0;
    int n_t = 96;      // rings (t samples), >= 2, geometric spacing
    int n_theta = 96;  // vertices per ring, >= 2, uniform on [0, 2pi)
};

struct SurfaceMesh {
    MeshConfig cfg;
    std::vector<std::array<double, 3>> vertices;   // t-major, n_t * n_theta
    std::vector<std::array<int, 3>> triangles;     // 0-based, 2 * (n_t - 1) * n_theta
    double max_residual = 0.0;                     // max |F(vertex)| over all vertices
};

/// Builds the welded-seam mesh; throws on an invalid grid and when any vertex
/// residual exceeds 1e-6.
SurfaceMesh build_surface_mesh(const MeshConfig& cfg);

/// Deterministic OBJ text ("v x y z" / "f i j k", 1-based, 17 significant digits).
std::string obj_text(const SurfaceMesh& mesh);

}  // namespace cubicrev
