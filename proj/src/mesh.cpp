#include "cubicrev/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cubicrev/surface.hpp"

namespace cubicrev {

SurfaceMesh build_surface_mesh(const MeshConfig& cfg) {
    if (!(cfg.t_min > 0.0))
        throw std::invalid_argument(
            "mesh: t_min must be positive (the surface has no points with x + y + z <= 0)");
    if (!(cfg.t_min < cfg.t_max)) throw std::invalid_argument("mesh: need t_min < t_max");
    if (cfg.n_t < 2 || cfg.n_theta < 2)
        throw std::invalid_argument("mesh: grid must be at least 2 x 2");

    SurfaceMesh mesh;
    mesh.cfg = cfg;
    mesh.vertices.reserve(std::size_t(cfg.n_t) * cfg.n_theta);
    const double log_ratio = std::log(cfg.t_max / cfg.t_min);
    for (int i = 0; i < cfg.n_t; ++i) {
        double t = cfg.t_min * std::exp(log_ratio * double(i) / double(cfg.n_t - 1));
        for (int j = 0; j < cfg.n_theta; ++j) {
            double theta = 2.0 * M_PI * double(j) / double(cfg.n_theta);
            auto v = surface_point(t, theta);
            double res = std::abs(affine_cubic_value(v[0], v[1], v[2], 3.0));
            if (res > mesh.max_residual) mesh.max_residual = res;
            mesh.vertices.push_back(v);
        }
    }
    if (mesh.max_residual > 1e-6)
        throw std::runtime_error("mesh: vertex residual certificate failed");

    mesh.triangles.reserve(2u * (cfg.n_t - 1) * cfg.n_theta);
    auto idx = [&](int i, int j) { return i * cfg.n_theta + (j % cfg.n_theta); };
    for (int i = 0; i + 1 < cfg.n_t; ++i)
        for (int j = 0; j < cfg.n_theta; ++j) {
            int v00 = idx(i, j), v01 = idx(i, j + 1);
            int v10 = idx(i + 1, j), v11 = idx(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    return mesh;
}

std::string obj_text(const SurfaceMesh& mesh) {
    std::string out;
    out.reserve(64 * mesh.vertices.size());
    char buf[128];
    std::snprintf(buf, sizeof(buf), "# cubicrev surface mesh %d x %d, t in [%.17g, %.17g]\n",
                  mesh.cfg.n_t, mesh.cfg.n_theta, mesh.cfg.t_min, mesh.cfg.t_max);
    out += buf;
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        out += buf;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
        out += buf;
    }
    return out;
}

}  // namespace cubicrev
