#include "delab/mesh.hpp"

#include "delab/report.hpp"

#include <numbers>
#include <stdexcept>

namespace delab {

MeshCounts write_obj(std::ostream& os, const SurfacePatch& p, const MeshSpec& s) {
    if (s.nt < 2 || s.nth < 3) throw std::invalid_argument("mesh needs at least 2 x 3 nodes");
    const double dt = s.closed_t ? (s.t1 - s.t0) / static_cast<double>(s.nt)
                                 : (s.t1 - s.t0) / static_cast<double>(s.nt - 1);
    const double dth = 2.0 * std::numbers::pi / static_cast<double>(s.nth);
    MeshCounts c;
    for (std::size_t i = 0; i < s.nt; ++i) {
        const double t = s.t0 + dt * static_cast<double>(i);
        for (std::size_t j = 0; j < s.nth; ++j) {
            const Vec3 X = p.jet(t, -std::numbers::pi + dth * static_cast<double>(j)).X;
            os << "v " << fmt_double(X.x()) << ' ' << fmt_double(X.y()) << ' ' << fmt_double(X.z()) << '\n';
            ++c.vertices;
        }
    }
    const std::size_t rows = s.closed_t ? s.nt : s.nt - 1;
    auto id = [&](std::size_t i, std::size_t j) { return (i % s.nt) * s.nth + (j % s.nth) + 1; };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < s.nth; ++j) {
            // Each grid quad as two triangles.
            os << "f " << id(i, j) << ' ' << id(i + 1, j) << ' ' << id(i + 1, j + 1) << '\n';
            os << "f " << id(i, j) << ' ' << id(i + 1, j + 1) << ' ' << id(i, j + 1) << '\n';
            c.faces += 2;
        }
    return c;
}

}  // namespace delab
