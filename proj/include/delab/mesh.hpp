#pragma once

#include "delab/surface.hpp"

#include <cstddef>
#include <ostream>

namespace delab {

struct MeshSpec {
    double t0 = 0.0, t1 = 1.0;
    std::size_t nt = 100, nth = 64;
    // Closed in t: t1 is identified with t0, nodes at t0 + i (t1 - t0)/nt.
    // Open: nt nodes spanning [t0, t1] inclusive.
    bool closed_t = false;
};

struct MeshCounts {
    std::size_t vertices = 0, faces = 0;
};

// Triangle mesh of the patch in Wavefront OBJ form (two per grid quad); theta
// always wraps.
MeshCounts write_obj(std::ostream& os, const SurfacePatch& p, const MeshSpec& spec);

}  // namespace delab
