#ifndef DEFCOLOR_GENERATORS_HPP
#define DEFCOLOR_GENERATORS_HPP

#include "defcolor/colouring.hpp"
#include "defcolor/embedding.hpp"

namespace defcolor {

/// Complete graph with the cyclic rotation i -> (i+1, ..., i+n-1); K4 gets
/// the tetrahedral (genus-0) embedding instead. Not genus-minimal in general.
RotationSystem gen_complete(int n);

/// K7 embedded on the torus: rotation at i is (i+1, i+3, i+2, i+6, i+4, i+5)
/// mod 7; traces to 14 triangles, Euler genus 2.
RotationSystem gen_k7_torus();

/// Random planar triangulation by repeated insertion of a vertex into a
/// uniformly chosen face of a triangle, n >= 3.
RotationSystem gen_planar_triangulation(int n, unsigned long long seed);

/// W x H toroidal grid quadrangulation with one diagonal per quad: the
/// 6-regular genus-2 triangulation. Requires W, H >= 3.
RotationSystem gen_toroidal_grid(int w, int h);

RotationSystem gen_icosahedron();

/// Uniform-random k-subsets of {1..palette} per vertex; identical seeds give
/// identical assignments.
ListAssignment gen_random_lists(int n, int k, int palette,
                                unsigned long long seed);

} // namespace defcolor

#endif
