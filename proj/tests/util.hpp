#pragma once

// Small map builders shared by the test suites.

#include <initializer_list>
#include <vector>

#include "mapbij/planar_map.hpp"

namespace testutil {

using mapbij::HalfEdge;
using mapbij::PlanarMap;

// Rotation permutation from explicit cycles over the half-edge ids.
inline std::vector<HalfEdge> rotation_from_cycles(
    int64_t half_edges, std::initializer_list<std::initializer_list<HalfEdge>> cycles) {
  std::vector<HalfEdge> rot(half_edges, -1);
  for (const auto& cyc : cycles) {
    const std::vector<HalfEdge> c(cyc);
    for (size_t i = 0; i < c.size(); ++i) rot[c[i]] = c[(i + 1) % c.size()];
  }
  return rot;
}

// One edge, two vertices. Root 0.
inline PlanarMap single_edge() { return PlanarMap::build({0, 1}, 0); }

// One vertex, one loop. Root 0.
inline PlanarMap loop_map() { return PlanarMap::build({1, 0}, 0); }

// Two parallel edges between two vertices. Root 0.
inline PlanarMap doubled_edge() {
  return PlanarMap::build(rotation_from_cycles(4, {{0, 2}, {1, 3}}), 0);
}

// Path on three vertices A-B-C; edge 0 = A-B, edge 1 = B-C. Root 0 at A.
inline PlanarMap path3(HalfEdge root = 0) {
  return PlanarMap::build(rotation_from_cycles(4, {{0}, {1, 2}, {3}}), root);
}

// One vertex, two interleaved loops: genus 1, rejected by build().
inline std::vector<HalfEdge> interleaved_bouquet_rotation() {
  return rotation_from_cycles(4, {{0, 2, 1, 3}});
}

}  // namespace testutil
