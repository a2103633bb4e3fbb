#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mapbij/common.hpp"
#include "mapbij/degree_distribution.hpp"

namespace mapbij {

// A rooted planar map as a rotation system on half-edges. rotation(h) is the
// next half-edge counterclockwise around the origin vertex of h; the two
// half-edges of edge i are 2i and 2i+1. face_next(h) = rotation(opposite(h))
// traverses the face on the left of h. Construction validates the involution
// pairing, connectivity and Euler's formula (v + f = n + 2), so every
// PlanarMap is a connected genus-0 map. Instances are immutable.
class PlanarMap {
 public:
  // Validates and builds. rotation.size() must be even; rotation must be a
  // permutation of [0, 2n); the map must be connected and planar.
  static PlanarMap build(std::vector<HalfEdge> rotation, HalfEdge root);
  static PlanarMap empty();

  bool is_empty() const { return rotation_.empty(); }
  int64_t edge_count() const { return static_cast<int64_t>(rotation_.size()) / 2; }
  int64_t half_edge_count() const { return static_cast<int64_t>(rotation_.size()); }
  int64_t vertex_count() const { return v_count_; }
  int64_t face_count() const { return f_count_; }
  HalfEdge root() const { return root_; }

  HalfEdge rotation(HalfEdge h) const { return rotation_[h]; }
  HalfEdge rotation_prev(HalfEdge h) const { return rotation_inv_[h]; }
  HalfEdge face_next(HalfEdge h) const { return rotation_[opposite(h)]; }

  int vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  int face_of(HalfEdge h) const { return face_of_[h]; }
  int origin(HalfEdge h) const { return vertex_of_[h]; }
  int end(HalfEdge h) const { return vertex_of_[opposite(h)]; }

  int external_face() const { return face_of_[root_]; }
  int vertex_degree(int v) const { return vertex_degree_[v]; }
  int face_degree(int f) const { return face_degree_[f]; }
  // One representative half-edge per vertex (the smallest id).
  HalfEdge vertex_germ(int v) const { return vertex_germ_[v]; }

  const std::vector<HalfEdge>& rotation_array() const { return rotation_; }

  bool operator==(const PlanarMap& o) const {
    return rotation_ == o.rotation_ && root_ == o.root_;
  }

 private:
  PlanarMap() = default;

  std::vector<HalfEdge> rotation_;
  std::vector<HalfEdge> rotation_inv_;
  HalfEdge root_ = kNoHalfEdge;
  std::vector<int> vertex_of_;
  std::vector<int> face_of_;
  std::vector<int> vertex_degree_;
  std::vector<int> face_degree_;
  std::vector<HalfEdge> vertex_germ_;
  int v_count_ = 0;
  int f_count_ = 0;
};

// (2 - v + n - f) / 2 for a raw rotation system; 0 for every map PlanarMap
// accepts. Usable on data that build() would reject.
int genus(const std::vector<HalfEdge>& rotation);
inline int genus(const PlanarMap& m) { return genus(m.rotation_array()); }

// Face cycles; the external face (the one containing the root) first, the
// rest ordered by smallest contained half-edge. Each cycle starts at the
// root, respectively its smallest half-edge.
std::vector<std::vector<HalfEdge>> faces(const PlanarMap& m);

// The dual map: one vertex per face of m, edge ids preserved (the dual of
// edge i is edge i). dual(dual(m)) equals m with the root reversed, up to
// canonical relabeling.
PlanarMap dual(const PlanarMap& m);

// Same map, root replaced by its opposite half-edge.
PlanarMap reverse_root(const PlanarMap& m);

enum class VertexColor : int8_t { white = 0, black = 1 };

// The unique 2-coloring with the root oriented white -> black, indexed by
// vertex id. Throws not_bipartite if an odd cycle exists.
std::vector<VertexColor> bipartite_coloring(const PlanarMap& m);
bool is_bipartite(const PlanarMap& m);

enum class DegreeMode { faces, vertices };

// d_i = number of faces (resp. vertices) of degree 2i. Throws odd_degree if
// any counted degree is odd.
DegreeDistribution degree_distribution(const PlanarMap& m, DegreeMode mode);

// Deterministic relabeling by breadth-first traversal from the root following
// rotation order. relabel[h] is the new id of old half-edge h; the new root
// is 0 and the relabeled opposite is still h ^ 1.
std::vector<HalfEdge> canonical_relabel(const PlanarMap& m);
PlanarMap canonicalize(const PlanarMap& m);

// Byte string equal for two maps iff they are rooted-isomorphic.
std::string canonical_code(const PlanarMap& m);
bool isomorphic(const PlanarMap& a, const PlanarMap& b);

// Text format:
//   map n=<edges> root=<half-edge>
//   v: h1 h2 ... hk        one line per vertex, first-visit order from the
//                          root, half-edges in rotation order
// The empty map serializes as "map n=0".
std::string serialize(const PlanarMap& m);
PlanarMap deserialize(const std::string& text);

}  // namespace mapbij
