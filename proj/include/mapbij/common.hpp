#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mapbij {

// Half-edges are dense integer ids in [0, 2n). The two half-edges of edge i
// are 2i and 2i+1, so opposite(h) == h ^ 1 and edge_of(h) == h >> 1.
using HalfEdge = int32_t;
inline constexpr HalfEdge kNoHalfEdge = -1;

inline HalfEdge opposite(HalfEdge h) { return h ^ 1; }
inline int32_t edge_of(HalfEdge h) { return h >> 1; }

enum class ErrorKind {
  not_involution,
  not_permutation,
  disconnected,
  non_planar,
  root_out_of_range,
  not_bipartite,
  odd_degree,
  parse_error,
  odd_inner_degree,
  white_leaf_count_mismatch,
  root_not_black_leaf,
  degenerate_tree,
  mark_not_black_leaf,
  not_balanced,
  not_eulerian,
  edge_is_leaf_edge,
  mark_not_vertex,
  edge_in_spanning_tree,
  edge_not_in_map,
  same_leaf_marked_twice,
  edges_equal,
  unknown_element,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

enum class Sign : int8_t { plus = +1, minus = -1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

}  // namespace mapbij
