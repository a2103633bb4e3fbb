#include "mapbij/planar_map.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace mapbij {

namespace {

// Orbit labeling of a permutation in scan order of smallest element.
int label_orbits(const std::vector<HalfEdge>& perm, std::vector<int>& label,
                 std::vector<int>& size, std::vector<HalfEdge>& rep) {
  const int m = static_cast<int>(perm.size());
  label.assign(m, -1);
  size.clear();
  rep.clear();
  int count = 0;
  for (HalfEdge h = 0; h < m; ++h) {
    if (label[h] != -1) continue;
    int sz = 0;
    for (HalfEdge g = h; label[g] == -1; g = perm[g]) {
      label[g] = count;
      ++sz;
    }
    size.push_back(sz);
    rep.push_back(h);
    ++count;
  }
  return count;
}

std::vector<HalfEdge> face_perm_of(const std::vector<HalfEdge>& rotation) {
  std::vector<HalfEdge> fp(rotation.size());
  for (HalfEdge h = 0; h < static_cast<HalfEdge>(rotation.size()); ++h)
    fp[h] = rotation[opposite(h)];
  return fp;
}

}  // namespace

PlanarMap PlanarMap::build(std::vector<HalfEdge> rotation, HalfEdge root) {
  PlanarMap m;
  const int64_t hn = static_cast<int64_t>(rotation.size());
  if (hn == 0) {
    if (root != kNoHalfEdge) fail(ErrorKind::root_out_of_range, "empty map takes no root");
    return m;
  }
  if (hn % 2 != 0)
    fail(ErrorKind::not_involution, "odd number of half-edges breaks the 2i<->2i+1 pairing");
  std::vector<char> seen(hn, 0);
  for (HalfEdge h = 0; h < hn; ++h) {
    HalfEdge g = rotation[h];
    if (g < 0 || g >= hn) fail(ErrorKind::not_permutation, "rotation value out of range");
    if (seen[g]) fail(ErrorKind::not_permutation, "rotation is not a permutation");
    seen[g] = 1;
  }
  if (root < 0 || root >= hn) fail(ErrorKind::root_out_of_range, "root half-edge out of range");

  m.rotation_ = std::move(rotation);
  m.root_ = root;
  m.rotation_inv_.assign(hn, 0);
  for (HalfEdge h = 0; h < hn; ++h) m.rotation_inv_[m.rotation_[h]] = h;

  m.v_count_ = label_orbits(m.rotation_, m.vertex_of_, m.vertex_degree_, m.vertex_germ_);
  std::vector<HalfEdge> face_rep;
  m.f_count_ = label_orbits(face_perm_of(m.rotation_), m.face_of_, m.face_degree_, face_rep);

  // connectivity: the group generated by rotation and opposite must be
  // transitive; rotation orbits are vertices, so BFS over vertices via edges.
  std::vector<char> reached(m.v_count_, 0);
  std::vector<int> stack{m.vertex_of_[0]};
  reached[m.vertex_of_[0]] = 1;
  int nreach = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    HalfEdge g0 = m.vertex_germ_[v];
    HalfEdge g = g0;
    do {
      int u = m.vertex_of_[opposite(g)];
      if (!reached[u]) {
        reached[u] = 1;
        ++nreach;
        stack.push_back(u);
      }
      g = m.rotation_[g];
    } while (g != g0);
  }
  if (nreach != m.v_count_) fail(ErrorKind::disconnected, "map is not connected");

  const int64_t n = hn / 2;
  if (m.v_count_ - n + m.f_count_ != 2)
    fail(ErrorKind::non_planar,
         "Euler defect: v - n + f = " + std::to_string(m.v_count_ - n + m.f_count_));
  return m;
}

PlanarMap PlanarMap::empty() { return PlanarMap(); }

int genus(const std::vector<HalfEdge>& rotation) {
  if (rotation.empty()) return 0;
  std::vector<int> label, size;
  std::vector<HalfEdge> rep;
  int v = label_orbits(rotation, label, size, rep);
  int f = label_orbits(face_perm_of(rotation), label, size, rep);
  int64_t n = static_cast<int64_t>(rotation.size()) / 2;
  return static_cast<int>((2 - v + n - f) / 2);
}

std::vector<std::vector<HalfEdge>> faces(const PlanarMap& m) {
  std::vector<std::vector<HalfEdge>> out;
  if (m.is_empty()) return out;
  std::vector<char> done(m.half_edge_count(), 0);
  auto emit = [&](HalfEdge start) {
    std::vector<HalfEdge> cycle;
    HalfEdge g = start;
    do {
      cycle.push_back(g);
      done[g] = 1;
      g = m.face_next(g);
    } while (g != start);
    out.push_back(std::move(cycle));
  };
  emit(m.root());
  for (HalfEdge h = 0; h < m.half_edge_count(); ++h)
    if (!done[h]) emit(h);
  return out;
}

PlanarMap dual(const PlanarMap& m) {
  if (m.is_empty()) return PlanarMap::empty();
  // rotation* = face_next^{-1}; vertices of the dual are the faces of m and
  // the dual root crosses the root from its left face to its right face.
  const int64_t hn = m.half_edge_count();
  std::vector<HalfEdge> rot(hn);
  for (HalfEdge h = 0; h < hn; ++h) rot[m.face_next(h)] = h;
  return PlanarMap::build(std::move(rot), opposite(m.root()));
}

PlanarMap reverse_root(const PlanarMap& m) {
  if (m.is_empty()) return m;
  return PlanarMap::build(m.rotation_array(), opposite(m.root()));
}

std::vector<VertexColor> bipartite_coloring(const PlanarMap& m) {
  if (m.is_empty()) fail(ErrorKind::not_bipartite, "empty map has no coloring");
  std::vector<int8_t> color(m.vertex_count(), -1);
  color[m.origin(m.root())] = 0;
  std::vector<int> queue{m.origin(m.root())};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    HalfEdge g0 = m.vertex_germ(v);
    HalfEdge g = g0;
    do {
      int u = m.end(g);
      if (color[u] == -1) {
        color[u] = static_cast<int8_t>(1 - color[v]);
        queue.push_back(u);
      } else if (color[u] == color[v]) {
        fail(ErrorKind::not_bipartite, "odd cycle found");
      }
      g = m.rotation(g);
    } while (g != g0);
  }
  std::vector<VertexColor> out(m.vertex_count());
  for (int64_t v = 0; v < m.vertex_count(); ++v)
    out[v] = color[v] == 0 ? VertexColor::white : VertexColor::black;
  return out;
}

bool is_bipartite(const PlanarMap& m) {
  try {
    bipartite_coloring(m);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_bipartite) return false;
    throw;
  }
}

DegreeDistribution degree_distribution(const PlanarMap& m, DegreeMode mode) {
  const int64_t count = mode == DegreeMode::faces ? m.face_count() : m.vertex_count();
  std::vector<int64_t> d;
  for (int64_t i = 0; i < count; ++i) {
    int deg = mode == DegreeMode::faces ? m.face_degree(static_cast<int>(i))
                                        : m.vertex_degree(static_cast<int>(i));
    if (deg % 2 != 0)
      fail(ErrorKind::odd_degree, std::string(mode == DegreeMode::faces ? "face" : "vertex") +
                                      " of odd degree " + std::to_string(deg));
    if (static_cast<int>(d.size()) < deg / 2) d.resize(deg / 2, 0);
    ++d[deg / 2 - 1];
  }
  return DegreeDistribution(std::move(d));
}

std::vector<HalfEdge> canonical_relabel(const PlanarMap& m) {
  const int64_t hn = m.half_edge_count();
  std::vector<HalfEdge> relabel(hn, kNoHalfEdge);
  if (hn == 0) return relabel;
  std::vector<char> visited(m.vertex_count(), 0);
  std::vector<HalfEdge> queue;
  HalfEdge next_edge = 0;
  auto assign = [&](HalfEdge g) {
    relabel[g] = 2 * next_edge;
    relabel[opposite(g)] = 2 * next_edge + 1;
    ++next_edge;
    queue.push_back(g);
    queue.push_back(opposite(g));
  };
  assign(m.root());
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    HalfEdge h = queue[qi];
    int v = m.vertex_of(h);
    if (visited[v]) continue;
    visited[v] = 1;
    for (HalfEdge g = m.rotation(h); g != h; g = m.rotation(g))
      if (relabel[g] == kNoHalfEdge) assign(g);
  }
  return relabel;
}

PlanarMap canonicalize(const PlanarMap& m) {
  if (m.is_empty()) return m;
  std::vector<HalfEdge> relabel = canonical_relabel(m);
  std::vector<HalfEdge> rot(m.half_edge_count());
  for (HalfEdge h = 0; h < m.half_edge_count(); ++h)
    rot[relabel[h]] = relabel[m.rotation(h)];
  return PlanarMap::build(std::move(rot), 0);
}

std::string canonical_code(const PlanarMap& m) {
  PlanarMap c = canonicalize(m);
  std::ostringstream os;
  os << "n=" << c.edge_count() << ';';
  for (HalfEdge h = 0; h < c.half_edge_count(); ++h) {
    if (h) os << ',';
    os << c.rotation(h);
  }
  return os.str();
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  return canonical_code(a) == canonical_code(b);
}

std::string serialize(const PlanarMap& m) {
  std::ostringstream os;
  if (m.is_empty()) {
    os << "map n=0\n";
    return os.str();
  }
  os << "map n=" << m.edge_count() << " root=" << m.root() << '\n';
  // first-visit order from the root
  std::vector<char> visited(m.vertex_count(), 0);
  std::vector<HalfEdge> queue{m.root()};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    HalfEdge h = queue[qi];
    if (visited[m.vertex_of(h)]) continue;
    visited[m.vertex_of(h)] = 1;
    os << "v:";
    HalfEdge g = h;
    do {
      os << ' ' << g;
      queue.push_back(opposite(g));
      g = m.rotation(g);
    } while (g != h);
    os << '\n';
  }
  return os.str();
}

namespace {

struct Parser {
  std::istringstream in;
  int line_no = 0;
  std::string line;

  explicit Parser(const std::string& text) : in(text) {}

  bool next_line() {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void err(const std::string& what, size_t column = 0) {
    fail(ErrorKind::parse_error, "parse error at line " + std::to_string(line_no) + ", column " +
                                     std::to_string(column + 1) + ": " + what);
  }

  int64_t parse_int(const std::string& tok, size_t column) {
    size_t pos = 0;
    int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      err("expected integer, got '" + tok + "'", column);
    }
    if (pos != tok.size()) err("trailing junk in integer '" + tok + "'", column);
    return v;
  }
};

}  // namespace

PlanarMap deserialize(const std::string& text) {
  Parser p(text);
  if (!p.next_line()) fail(ErrorKind::parse_error, "parse error at line 1, column 1: empty input");
  std::istringstream hs(p.line);
  std::string tag, ntok, rtok;
  hs >> tag >> ntok >> rtok;
  if (tag != "map") p.err("expected 'map' header");
  if (ntok.rfind("n=", 0) != 0) p.err("expected n=<edges>", p.line.find(ntok));
  int64_t n = p.parse_int(ntok.substr(2), p.line.find(ntok));
  if (n < 0) p.err("negative edge count");
  if (n == 0) {
    if (!rtok.empty()) p.err("empty map takes no root");
    return PlanarMap::empty();
  }
  if (rtok.rfind("root=", 0) != 0) p.err("expected root=<half-edge>");
  int64_t root = p.parse_int(rtok.substr(5), p.line.find(rtok));

  std::vector<HalfEdge> rotation(2 * n, kNoHalfEdge);
  std::vector<char> listed(2 * n, 0);
  int64_t total = 0;
  while (p.next_line()) {
    size_t col = p.line.find_first_not_of(" \t");
    if (p.line.compare(col, 2, "v:") != 0) p.err("expected 'v:' vertex line", col);
    std::istringstream vs(p.line.substr(col + 2));
    std::vector<HalfEdge> cycle;
    std::string tok;
    while (vs >> tok) {
      int64_t h = p.parse_int(tok, p.line.find(tok));
      if (h < 0 || h >= 2 * n) p.err("half-edge " + tok + " out of range", p.line.find(tok));
      if (listed[h]) p.err("half-edge " + tok + " listed twice", p.line.find(tok));
      listed[h] = 1;
      cycle.push_back(static_cast<HalfEdge>(h));
    }
    if (cycle.empty()) p.err("empty vertex line", col);
    for (size_t i = 0; i < cycle.size(); ++i)
      rotation[cycle[i]] = cycle[(i + 1) % cycle.size()];
    total += static_cast<int64_t>(cycle.size());
  }
  if (total != 2 * n)
    fail(ErrorKind::parse_error, "parse error at line " + std::to_string(p.line_no) +
                                     ", column 1: listed " + std::to_string(total) +
                                     " half-edges, expected " + std::to_string(2 * n));
  return PlanarMap::build(std::move(rotation), static_cast<HalfEdge>(root));
}

}  // namespace mapbij
