#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mapbij/planar_map.hpp"
#include "util.hpp"

using namespace mapbij;
using namespace testutil;

// Independent oracle for rooted-map isomorphism: propagate the unique
// candidate bijection from root and check it commutes with rotation and
// opposite. Does not share code with canonical_code.
static bool naive_rooted_isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.half_edge_count() != b.half_edge_count()) return false;
  if (a.is_empty()) return true;
  std::vector<HalfEdge> pi(a.half_edge_count(), kNoHalfEdge);
  std::vector<HalfEdge> stack;
  auto set_pair = [&](HalfEdge x, HalfEdge y) {
    if (pi[x] != kNoHalfEdge) return pi[x] == y;
    pi[x] = y;
    stack.push_back(x);
    return true;
  };
  if (!set_pair(a.root(), b.root())) return false;
  while (!stack.empty()) {
    HalfEdge x = stack.back();
    stack.pop_back();
    if (!set_pair(a.rotation(x), b.rotation(pi[x]))) return false;
    if (!set_pair(opposite(x), opposite(pi[x]))) return false;
  }
  std::set<HalfEdge> image(pi.begin(), pi.end());
  return image.count(kNoHalfEdge) == 0 &&
         image.size() == static_cast<size_t>(a.half_edge_count());
}

TEST_CASE("build: smallest map") {
  PlanarMap m = single_edge();
  CHECK(m.edge_count() == 1);
  CHECK(m.vertex_count() == 2);
  CHECK(m.face_count() == 1);
}

TEST_CASE("build: interleaved bouquet is rejected as non-planar") {
  CHECK(genus(interleaved_bouquet_rotation()) == 1);
  CHECK_THROWS_WITH_AS(PlanarMap::build(interleaved_bouquet_rotation(), 0),
                       doctest::Contains("Euler defect"), Error);
  try {
    PlanarMap::build(interleaved_bouquet_rotation(), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_planar);
  }
}

TEST_CASE("build: two separate edges are rejected as disconnected") {
  try {
    PlanarMap::build({0, 1, 2, 3}, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::disconnected);
  }
}

TEST_CASE("build: bad inputs") {
  CHECK_THROWS_AS(PlanarMap::build({0, 1, 2}, 0), Error);       // odd pairing
  CHECK_THROWS_AS(PlanarMap::build({0, 0}, 0), Error);          // not a permutation
  CHECK_THROWS_AS(PlanarMap::build({0, 1}, 5), Error);          // root out of range
  CHECK_THROWS_AS(PlanarMap::build({}, 0), Error);              // empty map takes no root
  CHECK(PlanarMap::empty().is_empty());
}

TEST_CASE("faces: external face first") {
  auto f1 = faces(single_edge());
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].size() == 2);

  auto f2 = faces(doubled_edge());
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].size() == 2);
  CHECK(f2[1].size() == 2);
  CHECK(f2[0][0] == 0);  // external face holds the root

  auto f3 = faces(path3());
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].size() == 4);
}

TEST_CASE("genus") {
  CHECK(genus(single_edge()) == 0);
  CHECK(genus(doubled_edge()) == 0);
  CHECK(genus(interleaved_bouquet_rotation()) == 1);
}

TEST_CASE("dual: single edge <-> loop") {
  PlanarMap d = dual(single_edge());
  CHECK(d.vertex_count() == 1);
  CHECK(d.face_count() == 2);
  CHECK(d.vertex_degree(0) == 2);
  CHECK(isomorphic(d, loop_map()));
}

TEST_CASE("dual: doubled edge is self-dual up to rooting") {
  PlanarMap d = dual(doubled_edge());
  CHECK(d.vertex_count() == 2);
  CHECK(d.face_count() == 2);
  bool some_rooting = false;
  for (HalfEdge h = 0; h < 4; ++h)
    some_rooting |= isomorphic(PlanarMap::build(d.rotation_array(), h), doubled_edge());
  CHECK(some_rooting);
}

TEST_CASE("dual: degree exchange and double dual on hand examples") {
  for (const PlanarMap& m : {single_edge(), loop_map(), doubled_edge(), path3(), path3(1)}) {
    PlanarMap d = dual(m);
    auto fd = faces(m);
    std::multiset<size_t> mf, dv;
    for (auto& c : fd) mf.insert(c.size());
    for (int v = 0; v < d.vertex_count(); ++v) dv.insert(static_cast<size_t>(d.vertex_degree(v)));
    CHECK(mf == dv);
    CHECK(canonical_code(dual(d)) == canonical_code(reverse_root(m)));
  }
}

TEST_CASE("bipartite coloring") {
  PlanarMap m = single_edge();
  auto col = bipartite_coloring(m);
  CHECK(col[m.origin(m.root())] == VertexColor::white);
  CHECK(col[m.end(m.root())] == VertexColor::black);

  CHECK_FALSE(is_bipartite(loop_map()));
  CHECK(is_bipartite(doubled_edge()));
}

TEST_CASE("degree distribution") {
  CHECK(degree_distribution(doubled_edge(), DegreeMode::faces) ==
        DegreeDistribution({2}));
  CHECK(degree_distribution(path3(), DegreeMode::faces) == DegreeDistribution({0, 1}));
  try {
    degree_distribution(single_edge(), DegreeMode::vertices);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::odd_degree);
  }
}

TEST_CASE("canonical code: relabeling invariance") {
  // path3 with the two edge id pairs swapped: 0,1 <-> 2,3
  PlanarMap relabeled = PlanarMap::build(rotation_from_cycles(4, {{2}, {3, 0}, {1}}), 2);
  CHECK(canonical_code(relabeled) == canonical_code(path3()));
  CHECK(relabeled.rotation_array() != path3().rotation_array());
}

TEST_CASE("canonical code: path3 has two inequivalent rootings") {
  std::set<std::string> codes;
  for (HalfEdge h = 0; h < 4; ++h) codes.insert(canonical_code(path3(h)));
  CHECK(codes.size() == 2);  // Catalan(2) rooted plane trees with 2 edges
  CHECK(canonical_code(path3(0)) == canonical_code(path3(3)));
  CHECK(canonical_code(path3(0)) != canonical_code(path3(1)));
}

TEST_CASE("canonical code: doubled edge rootings agree") {
  std::set<std::string> codes;
  for (HalfEdge h = 0; h < 4; ++h)
    codes.insert(canonical_code(PlanarMap::build(doubled_edge().rotation_array(), h)));
  CHECK(codes.size() == 1);
}

TEST_CASE("canonical code matches the naive isomorphism oracle") {
  std::vector<PlanarMap> zoo = {single_edge(), loop_map(),  doubled_edge(),
                                path3(0),      path3(1),    path3(3),
                                dual(path3()), dual(doubled_edge())};
  for (const auto& a : zoo)
    for (const auto& b : zoo)
      CHECK((canonical_code(a) == canonical_code(b)) == naive_rooted_isomorphic(a, b));
}

TEST_CASE("serialize: format and round trip") {
  CHECK(serialize(single_edge()) == "map n=1 root=0\nv: 0\nv: 1\n");
  for (const PlanarMap& m : {single_edge(), loop_map(), doubled_edge(), path3(1)}) {
    PlanarMap back = deserialize(serialize(m));
    CHECK(back == m);
    CHECK(canonical_code(back) == canonical_code(m));
  }
  CHECK(serialize(PlanarMap::empty()) == "map n=0\n");
  CHECK(deserialize("map n=0\n").is_empty());
}

TEST_CASE("deserialize: errors carry line and column") {
  try {
    deserialize("");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(deserialize("map n=1 root=0\nv: 0 0\nv: 1\n"), Error);
  CHECK_THROWS_AS(deserialize("map n=1 root=0\nv: 0 9\n"), Error);
  CHECK_THROWS_AS(deserialize("map n=1 root=0\nv: 0\n"), Error);  // missing half-edge 1
  CHECK_THROWS_AS(deserialize("xmap\n"), Error);
}

TEST_CASE("degree distribution arithmetic") {
  DegreeDistribution d({1, 1});
  CHECK(d.edges() == 3);
  CHECK(d.faces() == 2);
  CHECK(d.vertices() == 3);
  CHECK(DegreeDistribution({1, 0}) == DegreeDistribution({1}));
  CHECK(d.splits().size() == 4);
  CHECK(DegreeDistribution::parse("1,1") == d);
  CHECK(DegreeDistribution({2}).to_string() == "2");

  auto all4 = DegreeDistribution::all_up_to_edges(4);
  // n=0:1, n=1:1, n=2:2, n=3:3, n=4:5 partitions
  CHECK(all4.size() == 12);
  CHECK(std::is_sorted(all4.begin(), all4.end(),
                       [](const auto& a, const auto& b) { return a < b; }));
}
