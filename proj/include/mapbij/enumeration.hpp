#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mapbij/degree_distribution.hpp"
#include "mapbij/eulerian_tree.hpp"
#include "mapbij/planar_map.hpp"

namespace mapbij {

using BigInt = boost::multiprecision::cpp_int;

// Exhaustive generation of all rooted connected planar maps with exactly n
// edges, each exactly once, in canonical labeling (the canonical relabeling
// of every emitted map is the identity). Backtracking over breadth-first
// canonical construction; higher-genus rotation systems are generated and
// discarded at the Euler check, so this route shares nothing with the
// tree-based route and serves as its oracle.
void for_each_planar_map(int n, const std::function<void(const PlanarMap&)>& fn);
std::vector<PlanarMap> all_planar_maps(int n);

// Brute-force route: all rooted bipartite planar maps of face degree
// distribution d, canonically labeled, sorted by canonical code.
std::vector<PlanarMap> bipartite_maps_brute_force(const DegreeDistribution& d);

// Tree route: every balanced eulerian tree of degree distribution d exactly
// once (empty for infeasible d).
std::vector<EulerianTree> balanced_eulerian_trees(const DegreeDistribution& d);
// All eulerian trees of distribution d rooted at a black leaf.
std::vector<EulerianTree> eulerian_trees(const DegreeDistribution& d);

// Bipartite maps via trees, closure and duality; sorted by canonical code.
std::vector<PlanarMap> bipartite_maps(const DegreeDistribution& d);

// Memoized B(d): cardinality of bipartite_maps(d), with B(0) = 0.
class CountTable {
 public:
  const BigInt& count(const DegreeDistribution& d);

 private:
  std::map<DegreeDistribution, BigInt> table_;
};

enum class Identity { vertex, face, origin };

struct IdentityReport {
  DegreeDistribution dist;
  BigInt b;
  BigInt lhs;
  BigInt rhs;
  bool ok() const { return lhs == rhs; }
  // "d=<csv> B=<count> lhs=<int> rhs=<int> ok=<bool>"
  std::string line() const;
};

// Exact big-integer check of one identity at one distribution.
//   vertex: 4(f-1)B(d)            = sum v(s)v(t)B(s)B(t)
//   face:   (f-1)(f-2)B(d)        = sum (f1-1)v2(v2-1)B(s)B(t)   (ordered form)
//   origin: [C(n+1,2)-C(v,2)]B(d) = sum (1+n(s))C(v(t),2)B(s)B(t)
IdentityReport verify_identity(const DegreeDistribution& d, Identity which, CountTable& counts);

// Re-runs the derivation that turns the two marked identities into the
// origin equation, checking every intermediate line as exact arithmetic.
bool verify_derivation_chain(const DegreeDistribution& d, CountTable& counts);

}  // namespace mapbij
