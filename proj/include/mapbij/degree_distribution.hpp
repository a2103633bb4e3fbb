#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mapbij/common.hpp"

namespace mapbij {

// Finite sequence d with d_i = number of faces of degree 2i (bipartite maps)
// or vertices of degree 2i (eulerian maps and trees). Trailing zeros are
// normalized away, so (1,0) == (1). The empty sequence is the all-zero
// distribution with B(0) = 0 by convention.
class DegreeDistribution {
 public:
  DegreeDistribution() = default;
  explicit DegreeDistribution(std::vector<int64_t> d);

  // d_i for i >= 1; zero beyond the stored length.
  int64_t at(int i) const;
  int max_index() const { return static_cast<int>(d_.size()); }
  bool is_zero() const { return d_.empty(); }

  int64_t edges() const;     // n(d) = sum i * d_i
  int64_t faces() const;     // f(d) = sum d_i
  int64_t vertices() const;  // v(d) = n + 2 - f

  DegreeDistribution operator+(const DegreeDistribution& o) const;
  bool operator==(const DegreeDistribution& o) const { return d_ == o.d_; }
  bool operator<(const DegreeDistribution& o) const;

  // All ordered pairs (s, t) with s + t = *this, including the two trivial
  // splits with a zero part.
  std::vector<std::pair<DegreeDistribution, DegreeDistribution>> splits() const;

  // "d1,d2,..."; "0" for the zero distribution.
  std::string to_string() const;
  static DegreeDistribution parse(const std::string& text);

  // Every distribution with edges() <= max_edges, ordered by (n, lex).
  static std::vector<DegreeDistribution> all_up_to_edges(int max_edges);

  const std::vector<int64_t>& raw() const { return d_; }

 private:
  std::vector<int64_t> d_;
};

}  // namespace mapbij
