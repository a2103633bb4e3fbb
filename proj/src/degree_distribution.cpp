#include "mapbij/degree_distribution.hpp"

#include <algorithm>
#include <sstream>

namespace mapbij {

DegreeDistribution::DegreeDistribution(std::vector<int64_t> d) : d_(std::move(d)) {
  for (int64_t x : d_)
    if (x < 0) fail(ErrorKind::parse_error, "negative entry in degree distribution");
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
}

int64_t DegreeDistribution::at(int i) const {
  if (i < 1 || i > static_cast<int>(d_.size())) return 0;
  return d_[i - 1];
}

int64_t DegreeDistribution::edges() const {
  int64_t n = 0;
  for (size_t k = 0; k < d_.size(); ++k) n += static_cast<int64_t>(k + 1) * d_[k];
  return n;
}

int64_t DegreeDistribution::faces() const {
  int64_t f = 0;
  for (int64_t x : d_) f += x;
  return f;
}

int64_t DegreeDistribution::vertices() const { return edges() + 2 - faces(); }

DegreeDistribution DegreeDistribution::operator+(const DegreeDistribution& o) const {
  std::vector<int64_t> d(std::max(d_.size(), o.d_.size()), 0);
  for (size_t k = 0; k < d.size(); ++k) d[k] = at(static_cast<int>(k + 1)) + o.at(static_cast<int>(k + 1));
  return DegreeDistribution(std::move(d));
}

bool DegreeDistribution::operator<(const DegreeDistribution& o) const {
  if (edges() != o.edges()) return edges() < o.edges();
  return d_ < o.d_;
}

std::vector<std::pair<DegreeDistribution, DegreeDistribution>> DegreeDistribution::splits() const {
  std::vector<std::pair<DegreeDistribution, DegreeDistribution>> out;
  std::vector<int64_t> s(d_.size(), 0);
  while (true) {
    std::vector<int64_t> t(d_.size(), 0);
    for (size_t k = 0; k < d_.size(); ++k) t[k] = d_[k] - s[k];
    out.emplace_back(DegreeDistribution(s), DegreeDistribution(std::move(t)));
    // mixed-radix increment of s within 0..d
    size_t k = 0;
    for (; k < d_.size(); ++k) {
      if (s[k] < d_[k]) {
        ++s[k];
        std::fill(s.begin(), s.begin() + k, 0);
        break;
      }
    }
    if (k == d_.size()) break;
  }
  return out;
}

std::string DegreeDistribution::to_string() const {
  if (d_.empty()) return "0";
  std::ostringstream os;
  for (size_t k = 0; k < d_.size(); ++k) {
    if (k) os << ',';
    os << d_[k];
  }
  return os.str();
}

DegreeDistribution DegreeDistribution::parse(const std::string& text) {
  std::vector<int64_t> d;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t pos = 0;
    int64_t v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::parse_error, "bad degree distribution entry '" + item + "'");
    }
    if (pos != item.size() || v < 0)
      fail(ErrorKind::parse_error, "bad degree distribution entry '" + item + "'");
    d.push_back(v);
  }
  if (d.empty()) fail(ErrorKind::parse_error, "empty degree distribution");
  return DegreeDistribution(std::move(d));
}

static void gen_rec(int remaining, int min_i, std::vector<int64_t>& cur,
                    std::vector<DegreeDistribution>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int i = min_i; i <= remaining; ++i) {
    if (static_cast<int>(cur.size()) < i) cur.resize(i, 0);
    ++cur[i - 1];
    gen_rec(remaining - i, i, cur, out);
    --cur[i - 1];
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
}

std::vector<DegreeDistribution> DegreeDistribution::all_up_to_edges(int max_edges) {
  std::vector<DegreeDistribution> out;
  for (int n = 0; n <= max_edges; ++n) {
    std::vector<DegreeDistribution> of_n;
    std::vector<int64_t> cur;
    gen_rec(n, 1, cur, of_n);
    std::sort(of_n.begin(), of_n.end());
    out.insert(out.end(), of_n.begin(), of_n.end());
  }
  return out;
}

}  // namespace mapbij
