#pragma once

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <vector>

namespace lpa {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool is_proper_subset(const VertexSet& a, const VertexSet& b) {
  return a != b && is_subset(a, b);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(r, r.end()));
  return r;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.end()));
  return r;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  auto it_a = a.begin();
  auto it_b = b.begin();
  while (it_a != a.end() && it_b != b.end()) {
    if (*it_a < *it_b) {
      ++it_a;
    } else if (*it_b < *it_a) {
      ++it_b;
    } else {
      return true;
    }
  }
  return false;
}

// Deterministic "{a,b,c}" rendering used in reports, labels and error text.
inline std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ",";
    out += v;
    first = false;
  }
  out += "}";
  return out;
}

inline VertexSet to_set(const std::vector<Vertex>& vs) {
  return VertexSet(vs.begin(), vs.end());
}

}  // namespace lpa
