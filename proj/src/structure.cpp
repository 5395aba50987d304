#include "lpa/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

std::string Cycle::to_text() const {
  std::string out = "(";
  bool first = true;
  for (const auto& v : verts) {
    if (!first) out += " ";
    out += v;
    first = false;
  }
  out += ")";
  return out;
}

bool is_hereditary(const Graph& g, const VertexSet& x) {
  g.require_vertices(x);
  for (const auto& v : x) {
    for (const auto& [dst, mult] : g.out_edges(v)) {
      if (!x.count(dst)) return false;
    }
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& x) {
  g.require_vertices(x);
  for (const auto& v : g.vertex_set()) {
    if (x.count(v)) continue;
    if (classify_vertex(g, v) != VertexClass::Regular) continue;
    bool all_in = true;
    for (const auto& [dst, mult] : g.out_edges(v)) {
      if (!x.count(dst)) {
        all_in = false;
        break;
      }
    }
    if (all_in) return false;
  }
  return true;
}

namespace {

// Core of the closure: alternate hereditary and saturation sweeps until the
// set is stable. Termination: the set only grows inside a finite vertex set.
VertexSet closure_set(const Graph& g, const VertexSet& x) {
  VertexSet h = tree_of_set(g, x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : g.vertex_set()) {
      if (h.count(v)) continue;
      if (classify_vertex(g, v) != VertexClass::Regular) continue;
      bool all_in = true;
      for (const auto& [dst, mult] : g.out_edges(v)) {
        if (!h.count(dst)) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        h.insert(v);
        changed = true;
      }
    }
    // Newly forced vertices only point into h already, so the hereditary
    // sweep never needs repeating.
  }
  return h;
}

void require_hsat(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h) || !is_saturated(g, h)) {
    fail(ErrorCode::NotHereditarySaturated,
         "set is not hereditary saturated: " + format_set(h));
  }
}

}  // namespace

HSatSet hereditary_saturated_closure(const Graph& g, const VertexSet& x) {
  VertexSet h = closure_set(g, x);
  return HSatSet{h, breaking_vertices(g, h)};
}

std::vector<HSatSet> enumerate_hsat(const Graph& g, const StructureCaps& caps) {
  std::set<VertexSet> found;
  std::deque<VertexSet> queue;
  VertexSet bottom = closure_set(g, {});
  found.insert(bottom);
  queue.push_back(bottom);
  while (!queue.empty()) {
    VertexSet h = queue.front();
    queue.pop_front();
    for (const auto& v : g.vertex_set()) {
      if (h.count(v)) continue;
      VertexSet seed = h;
      seed.insert(v);
      VertexSet bigger = closure_set(g, seed);
      if (found.insert(bigger).second) {
        if (found.size() > caps.max_hsat_sets) {
          fail(ErrorCode::CapExceeded,
               "more hereditary saturated sets than the cap allows");
        }
        queue.push_back(bigger);
      }
    }
  }
  std::vector<HSatSet> out;
  out.reserve(found.size());
  for (const auto& h : found) {
    out.push_back(HSatSet{h, breaking_vertices(g, h)});
  }
  return out;  // std::set iteration gives a canonical sort
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  g.require_vertices(h);
  require_hsat(g, h);
  VertexSet out;
  for (const auto& v : g.vertex_set()) {
    if (h.count(v)) continue;
    if (classify_vertex(g, v) != VertexClass::InfiniteEmitter) continue;
    bool omega_outside = false;
    std::uint64_t units_outside = 0;
    for (const auto& [dst, mult] : g.out_edges(v)) {
      if (h.count(dst)) continue;
      if (mult.is_omega()) {
        omega_outside = true;
        break;
      }
      units_outside += mult.count;
    }
    if (!omega_outside && units_outside >= 1) out.insert(v);
  }
  return out;
}

Graph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s) {
  g.require_vertices(h);
  g.require_vertices(s);
  if (!is_hereditary(g, h) || !is_saturated(g, h)) {
    fail(ErrorCode::NotAdmissible,
         "first component is not hereditary saturated: " + format_set(h));
  }
  VertexSet breaking = breaking_vertices(g, h);
  if (!is_subset(s, breaking)) {
    fail(ErrorCode::NotAdmissible,
         "second component is not a set of breaking vertices: " +
             format_set(s));
  }
  VertexSet keep = set_difference(g.vertex_set(), h);
  VertexSet primed_originals = set_difference(breaking, s);

  std::vector<Vertex> vertices(keep.begin(), keep.end());
  std::map<Vertex, Vertex> primed_name;
  for (const auto& v : primed_originals) {
    Vertex name = v + "'";
    if (g.has_vertex(name)) {
      fail(ErrorCode::NotAdmissible,
           "primed vertex name collides with an existing vertex: " + name);
    }
    primed_name[v] = name;
    vertices.push_back(name);
  }

  std::vector<EdgeSpec> edges;
  for (const auto& v : keep) {
    for (const auto& [dst, mult] : g.out_edges(v)) {
      if (h.count(dst)) continue;
      edges.push_back(EdgeSpec{v, dst, mult});
      auto it = primed_name.find(dst);
      if (it != primed_name.end()) {
        edges.push_back(EdgeSpec{v, it->second, mult});
      }
    }
  }
  return Graph::build(vertices, edges);
}

namespace {

bool tail_conditions(const Graph& sub, const VertexSet& m) {
  if (m.empty()) return false;
  VertexSet complement = set_difference(sub.vertex_set(), m);
  // MT-1 is equivalent to the complement being closed under out-edges.
  if (!is_hereditary(sub, complement)) return false;
  // MT-2: regular vertices of m keep an edge into m.
  for (const auto& v : m) {
    if (classify_vertex(sub, v) != VertexClass::Regular) continue;
    bool into_m = false;
    for (const auto& [dst, mult] : sub.out_edges(v)) {
      if (m.count(dst)) {
        into_m = true;
        break;
      }
    }
    if (!into_m) return false;
  }
  // MT-3: pairwise common descendants inside m.
  std::map<Vertex, VertexSet> trees;
  for (const auto& v : m) trees.emplace(v, tree(sub, v));
  for (const auto& u : m) {
    for (const auto& v : m) {
      if (!(u < v)) continue;
      VertexSet common = set_intersection(trees.at(u), trees.at(v));
      if (!intersects(common, m)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_maximal_tail(const Graph& g, const VertexSet& m) {
  return is_maximal_tail(g, m, g.vertex_set());
}

bool is_maximal_tail(const Graph& g, const VertexSet& m,
                     const VertexSet& within) {
  g.require_vertices(within);
  for (const auto& v : m) {
    if (!within.count(v)) {
      fail(ErrorCode::UnknownVertex,
           "tail candidate leaves the ambient set at: " + v);
    }
  }
  Graph sub = restricted_subgraph(g, within);
  return tail_conditions(sub, m);
}

std::vector<VertexSet> maximal_tails(const Graph& g,
                                     const StructureCaps& caps) {
  return maximal_tails(g, g.vertex_set(), caps);
}

std::vector<VertexSet> maximal_tails(const Graph& g, const VertexSet& within,
                                     const StructureCaps& caps) {
  Graph sub = restricted_subgraph(g, within);
  std::vector<VertexSet> out;
  for (const auto& hs : enumerate_hsat(sub, caps)) {
    VertexSet m = set_difference(sub.vertex_set(), hs.H);
    if (m.empty()) continue;
    // Complement-of-hereditary-saturated already gives MT-1 and MT-2;
    // downward-directedness is the remaining filter.
    if (downward_directed(restricted_subgraph(sub, m))) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first enumeration of vertex-simple cycles whose least vertex is the
// start: only vertices >= start may appear, which also makes each cycle come
// out in canonical rotation exactly once.
void cycle_dfs(const Graph& g, const Vertex& start, std::vector<Vertex>& path,
               VertexSet& on_path, std::vector<Cycle>& out,
               const StructureCaps& caps) {
  const Vertex& v = path.back();
  for (const auto& [dst, mult] : g.out_edges(v)) {
    if (dst == start) {
      out.push_back(Cycle{path});
      if (out.size() > caps.max_cycles) {
        fail(ErrorCode::CapExceeded, "more cycles than the cap allows");
      }
      continue;
    }
    if (dst < start || on_path.count(dst)) continue;
    path.push_back(dst);
    on_path.insert(dst);
    cycle_dfs(g, start, path, on_path, out, caps);
    on_path.erase(dst);
    path.pop_back();
  }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g,
                                    const StructureCaps& caps) {
  std::vector<Cycle> out;
  for (const auto& start : g.vertex_set()) {
    std::vector<Vertex> path{start};
    VertexSet on_path{start};
    cycle_dfs(g, start, path, on_path, out, caps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_cycle(const Graph& g, const Cycle& c) {
  if (c.verts.empty()) fail(ErrorCode::InvalidCycle, "empty cycle");
  VertexSet seen;
  for (const auto& v : c.verts) {
    g.require_vertex(v);
    if (!seen.insert(v).second) {
      fail(ErrorCode::InvalidCycle, "vertex repeats in cycle: " + v);
    }
  }
  if (c.base() != *seen.begin()) {
    fail(ErrorCode::InvalidCycle,
         "cycle is not canonically rotated: " + c.to_text());
  }
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    const Vertex& a = c.verts[i];
    const Vertex& b = c.verts[(i + 1) % c.verts.size()];
    if (!g.out_edges(a).count(b)) {
      fail(ErrorCode::InvalidCycle, "missing cycle edge: " + a + "->" + b);
    }
  }
}

std::uint64_t cycle_copies(const Graph& g, const Cycle& c) {
  require_cycle(g, c);
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    const Vertex& a = c.verts[i];
    const Vertex& b = c.verts[(i + 1) % c.verts.size()];
    if (g.out_edges(a).at(b).clamp2() >= 2) return 2;
  }
  return 1;
}

bool has_exit(const Graph& g, const Cycle& c) {
  require_cycle(g, c);
  for (std::size_t i = 0; i < c.verts.size(); ++i) {
    const Vertex& a = c.verts[i];
    const Vertex& b = c.verts[(i + 1) % c.verts.size()];
    for (const auto& [dst, mult] : g.out_edges(a)) {
      if (dst != b) return true;
      if (mult.is_omega() || mult.count >= 2) return true;
    }
  }
  return false;
}

bool condition_L(const Graph& g, const StructureCaps& caps) {
  for (const auto& c : enumerate_cycles(g, caps)) {
    if (!has_exit(g, c)) return false;
  }
  return true;
}

namespace {

// Saturating count (clamped at 2) of closed simple paths based at v: walks
// that leave v, avoid v internally, and end with an edge back into v. Any
// vertex basing two such paths bases two of length <= 2n, so scanning
// lengths 1..2n decides "exactly one" exactly.
std::uint64_t closed_simple_path_count2(const Graph& g, const Vertex& v) {
  const std::size_t n = g.vertex_count();
  std::uint64_t total = 0;

  // Length 1: loops at v.
  auto loop = g.out_edges(v).find(v);
  if (loop != g.out_edges(v).end()) total += loop->second.clamp2();
  if (total >= 2) return 2;

  std::map<Vertex, std::uint64_t> walks;  // walks v -> w avoiding v, clamped
  for (const auto& [dst, mult] : g.out_edges(v)) {
    if (dst != v) walks[dst] = mult.clamp2();
  }
  for (std::size_t len = 2; len <= 2 * n; ++len) {
    std::map<Vertex, std::uint64_t> next;
    for (const auto& [w, count] : walks) {
      for (const auto& [dst, mult] : g.out_edges(w)) {
        std::uint64_t step = count * mult.clamp2();
        if (dst == v) {
          total += step;
          if (total >= 2) return 2;
        } else {
          auto& slot = next[dst];
          slot = std::min<std::uint64_t>(2, slot + step);
        }
      }
    }
    walks = std::move(next);
    if (walks.empty()) break;
  }
  return total;
}

}  // namespace

bool condition_K(const Graph& g) { return !condition_K_witness(g).has_value(); }

std::optional<Vertex> condition_K_witness(const Graph& g) {
  for (const auto& v : g.vertex_set()) {
    if (closed_simple_path_count2(g, v) == 1) return v;
  }
  return std::nullopt;
}

std::vector<Cycle> cycles_without_K(const Graph& g,
                                    const StructureCaps& caps) {
  std::vector<Cycle> cycles = enumerate_cycles(g, caps);
  // Weighted number of cycles through each vertex, copies counted, clamped.
  std::map<Vertex, std::uint64_t> through;
  std::vector<std::uint64_t> copies(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    copies[i] = cycle_copies(g, cycles[i]);
    for (const auto& v : cycles[i].verts) {
      auto& slot = through[v];
      slot = std::min<std::uint64_t>(2, slot + copies[i]);
    }
  }
  std::vector<Cycle> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    bool exclusive = true;
    for (const auto& v : cycles[i].verts) {
      if (through.at(v) != 1) {
        exclusive = false;
        break;
      }
    }
    if (exclusive) out.push_back(cycles[i]);
  }
  return out;  // input was sorted; the filter preserves that
}

}  // namespace lpa
