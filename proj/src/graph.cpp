#include "lpa/graph.hpp"

#include <deque>

#include "lpa/errors.hpp"

namespace lpa {

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Sink: return "sink";
    case VertexClass::Regular: return "regular";
    case VertexClass::InfiniteEmitter: return "infinite-emitter";
  }
  return "?";
}

Graph Graph::build(const std::vector<Vertex>& vertices,
                   const std::vector<EdgeSpec>& edges) {
  Graph g;
  for (const auto& v : vertices) {
    if (!g.vertices_.insert(v).second) {
      fail(ErrorCode::DuplicateVertex, "vertex listed twice: " + v);
    }
  }
  for (const auto& v : g.vertices_) {
    g.out_[v];
    g.in_[v];
  }
  for (const auto& e : edges) {
    if (!g.has_vertex(e.src)) {
      fail(ErrorCode::UnknownVertex, "edge source not a vertex: " + e.src);
    }
    if (!g.has_vertex(e.dst)) {
      fail(ErrorCode::UnknownVertex, "edge target not a vertex: " + e.dst);
    }
    if (!e.mult.infinite && e.mult.count == 0) {
      fail(ErrorCode::ParseError,
           "edge multiplicity must be >= 1: " + e.src + "->" + e.dst);
    }
    g.out_[e.src][e.dst] += e.mult;
    g.in_[e.dst][e.src] += e.mult;
  }
  return g;
}

void Graph::require_vertex(const Vertex& v) const {
  if (!has_vertex(v)) fail(ErrorCode::UnknownVertex, "no such vertex: " + v);
}

void Graph::require_vertices(const VertexSet& xs) const {
  for (const auto& v : xs) require_vertex(v);
}

const std::map<Vertex, Mult>& Graph::out_edges(const Vertex& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) fail(ErrorCode::UnknownVertex, "no such vertex: " + v);
  return it->second;
}

const std::map<Vertex, Mult>& Graph::in_edges(const Vertex& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) fail(ErrorCode::UnknownVertex, "no such vertex: " + v);
  return it->second;
}

std::vector<EdgeSpec> Graph::edge_list() const {
  std::vector<EdgeSpec> out;
  for (const auto& [src, bundle] : out_) {
    for (const auto& [dst, mult] : bundle) {
      out.push_back(EdgeSpec{src, dst, mult});
    }
  }
  return out;  // map iteration is already (src, dst)-sorted
}

Graph build_graph(const std::vector<Vertex>& vertices,
                  const std::vector<EdgeSpec>& edges) {
  return Graph::build(vertices, edges);
}

VertexClass classify_vertex(const Graph& g, const Vertex& v) {
  const auto& bundle = g.out_edges(v);
  if (bundle.empty()) return VertexClass::Sink;
  for (const auto& [dst, mult] : bundle) {
    if (mult.is_omega()) return VertexClass::InfiniteEmitter;
  }
  return VertexClass::Regular;
}

namespace {

// BFS over merged bundles, following either out- or in-adjacency.
VertexSet bfs(const Graph& g, const VertexSet& seeds, bool forward) {
  VertexSet seen = seeds;
  std::deque<Vertex> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    const auto& bundle = forward ? g.out_edges(v) : g.in_edges(v);
    for (const auto& [w, mult] : bundle) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

}  // namespace

bool reaches(const Graph& g, const Vertex& u, const Vertex& v) {
  g.require_vertex(u);
  g.require_vertex(v);
  return tree(g, u).count(v) != 0;
}

VertexSet tree(const Graph& g, const Vertex& v) {
  g.require_vertex(v);
  return bfs(g, VertexSet{v}, /*forward=*/true);
}

VertexSet cone(const Graph& g, const Vertex& v) {
  g.require_vertex(v);
  return bfs(g, VertexSet{v}, /*forward=*/false);
}

VertexSet tree_of_set(const Graph& g, const VertexSet& xs) {
  g.require_vertices(xs);
  if (xs.empty()) return {};
  return bfs(g, xs, /*forward=*/true);
}

Graph restricted_subgraph(const Graph& g, const VertexSet& x) {
  g.require_vertices(x);
  std::vector<Vertex> vertices(x.begin(), x.end());
  std::vector<EdgeSpec> edges;
  for (const auto& v : x) {
    for (const auto& [dst, mult] : g.out_edges(v)) {
      if (x.count(dst)) edges.push_back(EdgeSpec{v, dst, mult});
    }
  }
  return Graph::build(vertices, edges);
}

bool downward_directed(const Graph& g) {
  const auto& vs = g.vertex_set();
  if (vs.empty()) return false;
  std::map<Vertex, VertexSet> trees;
  for (const auto& v : vs) trees.emplace(v, tree(g, v));
  for (const auto& u : vs) {
    for (const auto& v : vs) {
      if (u < v && !intersects(trees.at(u), trees.at(v))) return false;
    }
  }
  return true;
}

}  // namespace lpa
