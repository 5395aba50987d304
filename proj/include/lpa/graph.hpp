#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lpa/mult.hpp"
#include "lpa/vertex_set.hpp"

namespace lpa {

// Sink: emits nothing. Regular: emits a positive finite number of edge
// units. InfiniteEmitter: emits an omega bundle.
enum class VertexClass { Sink, Regular, InfiniteEmitter };

std::string to_string(VertexClass c);

struct EdgeSpec {
  Vertex src;
  Vertex dst;
  Mult mult;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

// Finite directed multigraph with merged edge bundles. Vertices are held in
// lexicographic order and parallel (src,dst) specs are merged by summing
// multiplicities (omega absorbs), so structurally equal graphs compare equal.
class Graph {
 public:
  Graph() = default;

  static Graph build(const std::vector<Vertex>& vertices,
                     const std::vector<EdgeSpec>& edges);

  const VertexSet& vertex_set() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  bool has_vertex(const Vertex& v) const { return vertices_.count(v) != 0; }
  void require_vertex(const Vertex& v) const;
  void require_vertices(const VertexSet& xs) const;

  // Merged out-/in-bundles keyed by the far endpoint. Empty map for sinks /
  // sources; errors with UnknownVertex for foreign names.
  const std::map<Vertex, Mult>& out_edges(const Vertex& v) const;
  const std::map<Vertex, Mult>& in_edges(const Vertex& v) const;

  // Deterministic merged edge list, sorted by (src, dst).
  std::vector<EdgeSpec> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  std::map<Vertex, std::map<Vertex, Mult>> out_;
  std::map<Vertex, std::map<Vertex, Mult>> in_;
};

Graph build_graph(const std::vector<Vertex>& vertices,
                  const std::vector<EdgeSpec>& edges);

VertexClass classify_vertex(const Graph& g, const Vertex& v);

// Reflexive-transitive reachability u >= v.
bool reaches(const Graph& g, const Vertex& u, const Vertex& v);

// tree(v) = everything v reaches; cone(v) = everything that reaches v.
// Both include v itself.
VertexSet tree(const Graph& g, const Vertex& v);
VertexSet cone(const Graph& g, const Vertex& v);

// Forward closure of a set of seeds (union of their trees).
VertexSet tree_of_set(const Graph& g, const VertexSet& xs);

// Subgraph induced on x: vertices x, edges with both endpoints in x,
// multiplicities untouched.
Graph restricted_subgraph(const Graph& g, const VertexSet& x);

// Every pair of vertices has a common descendant (the whole-vertex-set
// downward-directedness test; also decides whether the algebra is a prime
// ring). Empty graphs count as false.
bool downward_directed(const Graph& g);

}  // namespace lpa
