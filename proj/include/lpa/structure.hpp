#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// A hereditary saturated vertex set together with its breaking vertices.
struct HSatSet {
  VertexSet H;
  VertexSet breaking;  // computed, not free data

  friend bool operator==(const HSatSet&, const HSatSet&) = default;
  friend auto operator<=>(const HSatSet&, const HSatSet&) = default;
};

struct AdmissiblePair {
  VertexSet H;
  VertexSet S;  // subset of the breaking vertices of H

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

// A vertex-simple directed cycle, stored in its canonical rotation: the
// lexicographically least vertex first. base() is that vertex; consecutive
// vertices (wrapping around) are joined by edges of the graph.
struct Cycle {
  std::vector<Vertex> verts;

  const Vertex& base() const { return verts.front(); }
  VertexSet support() const { return VertexSet(verts.begin(), verts.end()); }
  std::size_t length() const { return verts.size(); }
  std::string to_text() const;  // "(v0 v1 v2)"

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

struct StructureCaps {
  std::size_t max_hsat_sets = std::size_t{1} << 20;
  std::size_t max_cycles = 1000000;
};

bool is_hereditary(const Graph& g, const VertexSet& x);

// Saturated: no regular vertex outside x has all its edge targets inside x.
// Sinks and infinite emitters are never forced in.
bool is_saturated(const Graph& g, const VertexSet& x);

// Least hereditary saturated superset, with its breaking vertices.
HSatSet hereditary_saturated_closure(const Graph& g, const VertexSet& x);

// All hereditary saturated subsets, sorted; CapExceeded beyond the cap.
std::vector<HSatSet> enumerate_hsat(const Graph& g,
                                    const StructureCaps& caps = {});

// Infinite emitters outside h with at least one and finitely many edge units
// into the complement of h. Requires h hereditary saturated.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

// The quotient graph for an admissible pair (h, s): vertices outside h plus
// a primed sink v' for every breaking vertex v not in s; edges with target
// outside h survive, and each such edge into a primed-vertex original gains
// a parallel copy ending at the primed sink.
Graph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s);

// Maximal-tail test for m inside the subgraph induced on `within`:
//   MT-1  upward closed under reachability,
//   MT-2  every regular vertex of m keeps an edge into m,
//   MT-3  every two vertices of m have a common descendant in m,
// all relative to the induced subgraph. Empty sets are not tails.
bool is_maximal_tail(const Graph& g, const VertexSet& m);
bool is_maximal_tail(const Graph& g, const VertexSet& m,
                     const VertexSet& within);

// All maximal tails of the subgraph induced on `within` (the whole graph by
// default): non-empty complements of hereditary saturated sets that are
// downward directed. Sorted.
std::vector<VertexSet> maximal_tails(const Graph& g,
                                     const StructureCaps& caps = {});
std::vector<VertexSet> maximal_tails(const Graph& g, const VertexSet& within,
                                     const StructureCaps& caps = {});

// All vertex-simple cycles up to rotation, canonically rotated and sorted;
// CapExceeded beyond the cap. Parallel bundles yield one entry (see
// cycle_copies for the bundle count).
std::vector<Cycle> enumerate_cycles(const Graph& g,
                                    const StructureCaps& caps = {});

// Number of parallel copies of the cycle, clamped to [1, 2]: 1 when every
// edge of the cycle is a simple edge, 2 when some edge is a genuine bundle.
std::uint64_t cycle_copies(const Graph& g, const Cycle& c);

// Validates that c really is a cycle of g (InvalidCycle otherwise).
void require_cycle(const Graph& g, const Cycle& c);

// Some vertex of c emits an edge unit besides the single cycle edge leaving
// it: a different target, or the cycle target with multiplicity >= 2.
bool has_exit(const Graph& g, const Cycle& c);

// Condition (L): every cycle has an exit.
bool condition_L(const Graph& g, const StructureCaps& caps = {});

// Condition (K): no vertex is the base of exactly one closed simple path
// (a closed path that returns to its base exactly once at the end).
// Decided by a saturating path count, independently of enumerate_cycles.
bool condition_K(const Graph& g);

// A vertex basing exactly one closed simple path, if any (a (K)-witness).
std::optional<Vertex> condition_K_witness(const Graph& g);

// Cycles without (K): cycles c such that every vertex of c lies on no other
// cycle and on no parallel copy of c. Empty exactly when condition_K holds.
std::vector<Cycle> cycles_without_K(const Graph& g,
                                    const StructureCaps& caps = {});

}  // namespace lpa
