#pragma once

// Shared graph fixtures used across the test suites.  Each builder returns a
// freshly constructed graph so tests can mutate derived data freely.

#include <vector>

#include "lpa/graph.hpp"

namespace fixtures {

using lpa::EdgeSpec;
using lpa::Graph;
using lpa::Mult;
using lpa::Vertex;
using lpa::VertexSet;

inline EdgeSpec ed(const Vertex& s, const Vertex& d, std::uint64_t m = 1) {
  return EdgeSpec{s, d, Mult::finite(m)};
}

inline EdgeSpec wedge(const Vertex& s, const Vertex& d) {
  return EdgeSpec{s, d, Mult::omega()};
}

// Nine vertices, row-finite, acyclic.  Three "layers": w-sources over sink w,
// u-columns over sink u3, and v-sources over sink v.
inline Graph e1() {
  return lpa::build_graph({"w", "w1", "w2", "u1", "u2", "u3", "v1", "v2", "v"},
                          {ed("w1", "w"), ed("w2", "w"), ed("w1", "u3"),
                           ed("w2", "u3"), ed("u1", "u3"), ed("u2", "u3"),
                           ed("v1", "u1"), ed("v2", "u2"), ed("v1", "v"),
                           ed("v2", "v")});
}

// Same shape as e1 but the bundle v1 -> u1 carries infinitely many edges, so
// v1 becomes an infinite emitter.
inline Graph e2() {
  return lpa::build_graph({"w", "w1", "w2", "u1", "u2", "u3", "v1", "v2", "v"},
                          {ed("w1", "w"), ed("w2", "w"), ed("w1", "u3"),
                           ed("w2", "u3"), ed("u1", "u3"), ed("u2", "u3"),
                           wedge("v1", "u1"), ed("v2", "u2"), ed("v1", "v"),
                           ed("v2", "v")});
}

// e2 plus the return edge v -> v1, creating the cycle (v v1) with exits.
inline Graph e3() {
  return lpa::build_graph({"w", "w1", "w2", "u1", "u2", "u3", "v1", "v2", "v"},
                          {ed("w1", "w"), ed("w2", "w"), ed("w1", "u3"),
                           ed("w2", "u3"), ed("u1", "u3"), ed("u2", "u3"),
                           wedge("v1", "u1"), ed("v2", "u2"), ed("v1", "v"),
                           ed("v2", "v"), ed("v", "v1")});
}

// Two overlapping cycles through v1: a 2-cycle with u and a 4-cycle through
// v2, v3, v4.  Cofinal, no sinks, no infinite emitters.
inline Graph e4() {
  return lpa::build_graph({"u", "v1", "v2", "v3", "v4"},
                          {ed("u", "v1"), ed("v1", "u"), ed("v1", "v2"),
                           ed("v2", "v3"), ed("v3", "v4"), ed("v4", "v1")});
}

// Single vertex with a single loop.
inline Graph loop_graph() {
  return lpa::build_graph({"v"}, {ed("v", "v")});
}

// Single vertex with a double loop (rose with two petals).
inline Graph rose2() {
  return lpa::build_graph({"v"}, {ed("v", "v", 2)});
}

// z carries a double loop and feeds the no-exit loop at v through u.
inline Graph coht() {
  return lpa::build_graph(
      {"z", "u", "v"},
      {ed("z", "z", 2), ed("z", "u"), ed("u", "v"), ed("v", "v")});
}

// Two isolated vertices (two sinks, disconnected).
inline Graph iso2() {
  return lpa::build_graph({"a", "b"}, {});
}

// Loop at x with an exit into the no-exit loop at v.
inline Graph xloop() {
  return lpa::build_graph({"x", "v"},
                          {ed("x", "x"), ed("x", "v"), ed("v", "v")});
}

// Two stacked exit-free loops over an omega sink: the infinite emitter m is
// a breaking vertex for {s} and for {s,a}, so containment between the two
// non-graded families runs through the breaking-vertex comparison.
inline Graph omega_tower() {
  return lpa::build_graph({"s", "m", "a", "b"},
                          {wedge("m", "s"), ed("m", "b"), ed("b", "b"),
                           ed("b", "a"), ed("a", "a")});
}

// Named vertex sets for the e1/e2/e3 family.
inline VertexSet set_H() { return {"u1", "u2", "u3"}; }
inline VertexSet set_H1() { return {"u1", "u2", "u3", "w", "w1", "w2"}; }
inline VertexSet set_H2() { return {"u1", "u2", "u3", "v", "v1", "v2"}; }
inline VertexSet set_H3p() {
  return {"u1", "u2", "u3", "v", "v2", "w", "w1", "w2"};
}
inline VertexSet set_H4() { return {"u1", "u2", "u3", "v", "v2"}; }

inline VertexSet all_e_vertices() {
  return {"u1", "u2", "u3", "v", "v1", "v2", "w", "w1", "w2"};
}

// Enumerate every subset of `vs` (callers keep |vs| small).
inline std::vector<VertexSet> all_subsets(const VertexSet& vs) {
  std::vector<Vertex> order(vs.begin(), vs.end());
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << order.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << order.size()); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(order[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace fixtures
