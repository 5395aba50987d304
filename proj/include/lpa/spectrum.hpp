#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/laurent.hpp"
#include "lpa/structure.hpp"

namespace lpa {

// A prime-ideal description. Graded ideals are admissible pairs (H, S);
// non-graded primes are generated by a graded part together with an
// irreducible polynomial evaluated along an exclusive exit-free cycle. A
// missing polynomial marks the whole one-parameter family (symbolic mode).
struct PrimeIdeal {
  enum class Kind { Graded, NonGraded };

  Kind kind = Kind::Graded;
  VertexSet H;
  VertexSet S;                      // graded only
  std::optional<Cycle> cycle;       // non-graded only
  std::optional<LaurentPoly> poly;  // non-graded; nullopt = family marker

  static PrimeIdeal graded(VertexSet h, VertexSet s);
  static PrimeIdeal non_graded(VertexSet h, Cycle c,
                               std::optional<LaurentPoly> f);

  bool is_zero_ideal() const {
    return kind == Kind::Graded && H.empty() && S.empty();
  }

  // Label ignoring the polynomial: identical for all members of one family.
  std::string family_key() const;
  std::string to_text() const;

  friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b);

struct ClassifyResult {
  bool prime = false;
  int prime_case = 0;  // 1: graded, directed complement; 2: graded, one
                       // breaking vertex omitted; 3: non-graded
  std::string reason;  // failing condition when !prime
};

// The algebra is a prime ring exactly when the vertex set is downward
// directed (equivalently: the zero ideal is prime).
bool is_prime_ring(const Graph& g);

ClassifyResult classify_ideal(const Graph& g, const PrimeIdeal& cand);

// All graded primes: pairs (H, B_H) with downward-directed complement, and
// pairs (H, B_H \ {u}) whose complement is exactly the cone of u. Sorted.
std::vector<PrimeIdeal> enumerate_graded_primes(const Graph& g,
                                                const StructureCaps& caps = {});

// One family of non-graded primes per exclusive exit-free cycle. Members are
// instantiated over a prime field; over the rationals or in symbolic mode
// the family stays an infinite-cardinality marker.
struct Stratum {
  VertexSet H;  // complement of the cone of the cycle base
  Cycle cycle;
  bool symbolic = true;
  std::vector<PrimeIdeal> members;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

std::vector<Stratum> nongraded_strata(const Graph& g, const FieldSpec& field,
                                      int max_degree = 3,
                                      const StructureCaps& caps = {});

// Ideal containment p <= q for two primes of g.
bool contains(const Graph& g, const PrimeIdeal& p, const PrimeIdeal& q);

// The field-independent skeleton of the prime spectrum: every graded prime
// plus one family representative per non-graded stratum. Sorted.
std::vector<PrimeIdeal> spectrum_nodes(const Graph& g,
                                       const StructureCaps& caps = {});

// Property (*) of a hereditary saturated set h: every maximal tail S of the
// subgraph induced on h admits u in S and v outside h whose trees (in the
// full graph) are disjoint.
bool property_star(const Graph& g, const VertexSet& h);

// Chain positions, computed on the spectrum skeleton ordered by containment.
std::vector<PrimeIdeal> minimal_primes(const Graph& g);
std::vector<PrimeIdeal> height_one_primes(const Graph& g);
std::vector<PrimeIdeal> coheight_one_primes(const Graph& g);

// Countable separation: x admits a countable subset meeting the tree of
// every vertex of x. Trivially true on finite graphs; kept as an explicit
// step so the primitivity tests read like their statements.
bool csp(const Graph& g, const VertexSet& x);

enum class Primitivity {
  PrimitiveI,          // non-graded prime
  PrimitiveII,         // graded prime omitting one breaking vertex
  PrimitiveIII,        // graded (H, B_H): directed complement + (L) + csp
  PrimeNotPrimitive,
  NotPrime,
};

std::string to_string(Primitivity k);

struct PrimitivityVerdict {
  Primitivity kind = Primitivity::NotPrime;
  std::string detail;
};

PrimitivityVerdict classify_primitive(const Graph& g, const PrimeIdeal& p);

// Every prime is primitive iff no vertex bases exactly one closed simple
// path and every maximal tail has countable separation.
bool all_primes_primitive(const Graph& g);

// Simplicity: every cycle has an exit and the only hereditary saturated
// sets are empty and everything.
bool is_simple(const Graph& g);

// Maximality of a prime: for graded primes, the quotient graph's algebra is
// simple; a non-graded prime is maximal iff its hull (below) is everything.
bool is_maximal_ideal(const Graph& g, const PrimeIdeal& p);

// The least hereditary saturated set containing H and the cycle support
// that also absorbs breaking vertices of H once all their targets outside H
// are absorbed. Every prime strictly containing the non-graded prime
// contains the graded ideal of this hull.
VertexSet nongraded_hull(const Graph& g, const PrimeIdeal& ng);

bool all_nonzero_primes_maximal(const Graph& g);

// Zero-dimensionality decided structurally: no vertex bases exactly one
// closed simple path, and the maximal tails are either exactly the whole
// vertex set, or all proper, pairwise incomparable, and never the cone of a
// breaking vertex of their complement.
bool krull_dim_zero(const Graph& g);

// One stratum per maximal tail M: all spectrum entries whose trace is the
// complement of M, shaped by whether the induced subgraph on M keeps an
// exit-free cycle and by the number of graded primes in the stratum.
struct StratumInfo {
  VertexSet tail;
  VertexSet H;
  std::string shape;  // "cycle-no-exit-{1,2}-graded" | "exit-{1,2}-graded"
  std::vector<PrimeIdeal> nodes;
};

std::vector<StratumInfo> stratify(const Graph& g, const FieldSpec& field,
                                  int max_degree = 3);

// What the algebra looks like past a prime: for graded primes the quotient
// graph; for non-graded primes a simple socle plus the quotient graph of
// the hull.
struct QuotientDescription {
  bool graded = true;
  Graph beyond;
  std::string socle;  // empty for graded primes
};

QuotientDescription quotient_description(const Graph& g, const PrimeIdeal& p);

// A comb of 2-petal roses r0 <- r1 <- ... <- rn; its spectrum is a single
// chain of length n, so it pins the dimension computation for each n.
Graph build_chain_graph(int n);

}  // namespace lpa
