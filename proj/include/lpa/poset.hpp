#pragma once

#include <cstddef>
#include <vector>

#include "lpa/spectrum.hpp"

namespace lpa {

struct PosetNode {
  PrimeIdeal ideal;
  bool stratum = false;  // true: one node standing for an infinite family
};

// The spectrum as a finite poset. In symbolic (or rational) mode each
// non-graded family collapses to a single stratum node; over a prime field
// every instantiated member is its own node. `less` is the full strict
// containment relation, `covers` its transitive reduction.
struct SpecPoset {
  std::vector<PosetNode> nodes;                  // canonically sorted
  std::vector<std::vector<bool>> less;           // less[i][j]: node i < node j
  std::vector<std::vector<std::size_t>> covers;  // j in covers[i]: i covered by j
};

SpecPoset build_spec_poset(const Graph& g, const FieldSpec& field,
                           int max_degree = 3);

std::vector<std::size_t> poset_minimal_nodes(const SpecPoset& poset);
std::vector<std::size_t> poset_maximal_nodes(const SpecPoset& poset);
std::vector<std::size_t> poset_height_one_nodes(const SpecPoset& poset);
std::vector<std::size_t> poset_coheight_one_nodes(const SpecPoset& poset);

// Longest chain, counted in strict inclusions.
int poset_dimension(const SpecPoset& poset);

int krull_dimension(const Graph& g,
                    const FieldSpec& field = FieldSpec::symbolic(),
                    int max_degree = 3);

}  // namespace lpa
