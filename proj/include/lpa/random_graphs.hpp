#pragma once

#include <cstdint>
#include <vector>

#include "lpa/io.hpp"

namespace lpa {

// Deterministic pseudo-random graph documents for corpus testing: the same
// parameters always produce byte-identical documents.
struct RandomGraphParams {
  std::uint64_t seed = 0;
  int count = 1;
  int max_vertices = 6;     // 1..8
  double omega_prob = 0.15;  // chance an edge bundle is infinite
};

std::vector<GraphDocument> random_graph_documents(
    const RandomGraphParams& params);

}  // namespace lpa
