#include "lpa/random_graphs.hpp"

#include <random>

#include "lpa/errors.hpp"

namespace lpa {

std::vector<GraphDocument> random_graph_documents(
    const RandomGraphParams& params) {
  if (params.max_vertices < 1 || params.max_vertices > 8) {
    fail(ErrorCode::OutOfRange, "max_vertices must lie in 1..8");
  }
  if (params.count < 0) {
    fail(ErrorCode::OutOfRange, "count must be non-negative");
  }
  if (params.omega_prob < 0.0 || params.omega_prob > 1.0) {
    fail(ErrorCode::OutOfRange, "omega_prob must lie in [0, 1]");
  }
  // Engine output is consumed through modulo; this trades a negligible bias
  // for bit-identical streams everywhere, which is the point of the corpus.
  std::mt19937_64 engine(params.seed);
  auto roll = [&engine](std::uint64_t n) { return engine() % n; };
  const std::uint64_t omega_per_mille =
      static_cast<std::uint64_t>(params.omega_prob * 1000.0 + 0.5);

  std::vector<GraphDocument> out;
  out.reserve(static_cast<std::size_t>(params.count));
  for (int k = 0; k < params.count; ++k) {
    GraphDocument doc;
    doc.name = "random-" + std::to_string(params.seed) + "-" +
               std::to_string(k);
    int nv = 1 + static_cast<int>(
                     roll(static_cast<std::uint64_t>(params.max_vertices)));
    for (int i = 0; i < nv; ++i) {
      doc.vertices.push_back("v" + std::to_string(i));
    }
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < nv; ++j) {
        if (roll(100) >= 35) continue;  // bundle present ~35% of the time
        Mult mult = Mult::finite(1);
        if (roll(1000) < omega_per_mille) {
          mult = Mult::omega();
        } else if (roll(100) < 25) {
          mult = Mult::finite(2);
        }
        doc.edges.push_back(EdgeSpec{doc.vertices[static_cast<std::size_t>(i)],
                                     doc.vertices[static_cast<std::size_t>(j)],
                                     mult});
      }
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace lpa
