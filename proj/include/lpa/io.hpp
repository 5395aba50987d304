#pragma once

#include <string>
#include <vector>

#include "lpa/poset.hpp"

namespace lpa {

// The on-disk graph description:
//   {"name": "...", "vertices": ["v", ...],
//    "edges": [{"src": "v", "dst": "w", "mult": 1 | "inf"}, ...]}
struct GraphDocument {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_graph_document(const std::string& text);
std::string serialize_graph_document(const GraphDocument& doc);

Graph document_graph(const GraphDocument& doc);
GraphDocument to_document(const Graph& g, const std::string& name);

// The full analysis as deterministic JSON (sorted keys, two-space indent)
// or as a fixed human-readable layout.
std::string analysis_report_json(const GraphDocument& doc,
                                 const FieldSpec& field, int max_degree);
std::string analysis_report_text(const GraphDocument& doc,
                                 const FieldSpec& field, int max_degree);

// Hasse diagram of the spectrum poset in DOT form; stratum nodes are boxes
// badged with their infinite cardinality.
std::string poset_dot(const Graph& g, const FieldSpec& field, int max_degree);

// Independent agreement checks between the structural answers and the poset
// (chain positions, dimension, maximality and primitivity folds, prime-ring
// equivalences). Returns an empty string when everything agrees, otherwise
// a description of the first mismatch. A mismatch is always a bug.
std::string cross_validate(const Graph& g, const FieldSpec& field,
                           int max_degree);

}  // namespace lpa
