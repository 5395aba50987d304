#include <string>

#include "json.hpp"
#include "lpa/errors.hpp"
#include "lpa/io.hpp"

namespace lpa {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    fail(ErrorCode::ParseError, "input is not valid JSON");
  }
  return doc;
}

Mult parse_mult(const json& value, const std::string& where) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return Mult::omega();
    fail(ErrorCode::ParseError,
         "edge mult must be a positive integer or \"inf\" (" + where + ")");
  }
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    fail(ErrorCode::ParseError,
         "edge mult must be a positive integer or \"inf\" (" + where + ")");
  }
  return Mult::finite(static_cast<std::uint64_t>(value.get<long long>()));
}

}  // namespace

GraphDocument parse_graph_document(const std::string& text) {
  json doc = parse_text(text);
  if (!doc.is_object()) fail(ErrorCode::ParseError, "top level must be an object");
  GraphDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      fail(ErrorCode::ParseError, "field \"name\" must be a string");
    }
    out.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    fail(ErrorCode::ParseError, "field \"vertices\" must be an array");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string() || v.get<std::string>().empty()) {
      fail(ErrorCode::ParseError, "vertices must be non-empty strings");
    }
    out.vertices.push_back(v.get<std::string>());
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail(ErrorCode::ParseError, "field \"edges\" must be an array");
  }
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("src") || !e.contains("dst") ||
        !e.contains("mult") || !e["src"].is_string() ||
        !e["dst"].is_string()) {
      fail(ErrorCode::ParseError,
           "edges must be {\"src\": str, \"dst\": str, \"mult\": int|\"inf\"}");
    }
    std::string src = e["src"].get<std::string>();
    std::string dst = e["dst"].get<std::string>();
    out.edges.push_back(
        EdgeSpec{src, dst, parse_mult(e["mult"], src + "->" + dst)});
  }
  return out;
}

std::string serialize_graph_document(const GraphDocument& doc) {
  json out;
  out["name"] = doc.name;
  out["vertices"] = json::array();
  for (const auto& v : doc.vertices) out["vertices"].push_back(v);
  out["edges"] = json::array();
  for (const auto& e : doc.edges) {
    json edge;
    edge["src"] = e.src;
    edge["dst"] = e.dst;
    if (e.mult.is_omega()) {
      edge["mult"] = "inf";
    } else {
      edge["mult"] = e.mult.count;
    }
    out["edges"].push_back(edge);
  }
  return out.dump(2) + "\n";
}

Graph document_graph(const GraphDocument& doc) {
  return Graph::build(doc.vertices, doc.edges);
}

GraphDocument to_document(const Graph& g, const std::string& name) {
  GraphDocument doc;
  doc.name = name;
  doc.vertices.assign(g.vertex_set().begin(), g.vertex_set().end());
  doc.edges = g.edge_list();
  return doc;
}

}  // namespace lpa
