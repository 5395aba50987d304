#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lpa/errors.hpp"
#include "lpa/io.hpp"

namespace lpa {

namespace {

using nlohmann::json;

json json_set(const VertexSet& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(v);
  return out;
}

json json_mult(const Mult& m) {
  if (m.is_omega()) return json("inf");
  return json(m.count);
}

json json_edges(const Graph& g) {
  json out = json::array();
  for (const auto& e : g.edge_list()) {
    json edge;
    edge["src"] = e.src;
    edge["dst"] = e.dst;
    edge["mult"] = json_mult(e.mult);
    out.push_back(edge);
  }
  return out;
}

json json_cycle(const Cycle& c) {
  json out = json::array();
  for (const auto& v : c.verts) out.push_back(v);
  return out;
}

json json_graph(const Graph& g) {
  json out;
  out["vertices"] = json_set(g.vertex_set());
  out["edges"] = json_edges(g);
  return out;
}

json json_quotient(const QuotientDescription& q) {
  json out = json_graph(q.beyond);
  if (!q.graded) out["socle"] = q.socle;
  return out;
}

std::set<std::string> family_keys(const std::vector<PrimeIdeal>& primes) {
  std::set<std::string> out;
  for (const auto& p : primes) out.insert(p.family_key());
  return out;
}

std::set<std::string> family_keys(const SpecPoset& poset,
                                  const std::vector<std::size_t>& idx) {
  std::set<std::string> out;
  for (std::size_t i : idx) out.insert(poset.nodes[i].ideal.family_key());
  return out;
}

std::string join_keys(const std::set<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += " ; ";
    out += k;
  }
  return out.empty() ? std::string("(none)") : out;
}

struct NodeFlags {
  bool minimal = false;
  bool height_one = false;
  bool coheight_one = false;
  bool poset_maximal = false;
};

std::vector<NodeFlags> node_flags(const SpecPoset& poset) {
  std::vector<NodeFlags> flags(poset.nodes.size());
  for (std::size_t i : poset_minimal_nodes(poset)) flags[i].minimal = true;
  for (std::size_t i : poset_height_one_nodes(poset)) {
    flags[i].height_one = true;
  }
  for (std::size_t i : poset_coheight_one_nodes(poset)) {
    flags[i].coheight_one = true;
  }
  for (std::size_t i : poset_maximal_nodes(poset)) {
    flags[i].poset_maximal = true;
  }
  return flags;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string poset_dot(const Graph& g, const FieldSpec& field, int max_degree) {
  SpecPoset poset = build_spec_poset(g, field, max_degree);
  std::ostringstream out;
  out << "digraph spectrum {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const PosetNode& node = poset.nodes[i];
    std::string label = node.ideal.to_text();
    if (node.stratum) label = node.ideal.family_key() + ", #=∞";
    out << "  n" << i << " [label=\"" << dot_escape(label) << "\"";
    if (node.stratum) out << ", shape=box";
    out << "];\n";
  }
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    for (std::size_t j : poset.covers[i]) {
      out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

json spectrum_section(const Graph& g, const SpecPoset& poset,
                      const std::vector<NodeFlags>& flags) {
  json out = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    const PrimeIdeal& p = poset.nodes[i].ideal;
    ClassifyResult cr = classify_ideal(g, p);
    PrimitivityVerdict pv = classify_primitive(g, p);
    json node;
    node["label"] = p.to_text();
    node["kind"] =
        p.kind == PrimeIdeal::Kind::Graded ? "graded" : "non-graded";
    node["H"] = json_set(p.H);
    if (p.kind == PrimeIdeal::Kind::Graded) {
      node["S"] = json_set(p.S);
    } else {
      node["cycle"] = json_cycle(*p.cycle);
      node["poly"] = p.poly ? json(p.poly->to_text()) : json("family");
      if (poset.nodes[i].stratum) node["stratum_cardinality"] = "infinite";
    }
    node["case"] = cr.prime_case;
    node["primitivity"] = to_string(pv.kind);
    node["minimal"] = flags[i].minimal;
    node["height_one"] = flags[i].height_one;
    node["coheight_one"] = flags[i].coheight_one;
    node["maximal"] = is_maximal_ideal(g, p);
    node["quotient"] = json_quotient(quotient_description(g, p));
    out.push_back(node);
  }
  return out;
}

json full_report(const GraphDocument& doc, const FieldSpec& field,
                 int max_degree) {
  Graph g = document_graph(doc);
  SpecPoset poset = build_spec_poset(g, field, max_degree);
  std::vector<NodeFlags> flags = node_flags(poset);

  json report;
  json graph;
  graph["name"] = doc.name;
  graph["vertices"] = json_set(g.vertex_set());
  graph["edges"] = json_edges(g);
  json classes;
  for (const auto& v : g.vertex_set()) {
    classes[v] = to_string(classify_vertex(g, v));
  }
  graph["vertex_classes"] = classes;
  report["graph"] = graph;
  report["field"] = to_string(field);
  report["max_degree"] = max_degree;

  json hsat = json::array();
  for (const auto& hs : enumerate_hsat(g)) {
    json entry;
    entry["H"] = json_set(hs.H);
    entry["breaking"] = json_set(hs.breaking);
    hsat.push_back(entry);
  }
  report["hereditary_saturated"] = hsat;

  json tails = json::array();
  for (const auto& m : maximal_tails(g)) tails.push_back(json_set(m));
  report["maximal_tails"] = tails;

  json cycles;
  cycles["all"] = json::array();
  for (const auto& c : enumerate_cycles(g)) {
    json entry;
    entry["vertices"] = json_cycle(c);
    entry["copies"] = cycle_copies(g, c);
    entry["has_exit"] = has_exit(g, c);
    cycles["all"].push_back(entry);
  }
  cycles["without_K"] = json::array();
  for (const auto& c : cycles_without_K(g)) {
    cycles["without_K"].push_back(json_cycle(c));
  }
  report["cycles"] = cycles;

  report["condition_K"] = condition_K(g);
  auto witness = condition_K_witness(g);
  report["condition_K_witness"] = witness ? json(*witness) : json(nullptr);
  report["condition_L"] = condition_L(g);
  report["prime_ring"] = is_prime_ring(g);
  report["simple"] = is_simple(g);
  report["all_primes_primitive"] = all_primes_primitive(g);
  report["all_nonzero_primes_maximal"] = all_nonzero_primes_maximal(g);
  report["krull_dimension"] = poset_dimension(poset);
  report["krull_dim_zero"] = krull_dim_zero(g);

  report["spectrum"] = spectrum_section(g, poset, flags);

  json strata = json::array();
  for (const auto& st : stratify(g, field, max_degree)) {
    json entry;
    entry["tail"] = json_set(st.tail);
    entry["H"] = json_set(st.H);
    entry["shape"] = st.shape;
    json labels = json::array();
    for (const auto& p : st.nodes) labels.push_back(p.to_text());
    entry["nodes"] = labels;
    strata.push_back(entry);
  }
  report["strata"] = strata;
  return report;
}

}  // namespace

std::string analysis_report_json(const GraphDocument& doc,
                                 const FieldSpec& field, int max_degree) {
  return full_report(doc, field, max_degree).dump(2) + "\n";
}

std::string analysis_report_text(const GraphDocument& doc,
                                 const FieldSpec& field, int max_degree) {
  json r = full_report(doc, field, max_degree);
  std::ostringstream out;
  out << "graph " << doc.name << ": " << r["graph"]["vertices"].size()
      << " vertices, " << r["graph"]["edges"].size() << " edge bundles, over "
      << r["field"].get<std::string>() << " (degree cap " << max_degree
      << ")\n";
  out << "vertex classes:";
  for (auto& [v, cls] : r["graph"]["vertex_classes"].items()) {
    out << " " << v << "=" << cls.get<std::string>();
  }
  out << "\n";
  out << "hereditary saturated sets (" << r["hereditary_saturated"].size()
      << "):";
  for (auto& entry : r["hereditary_saturated"]) {
    out << " " << entry["H"].dump();
    if (!entry["breaking"].empty()) {
      out << "/breaking" << entry["breaking"].dump();
    }
  }
  out << "\n";
  out << "maximal tails (" << r["maximal_tails"].size() << "):";
  for (auto& m : r["maximal_tails"]) out << " " << m.dump();
  out << "\n";
  out << "cycles (" << r["cycles"]["all"].size() << "):";
  for (auto& c : r["cycles"]["all"]) {
    out << " " << c["vertices"].dump() << "x" << c["copies"].get<int>()
        << (c["has_exit"].get<bool>() ? "(exit)" : "(no exit)");
  }
  out << "\n";
  out << "exclusive exit-free cycles:";
  if (r["cycles"]["without_K"].empty()) out << " (none)";
  for (auto& c : r["cycles"]["without_K"]) out << " " << c.dump();
  out << "\n";
  out << "condition K: " << r["condition_K"].dump()
      << "  condition L: " << r["condition_L"].dump()
      << "  prime ring: " << r["prime_ring"].dump()
      << "  simple: " << r["simple"].dump() << "\n";
  out << "spectrum (" << r["spectrum"].size() << " nodes):\n";
  for (auto& node : r["spectrum"]) {
    out << "  " << node["label"].get<std::string>() << "  case="
        << node["case"].get<int>() << " "
        << node["primitivity"].get<std::string>();
    if (node["minimal"].get<bool>()) out << " minimal";
    if (node["height_one"].get<bool>()) out << " height-one";
    if (node["coheight_one"].get<bool>()) out << " coheight-one";
    if (node["maximal"].get<bool>()) out << " maximal";
    out << "\n";
  }
  out << "strata:\n";
  for (auto& st : r["strata"]) {
    out << "  tail " << st["tail"].dump() << " shape "
        << st["shape"].get<std::string>() << " nodes " << st["nodes"].size()
        << "\n";
  }
  out << "krull dimension: " << r["krull_dimension"].get<int>()
      << " (dimension-zero test: " << r["krull_dim_zero"].dump() << ")\n";
  out << "all primes primitive: " << r["all_primes_primitive"].dump()
      << "; all nonzero primes maximal: "
      << r["all_nonzero_primes_maximal"].dump() << "\n";
  return out.str();
}

std::string cross_validate(const Graph& g, const FieldSpec& field,
                           int max_degree) {
  // Two independent reads of condition (K).
  bool k_by_count = condition_K(g);
  bool k_by_cycles = cycles_without_K(g).empty();
  if (k_by_count != k_by_cycles) {
    return "condition (K) disagreement between path counting and exclusive "
           "cycle enumeration";
  }
  std::vector<Stratum> strata = nongraded_strata(g, field, max_degree);
  if (k_by_count != strata.empty()) {
    return "condition (K) disagrees with non-graded stratum existence";
  }

  SpecPoset poset = build_spec_poset(g, field, max_degree);

  // Prime-ring equivalences: directedness, zero ideal primeness, and a
  // trace-empty prime in the spectrum.
  bool prime_ring = is_prime_ring(g);
  bool zero_prime =
      classify_ideal(g, PrimeIdeal::graded({}, {})).prime;
  bool trace_empty_node = false;
  for (const auto& node : poset.nodes) {
    if (node.ideal.H.empty()) {
      trace_empty_node = true;
      break;
    }
  }
  if (prime_ring != zero_prime) {
    return "prime-ring test disagrees with classification of the zero ideal";
  }
  if (prime_ring != trace_empty_node) {
    return "prime-ring test disagrees with trace-empty spectrum membership";
  }

  // Chain positions: structural answers vs poset answers, as families.
  auto mismatch = [](const std::set<std::string>& a,
                     const std::set<std::string>& b, const char* what) {
    if (a == b) return std::string();
    return std::string(what) + " mismatch: structural " + join_keys(a) +
           " vs poset " + join_keys(b);
  };
  std::string diff;
  diff = mismatch(family_keys(minimal_primes(g)),
                  family_keys(poset, poset_minimal_nodes(poset)),
                  "minimal primes");
  if (!diff.empty()) return diff;
  diff = mismatch(family_keys(height_one_primes(g)),
                  family_keys(poset, poset_height_one_nodes(poset)),
                  "height-one primes");
  if (!diff.empty()) return diff;
  diff = mismatch(family_keys(coheight_one_primes(g)),
                  family_keys(poset, poset_coheight_one_nodes(poset)),
                  "co-height-one primes");
  if (!diff.empty()) return diff;

  // Dimension agreement.
  int dim = poset_dimension(poset);
  if (krull_dim_zero(g) != (dim == 0)) {
    return "dimension-zero test disagrees with the poset dimension";
  }
  if (field.kind == FieldKind::PrimeField) {
    if (dim != krull_dimension(g, FieldSpec::symbolic(), max_degree)) {
      return "poset dimension depends on the coefficient field";
    }
  }

  // Maximality: theorem-side test vs poset-maximal positions, per node and
  // in the fold.
  std::vector<NodeFlags> flags = node_flags(poset);
  bool fold_max = true;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    bool theorem_side = is_maximal_ideal(g, poset.nodes[i].ideal);
    if (theorem_side != flags[i].poset_maximal) {
      return "maximality disagreement at " + poset.nodes[i].ideal.to_text();
    }
    if (!poset.nodes[i].ideal.is_zero_ideal() && !theorem_side) {
      fold_max = false;
    }
  }
  if (all_nonzero_primes_maximal(g) != fold_max) {
    return "all-nonzero-primes-maximal disagrees with per-node maximality";
  }

  // Primitivity fold.
  bool fold_primitive = true;
  for (const auto& node : poset.nodes) {
    Primitivity kind = classify_primitive(g, node.ideal).kind;
    if (kind == Primitivity::NotPrime) {
      return "spectrum node fails to classify as prime: " +
             node.ideal.to_text();
    }
    if (kind == Primitivity::PrimeNotPrimitive) fold_primitive = false;
  }
  if (all_primes_primitive(g) != fold_primitive) {
    return "all-primes-primitive disagrees with per-node primitivity";
  }

  // Strata partition the spectrum by trace.
  std::size_t covered = 0;
  std::vector<StratumInfo> parts = stratify(g, field, max_degree);
  std::vector<VertexSet> tails = maximal_tails(g);
  if (parts.size() != tails.size()) {
    return "stratification does not align with the maximal tails";
  }
  for (const auto& part : parts) {
    covered += part.nodes.size();
  }
  if (covered != poset.nodes.size()) {
    return "stratification does not partition the spectrum";
  }
  return "";
}

}  // namespace lpa
