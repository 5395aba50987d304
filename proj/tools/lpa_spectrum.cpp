// lpa-spectrum: prime spectrum analysis for Leavitt path algebras of finite
// directed multigraphs.
//
// Exit codes: 0 success, 1 bad input, 2 enumeration cap exceeded,
// 3 internal cross-validation failure (always a bug).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lpa/io.hpp"
#include "lpa/random_graphs.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    lpa::fail(lpa::ErrorCode::ParseError, "cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CommonFlags {
  std::string field_name = "symbolic";
  int max_degree = 3;
};

lpa::FieldSpec field_of(const CommonFlags& flags) {
  if (flags.max_degree < 1 || flags.max_degree > 8) {
    lpa::fail(lpa::ErrorCode::OutOfRange, "--max-degree must lie in 1..8");
  }
  return lpa::parse_field(flags.field_name);
}

int run_analyze(const std::string& path, const CommonFlags& flags,
                const std::string& format) {
  lpa::FieldSpec field = field_of(flags);
  lpa::GraphDocument doc = lpa::parse_graph_document(read_file(path));
  lpa::Graph g = lpa::document_graph(doc);
  std::string invariant = lpa::cross_validate(g, field, flags.max_degree);
  if (!invariant.empty()) {
    std::cerr << "internal invariant violation: " << invariant << "\n";
    return 3;
  }
  if (format == "text") {
    std::cout << lpa::analysis_report_text(doc, field, flags.max_degree);
  } else {
    std::cout << lpa::analysis_report_json(doc, field, flags.max_degree);
  }
  return 0;
}

int run_poset(const std::string& path, const CommonFlags& flags,
              const std::string& dot_path) {
  lpa::FieldSpec field = field_of(flags);
  lpa::GraphDocument doc = lpa::parse_graph_document(read_file(path));
  lpa::Graph g = lpa::document_graph(doc);
  std::string invariant = lpa::cross_validate(g, field, flags.max_degree);
  if (!invariant.empty()) {
    std::cerr << "internal invariant violation: " << invariant << "\n";
    return 3;
  }
  std::string dot = lpa::poset_dot(g, field, flags.max_degree);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      lpa::fail(lpa::ErrorCode::ParseError,
                "cannot write file: " + dot_path);
    }
    out << dot;
  }
  std::cout << dot;
  return 0;
}

int run_check(const std::string& path, const std::string& claim) {
  lpa::GraphDocument doc = lpa::parse_graph_document(read_file(path));
  lpa::Graph g = lpa::document_graph(doc);
  bool value = false;
  std::string witness;
  if (claim == "prime-ring") {
    value = lpa::is_prime_ring(g);
    witness = value ? "vertex set is downward directed"
                    : "two vertices without a common descendant exist";
  } else if (claim == "simple") {
    value = lpa::is_simple(g);
    if (value) {
      witness = "every cycle has an exit and no proper nonzero ideals";
    } else if (!lpa::condition_L(g)) {
      for (const auto& c : lpa::enumerate_cycles(g)) {
        if (!lpa::has_exit(g, c)) {
          witness = "exit-free cycle " + c.to_text();
          break;
        }
      }
    } else {
      for (const auto& hs : lpa::enumerate_hsat(g)) {
        if (!hs.H.empty() && hs.H != g.vertex_set()) {
          witness = "proper hereditary saturated set " + lpa::format_set(hs.H);
          break;
        }
      }
    }
  } else if (claim == "condition-K") {
    auto w = lpa::condition_K_witness(g);
    value = !w.has_value();
    witness = value ? "no vertex bases exactly one closed simple path"
                    : "vertex " + *w + " bases exactly one closed simple path";
  } else if (claim == "condition-L") {
    value = lpa::condition_L(g);
    witness = "every cycle has an exit";
    for (const auto& c : lpa::enumerate_cycles(g)) {
      if (!lpa::has_exit(g, c)) {
        witness = "exit-free cycle " + c.to_text();
        break;
      }
    }
  } else if (claim == "krull-dim-0") {
    value = lpa::krull_dim_zero(g);
    witness = "poset dimension " +
              std::to_string(lpa::krull_dimension(g));
  } else if (claim == "all-primes-primitive") {
    value = lpa::all_primes_primitive(g);
    if (value) {
      witness = "no vertex bases exactly one closed simple path";
    } else {
      auto w = lpa::condition_K_witness(g);
      witness = w ? "vertex " + *w + " bases exactly one closed simple path"
                  : "countable separation fails";
    }
  } else if (claim == "all-nonzero-primes-maximal") {
    value = lpa::all_nonzero_primes_maximal(g);
    witness = value ? "every nonzero prime has a simple quotient" : "";
    if (!value) {
      for (const auto& p : lpa::spectrum_nodes(g)) {
        if (!p.is_zero_ideal() && !lpa::is_maximal_ideal(g, p)) {
          witness = "non-maximal prime " + p.to_text();
          break;
        }
      }
    }
  } else {
    lpa::fail(lpa::ErrorCode::ParseError, "unknown claim: " + claim);
  }
  std::cout << "claim " << claim << ": " << (value ? "true" : "false")
            << "\n";
  if (!witness.empty()) std::cout << "witness: " << witness << "\n";
  return 0;
}

int run_random(std::uint64_t seed, int count, int max_vertices,
               double omega_prob, const std::string& out_dir) {
  lpa::RandomGraphParams params;
  params.seed = seed;
  params.count = count;
  params.max_vertices = max_vertices;
  params.omega_prob = omega_prob;
  std::vector<lpa::GraphDocument> docs = lpa::random_graph_documents(params);
  if (!out_dir.empty()) {
    for (const auto& doc : docs) {
      std::string path = out_dir + "/" + doc.name + ".json";
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        lpa::fail(lpa::ErrorCode::ParseError, "cannot write file: " + path);
      }
      out << lpa::serialize_graph_document(doc);
      std::cout << path << "\n";
    }
    return 0;
  }
  std::cout << "[\n";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::string body = lpa::serialize_graph_document(docs[i]);
    if (!body.empty() && body.back() == '\n') body.pop_back();
    std::cout << body << (i + 1 < docs.size() ? ",\n" : "\n");
  }
  std::cout << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "prime spectrum analysis for Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;
  std::string format = "json";
  std::string dot_path;
  std::string claim;
  std::uint64_t seed = 0;
  int count = 1;
  int max_vertices = 6;
  double omega_prob = 0.15;
  std::string out_dir;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify the full prime spectrum of a graph");
  analyze->add_option("path", path, "graph document (JSON)")->required();
  analyze->add_option("--field", flags.field_name,
                      "coefficient field: symbolic, Q, or F<p>");
  analyze->add_option("--max-degree", flags.max_degree,
                      "degree cap for instantiated irreducibles");
  analyze->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* poset = app.add_subcommand(
      "poset", "emit the spectrum poset as a DOT Hasse diagram");
  poset->add_option("path", path, "graph document (JSON)")->required();
  poset->add_option("--field", flags.field_name,
                    "coefficient field: symbolic, Q, or F<p>");
  poset->add_option("--max-degree", flags.max_degree,
                    "degree cap for instantiated irreducibles");
  poset->add_option("--dot", dot_path, "also write the DOT text to a file");

  CLI::App* check = app.add_subcommand(
      "check", "evaluate a single named claim with a witness");
  check->add_option("path", path, "graph document (JSON)")->required();
  check
      ->add_option("--claim", claim,
                   "one of: prime-ring, simple, condition-K, condition-L, "
                   "krull-dim-0, all-primes-primitive, "
                   "all-nonzero-primes-maximal")
      ->required();

  CLI::App* random = app.add_subcommand(
      "random", "emit deterministic pseudo-random graph documents");
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--count", count, "number of documents");
  random->add_option("--max-vertices", max_vertices, "vertex bound (1..8)");
  random->add_option("--omega-prob", omega_prob,
                     "probability of an infinite bundle");
  random->add_option("--out-dir", out_dir,
                     "write one file per document instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(path, flags, format);
    if (poset->parsed()) return run_poset(path, flags, dot_path);
    if (check->parsed()) return run_check(path, claim);
    if (random->parsed()) {
      return run_random(seed, count, max_vertices, omega_prob, out_dir);
    }
  } catch (const lpa::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == lpa::ErrorCode::CapExceeded ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
