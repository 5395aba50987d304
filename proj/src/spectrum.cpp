#include "lpa/spectrum.hpp"

#include <algorithm>
#include <tuple>

#include "lpa/errors.hpp"

namespace lpa {

PrimeIdeal PrimeIdeal::graded(VertexSet h, VertexSet s) {
  PrimeIdeal p;
  p.kind = Kind::Graded;
  p.H = std::move(h);
  p.S = std::move(s);
  return p;
}

PrimeIdeal PrimeIdeal::non_graded(VertexSet h, Cycle c,
                                  std::optional<LaurentPoly> f) {
  PrimeIdeal p;
  p.kind = Kind::NonGraded;
  p.H = std::move(h);
  p.cycle = std::move(c);
  p.poly = std::move(f);
  return p;
}

std::string PrimeIdeal::family_key() const {
  if (kind == Kind::Graded) {
    return "I(H=" + format_set(H) + ", S=" + format_set(S) + ")";
  }
  return "NG(H=" + format_set(H) + ", c=" + cycle->to_text() + ")";
}

std::string PrimeIdeal::to_text() const {
  if (kind == Kind::Graded) return family_key();
  std::string f = poly ? poly->to_text() : "*";
  return "NG(H=" + format_set(H) + ", c=" + cycle->to_text() + ", f=" + f +
         ")";
}

bool operator<(const PrimeIdeal& a, const PrimeIdeal& b) {
  auto rank = [](const PrimeIdeal& p) {
    return p.kind == PrimeIdeal::Kind::Graded ? 0 : 1;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  std::string ka = a.family_key();
  std::string kb = b.family_key();
  if (ka != kb) return ka < kb;
  std::string fa = a.poly ? a.poly->to_text() : "";
  std::string fb = b.poly ? b.poly->to_text() : "";
  return fa < fb;
}

bool is_prime_ring(const Graph& g) { return downward_directed(g); }

namespace {

[[noreturn]] void malformed(const std::string& message) {
  fail(ErrorCode::MalformedCandidate, message);
}

// Structural validation shared by every candidate consumer; primeness is
// judged separately by classify_ideal.
void validate_candidate(const Graph& g, const PrimeIdeal& cand) {
  for (const auto& v : cand.H) {
    if (!g.has_vertex(v)) malformed("unknown vertex in H: " + v);
  }
  if (!is_hereditary(g, cand.H) || !is_saturated(g, cand.H)) {
    malformed("H is not hereditary saturated: " + format_set(cand.H));
  }
  if (cand.kind == PrimeIdeal::Kind::Graded) {
    if (cand.cycle || cand.poly) {
      malformed("graded candidate carries non-graded data");
    }
    VertexSet breaking = breaking_vertices(g, cand.H);
    if (!is_subset(cand.S, breaking)) {
      malformed("S is not a set of breaking vertices of H: " +
                format_set(cand.S));
    }
    return;
  }
  if (!cand.S.empty()) malformed("non-graded candidate carries a graded S");
  if (!cand.cycle) malformed("non-graded candidate lacks a cycle");
  try {
    require_cycle(g, *cand.cycle);
  } catch (const Error& e) {
    malformed(e.what());
  }
  if (cand.poly && cand.poly->is_zero()) {
    malformed("non-graded candidate carries the zero polynomial");
  }
}

ClassifyResult not_prime(std::string reason) {
  return ClassifyResult{false, 0, std::move(reason)};
}

}  // namespace

ClassifyResult classify_ideal(const Graph& g, const PrimeIdeal& cand) {
  validate_candidate(g, cand);
  if (cand.kind == PrimeIdeal::Kind::Graded) {
    if (cand.H == g.vertex_set()) {
      return not_prime("the improper ideal is not prime");
    }
    VertexSet breaking = breaking_vertices(g, cand.H);
    VertexSet omitted = set_difference(breaking, cand.S);
    VertexSet complement = set_difference(g.vertex_set(), cand.H);
    if (omitted.empty()) {
      if (!downward_directed(restricted_subgraph(g, complement))) {
        return not_prime("complement of H is not downward directed");
      }
      return ClassifyResult{true, 1, ""};
    }
    if (omitted.size() == 1) {
      const Vertex& u = *omitted.begin();
      if (cone(g, u) != complement) {
        return not_prime(
            "complement of H is not the cone of the omitted breaking "
            "vertex " +
            u);
      }
      return ClassifyResult{true, 2, ""};
    }
    return not_prime("more than one breaking vertex omitted from S");
  }

  const Cycle& c = *cand.cycle;
  std::vector<Cycle> exclusive = cycles_without_K(g);
  if (std::find(exclusive.begin(), exclusive.end(), c) == exclusive.end()) {
    return not_prime("cycle is not exclusive and exit-free: " + c.to_text());
  }
  VertexSet complement = set_difference(g.vertex_set(), cand.H);
  if (cone(g, c.base()) != complement) {
    return not_prime("H is not the complement of the cone of " + c.base());
  }
  if (cand.poly && !is_irreducible(*cand.poly)) {
    return not_prime("polynomial is not irreducible: " + cand.poly->to_text());
  }
  return ClassifyResult{true, 3, ""};
}

std::vector<PrimeIdeal> enumerate_graded_primes(const Graph& g,
                                                const StructureCaps& caps) {
  std::vector<PrimeIdeal> out;
  for (const auto& hs : enumerate_hsat(g, caps)) {
    if (hs.H == g.vertex_set()) continue;
    VertexSet complement = set_difference(g.vertex_set(), hs.H);
    if (downward_directed(restricted_subgraph(g, complement))) {
      out.push_back(PrimeIdeal::graded(hs.H, hs.breaking));
    }
    for (const auto& u : hs.breaking) {
      if (cone(g, u) == complement) {
        VertexSet s = hs.breaking;
        s.erase(u);
        out.push_back(PrimeIdeal::graded(hs.H, std::move(s)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Stratum> nongraded_strata(const Graph& g, const FieldSpec& field,
                                      int max_degree,
                                      const StructureCaps& caps) {
  std::vector<Stratum> out;
  std::vector<LaurentPoly> classes;
  bool concrete = field.kind == FieldKind::PrimeField;
  if (concrete) classes = enumerate_irreducible_classes(field, max_degree);
  for (const auto& c : cycles_without_K(g, caps)) {
    Stratum st;
    st.H = set_difference(g.vertex_set(), cone(g, c.base()));
    st.cycle = c;
    st.symbolic = !concrete;
    if (concrete) {
      for (const auto& f : classes) {
        st.members.push_back(PrimeIdeal::non_graded(st.H, c, f));
      }
    }
    out.push_back(std::move(st));
  }
  std::sort(out.begin(), out.end(),
            [](const Stratum& a, const Stratum& b) {
              return std::tie(a.H, a.cycle) < std::tie(b.H, b.cycle);
            });
  return out;
}

namespace {

bool graded_leq(const VertexSet& h1, const VertexSet& s1, const VertexSet& h2,
                const VertexSet& s2) {
  return is_subset(h1, h2) && is_subset(s1, set_union(h2, s2));
}

}  // namespace

bool contains(const Graph& g, const PrimeIdeal& p, const PrimeIdeal& q) {
  ClassifyResult cp = classify_ideal(g, p);
  if (!cp.prime) malformed("first candidate is not prime: " + cp.reason);
  ClassifyResult cq = classify_ideal(g, q);
  if (!cq.prime) malformed("second candidate is not prime: " + cq.reason);

  const bool p_graded = p.kind == PrimeIdeal::Kind::Graded;
  const bool q_graded = q.kind == PrimeIdeal::Kind::Graded;
  if (p_graded && q_graded) return graded_leq(p.H, p.S, q.H, q.S);
  if (p_graded) {
    // Graded inside non-graded: inside iff inside the full graded part.
    return graded_leq(p.H, p.S, q.H, breaking_vertices(g, q.H));
  }
  if (q_graded) {
    // Non-graded inside graded: the graded hull and the cycle must vanish
    // into q.
    return is_subset(p.H, q.H) && is_subset(p.cycle->support(), q.H) &&
           is_subset(breaking_vertices(g, p.H), set_union(q.H, q.S));
  }
  if (p.H == q.H && *p.cycle == *q.cycle) {
    if (p.poly.has_value() != q.poly.has_value()) return false;
    if (!p.poly) return true;  // the same family representative
    return associates(*p.poly, *q.poly);
  }
  // Distinct families: p must already sit inside the graded part under q,
  // which is the pair (q.H, B_{q.H}).
  return is_subset(p.H, q.H) && is_subset(p.cycle->support(), q.H) &&
         is_subset(breaking_vertices(g, p.H),
                   set_union(q.H, breaking_vertices(g, q.H)));
}

std::vector<PrimeIdeal> spectrum_nodes(const Graph& g,
                                       const StructureCaps& caps) {
  std::vector<PrimeIdeal> out = enumerate_graded_primes(g, caps);
  for (const auto& c : cycles_without_K(g, caps)) {
    VertexSet h = set_difference(g.vertex_set(), cone(g, c.base()));
    out.push_back(PrimeIdeal::non_graded(std::move(h), c, std::nullopt));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool property_star(const Graph& g, const VertexSet& h) {
  g.require_vertices(h);
  if (!is_hereditary(g, h) || !is_saturated(g, h)) {
    fail(ErrorCode::NotHereditarySaturated,
         "property (*) is asked of hereditary saturated sets only");
  }
  VertexSet outside = set_difference(g.vertex_set(), h);
  std::map<Vertex, VertexSet> trees;
  for (const auto& v : g.vertex_set()) trees.emplace(v, tree(g, v));
  for (const auto& s : maximal_tails(g, h)) {
    bool witnessed = false;
    for (const auto& u : s) {
      for (const auto& v : outside) {
        if (!intersects(trees.at(u), trees.at(v))) {
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
    if (!witnessed) return false;
  }
  return true;
}

namespace {

// Strictly-below / strictly-above adjacency over the spectrum skeleton.
struct SkeletonOrder {
  std::vector<PrimeIdeal> nodes;
  std::vector<std::vector<bool>> below;  // below[i][j]: node j strictly inside node i
};

SkeletonOrder skeleton_order(const Graph& g) {
  SkeletonOrder sk;
  sk.nodes = spectrum_nodes(g);
  std::size_t n = sk.nodes.size();
  sk.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      sk.below[i][j] = contains(g, sk.nodes[j], sk.nodes[i]);
    }
  }
  return sk;
}

}  // namespace

std::vector<PrimeIdeal> minimal_primes(const Graph& g) {
  SkeletonOrder sk = skeleton_order(g);
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
    if (std::none_of(sk.below[i].begin(), sk.below[i].end(),
                     [](bool b) { return b; })) {
      out.push_back(sk.nodes[i]);
    }
  }
  return out;
}

std::vector<PrimeIdeal> height_one_primes(const Graph& g) {
  SkeletonOrder sk = skeleton_order(g);
  std::size_t n = sk.nodes.size();
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool some_below = false;
    bool all_below_minimal = true;
    for (std::size_t j = 0; j < n && all_below_minimal; ++j) {
      if (!sk.below[i][j]) continue;
      some_below = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (sk.below[j][k]) {
          all_below_minimal = false;
          break;
        }
      }
    }
    if (some_below && all_below_minimal) out.push_back(sk.nodes[i]);
  }
  return out;
}

std::vector<PrimeIdeal> coheight_one_primes(const Graph& g) {
  SkeletonOrder sk = skeleton_order(g);
  std::size_t n = sk.nodes.size();
  std::vector<PrimeIdeal> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool some_above = false;
    bool all_above_maximal = true;
    for (std::size_t j = 0; j < n && all_above_maximal; ++j) {
      if (!sk.below[j][i]) continue;  // node j strictly above node i
      some_above = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (sk.below[k][j]) {
          all_above_maximal = false;
          break;
        }
      }
    }
    if (some_above && all_above_maximal) out.push_back(sk.nodes[i]);
  }
  return out;
}

bool csp(const Graph& g, const VertexSet& x) {
  g.require_vertices(x);
  // Finite vertex sets are their own countable separating subsets.
  return true;
}

std::string to_string(Primitivity k) {
  switch (k) {
    case Primitivity::PrimitiveI: return "primitive(i)";
    case Primitivity::PrimitiveII: return "primitive(ii)";
    case Primitivity::PrimitiveIII: return "primitive(iii)";
    case Primitivity::PrimeNotPrimitive: return "prime-not-primitive";
    case Primitivity::NotPrime: return "not-prime";
  }
  return "?";
}

PrimitivityVerdict classify_primitive(const Graph& g, const PrimeIdeal& p) {
  ClassifyResult cr = classify_ideal(g, p);
  if (!cr.prime) return PrimitivityVerdict{Primitivity::NotPrime, cr.reason};
  if (cr.prime_case == 3) {
    return PrimitivityVerdict{Primitivity::PrimitiveI,
                              "non-graded primes are primitive"};
  }
  if (cr.prime_case == 2) {
    return PrimitivityVerdict{Primitivity::PrimitiveII,
                              "one breaking vertex omitted"};
  }
  VertexSet complement = set_difference(g.vertex_set(), p.H);
  if (condition_L(restricted_subgraph(g, complement)) && csp(g, complement)) {
    return PrimitivityVerdict{
        Primitivity::PrimitiveIII,
        "directed complement with exits and countable separation"};
  }
  return PrimitivityVerdict{
      Primitivity::PrimeNotPrimitive,
      "an exit-free cycle survives in the complement of H"};
}

bool all_primes_primitive(const Graph& g) {
  if (!condition_K(g)) return false;
  for (const auto& m : maximal_tails(g)) {
    if (!csp(g, m)) return false;
  }
  return true;
}

bool is_simple(const Graph& g) {
  return condition_L(g) && enumerate_hsat(g).size() == 2;
}

VertexSet nongraded_hull(const Graph& g, const PrimeIdeal& ng) {
  validate_candidate(g, ng);
  if (ng.kind != PrimeIdeal::Kind::NonGraded) {
    malformed("hulls are taken of non-graded primes only");
  }
  VertexSet breaking = breaking_vertices(g, ng.H);
  VertexSet acc = set_union(ng.H, ng.cycle->support());
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet swept = tree_of_set(g, acc);
    if (swept != acc) {
      acc = std::move(swept);
      changed = true;
    }
    for (const auto& v : g.vertex_set()) {
      if (acc.count(v)) continue;
      bool absorb = false;
      if (classify_vertex(g, v) == VertexClass::Regular) {
        absorb = true;
        for (const auto& [dst, mult] : g.out_edges(v)) {
          if (!acc.count(dst)) {
            absorb = false;
            break;
          }
        }
      } else if (breaking.count(v)) {
        // A breaking vertex joins once every target outside H is absorbed
        // (its infinite bundles all point into H already).
        absorb = true;
        for (const auto& [dst, mult] : g.out_edges(v)) {
          if (!ng.H.count(dst) && !acc.count(dst)) {
            absorb = false;
            break;
          }
        }
      }
      if (absorb) {
        acc.insert(v);
        changed = true;
      }
    }
  }
  return acc;
}

bool is_maximal_ideal(const Graph& g, const PrimeIdeal& p) {
  ClassifyResult cr = classify_ideal(g, p);
  if (!cr.prime) malformed("maximality is asked of primes only: " + cr.reason);
  if (p.kind == PrimeIdeal::Kind::Graded) {
    return is_simple(quotient_graph(g, p.H, p.S));
  }
  return nongraded_hull(g, p) == g.vertex_set();
}

bool all_nonzero_primes_maximal(const Graph& g) {
  std::vector<VertexSet> tails = maximal_tails(g);
  std::vector<HSatSet> hsat = enumerate_hsat(g);

  bool cond_k = condition_K(g);

  // First shape: everything reaches everything, no ideals in between, and
  // a cycle family survives (so the zero ideal is non-graded-covered).
  bool shape_one =
      !cond_k && hsat.size() == 2 && is_maximal_tail(g, g.vertex_set());
  if (shape_one) return true;

  // Second shape: exclusive-cycle-free, every proper tail induces a simple
  // subgraph, and no cone of a breaking vertex fills a complement. The whole
  // vertex set is skipped even when it is a tail: its ideal is the zero
  // ideal, which is not asked to be maximal.
  if (!cond_k) return false;
  for (const auto& m : tails) {
    if (m == g.vertex_set()) continue;
    if (enumerate_hsat(restricted_subgraph(g, m)).size() != 2) return false;
  }
  for (const auto& hs : hsat) {
    VertexSet complement = set_difference(g.vertex_set(), hs.H);
    for (const auto& u : hs.breaking) {
      if (cone(g, u) == complement) return false;
    }
  }
  return true;
}

bool krull_dim_zero(const Graph& g) {
  if (!condition_K(g)) return false;
  std::vector<VertexSet> tails = maximal_tails(g);
  bool whole_is_tail = false;
  for (const auto& m : tails) {
    if (m == g.vertex_set()) {
      whole_is_tail = true;
      break;
    }
  }
  if (whole_is_tail) return tails.size() == 1;
  for (std::size_t i = 0; i < tails.size(); ++i) {
    for (std::size_t j = 0; j < tails.size(); ++j) {
      if (i != j && is_proper_subset(tails[i], tails[j])) return false;
    }
  }
  for (const auto& m : tails) {
    VertexSet h = set_difference(g.vertex_set(), m);
    for (const auto& u : breaking_vertices(g, h)) {
      if (cone(g, u) == m) return false;
    }
  }
  return true;
}

std::vector<StratumInfo> stratify(const Graph& g, const FieldSpec& field,
                                  int max_degree) {
  std::vector<PrimeIdeal> graded = enumerate_graded_primes(g);
  std::vector<Stratum> families = nongraded_strata(g, field, max_degree);
  std::vector<StratumInfo> out;
  for (const auto& m : maximal_tails(g)) {
    StratumInfo info;
    info.tail = m;
    info.H = set_difference(g.vertex_set(), m);
    int graded_count = 0;
    for (const auto& p : graded) {
      if (p.H == info.H) {
        info.nodes.push_back(p);
        ++graded_count;
      }
    }
    bool has_cycle_family = false;
    for (const auto& st : families) {
      if (st.H != info.H) continue;
      has_cycle_family = true;
      if (st.symbolic) {
        info.nodes.push_back(
            PrimeIdeal::non_graded(st.H, st.cycle, std::nullopt));
      } else {
        info.nodes.insert(info.nodes.end(), st.members.begin(),
                          st.members.end());
      }
    }
    info.shape = std::string(has_cycle_family ? "cycle-no-exit-" : "exit-") +
                 (graded_count >= 2 ? "2" : "1") + "-graded";
    out.push_back(std::move(info));
  }
  return out;
}

QuotientDescription quotient_description(const Graph& g, const PrimeIdeal& p) {
  ClassifyResult cr = classify_ideal(g, p);
  if (!cr.prime) {
    malformed("quotients are described for primes only: " + cr.reason);
  }
  QuotientDescription out;
  if (p.kind == PrimeIdeal::Kind::Graded) {
    out.graded = true;
    out.beyond = quotient_graph(g, p.H, p.S);
    return out;
  }
  out.graded = false;
  out.socle = "simple socle generated by the class of " + p.cycle->base();
  VertexSet hull = nongraded_hull(g, p);
  VertexSet s = set_difference(breaking_vertices(g, p.H), hull);
  out.beyond = quotient_graph(g, hull, s);
  return out;
}

Graph build_chain_graph(int n) {
  if (n < 0 || n > 12) {
    fail(ErrorCode::OutOfRange, "chain length must lie in 0..12");
  }
  auto name = [](int i) {
    std::string digits = std::to_string(i);
    if (digits.size() < 2) digits = "0" + digits;
    return "r" + digits;
  };
  std::vector<Vertex> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i <= n; ++i) {
    vertices.push_back(name(i));
    edges.push_back(EdgeSpec{name(i), name(i), Mult::finite(2)});
    if (i > 0) {
      edges.push_back(EdgeSpec{name(i), name(i - 1), Mult::finite(1)});
    }
  }
  return Graph::build(vertices, edges);
}

}  // namespace lpa
