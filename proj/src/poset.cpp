#include "lpa/poset.hpp"

#include <algorithm>

namespace lpa {

SpecPoset build_spec_poset(const Graph& g, const FieldSpec& field,
                           int max_degree) {
  SpecPoset poset;
  for (const auto& p : enumerate_graded_primes(g)) {
    poset.nodes.push_back(PosetNode{p, false});
  }
  for (const auto& st : nongraded_strata(g, field, max_degree)) {
    if (st.symbolic) {
      poset.nodes.push_back(PosetNode{
          PrimeIdeal::non_graded(st.H, st.cycle, std::nullopt), true});
    } else {
      for (const auto& member : st.members) {
        poset.nodes.push_back(PosetNode{member, false});
      }
    }
  }
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [](const PosetNode& a, const PosetNode& b) {
              return a.ideal < b.ideal;
            });

  const std::size_t n = poset.nodes.size();
  poset.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      poset.less[i][j] =
          contains(g, poset.nodes[i].ideal, poset.nodes[j].ideal);
    }
  }

  poset.covers.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!poset.less[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (poset.less[i][k] && poset.less[k][j]) {
          direct = false;
          break;
        }
      }
      if (direct) poset.covers[i].push_back(j);
    }
  }
  return poset;
}

namespace {

bool has_below(const SpecPoset& poset, std::size_t i) {
  for (std::size_t j = 0; j < poset.nodes.size(); ++j) {
    if (poset.less[j][i]) return true;
  }
  return false;
}

bool has_above(const SpecPoset& poset, std::size_t i) {
  for (std::size_t j = 0; j < poset.nodes.size(); ++j) {
    if (poset.less[i][j]) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> poset_minimal_nodes(const SpecPoset& poset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    if (!has_below(poset, i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> poset_maximal_nodes(const SpecPoset& poset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    if (!has_above(poset, i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> poset_height_one_nodes(const SpecPoset& poset) {
  std::vector<std::size_t> out;
  const std::size_t n = poset.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool some = false;
    bool all_minimal = true;
    for (std::size_t j = 0; j < n && all_minimal; ++j) {
      if (!poset.less[j][i]) continue;
      some = true;
      if (has_below(poset, j)) all_minimal = false;
    }
    if (some && all_minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> poset_coheight_one_nodes(const SpecPoset& poset) {
  std::vector<std::size_t> out;
  const std::size_t n = poset.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool some = false;
    bool all_maximal = true;
    for (std::size_t j = 0; j < n && all_maximal; ++j) {
      if (!poset.less[i][j]) continue;
      some = true;
      if (has_above(poset, j)) all_maximal = false;
    }
    if (some && all_maximal) out.push_back(i);
  }
  return out;
}

int poset_dimension(const SpecPoset& poset) {
  const std::size_t n = poset.nodes.size();
  // Longest chain ending at each node, by link count. The relation is a
  // strict order, so the recursion grounds out at minimal nodes.
  std::vector<int> memo(n, -1);
  auto height = [&](auto&& self, std::size_t i) -> int {
    if (memo[i] >= 0) return memo[i];
    int best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.less[j][i]) best = std::max(best, self(self, j) + 1);
    }
    return memo[i] = best;
  };
  int dim = 0;
  for (std::size_t i = 0; i < n; ++i) dim = std::max(dim, height(height, i));
  return dim;
}

int krull_dimension(const Graph& g, const FieldSpec& field, int max_degree) {
  return poset_dimension(build_spec_poset(g, field, max_degree));
}

}  // namespace lpa
