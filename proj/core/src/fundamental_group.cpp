#include "fintop/fundamental_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fintop {

Presentation edge_path_pi1(const SimplicialComplex& K, const std::string& base) {
  return edge_path_pi1(K, K.index_of(base));
}

Presentation edge_path_pi1(const SimplicialComplex& K, int base) {
  if (!K.is_connected()) throw std::invalid_argument("edge_path_pi1 requires a connected complex");
  if (base < 0 || base >= K.vertex_count()) throw std::invalid_argument("base vertex out of range");

  // DFS spanning tree (lexicographic children order, as in covering_walk).
  const auto& adj = K.skeleton();
  std::vector<char> in_tree_edge(static_cast<std::size_t>(K.count_in_dim(1)), 0);
  const int edge_lo = K.dim_begin(1);
  auto edge_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return K.simplex_index({a, b});
  };
  {
    std::vector<char> seen(static_cast<std::size_t>(K.vertex_count()), 0);
    std::vector<std::pair<int, std::size_t>> stack{{base, 0}};
    seen[static_cast<std::size_t>(base)] = 1;
    while (!stack.empty()) {
      auto& [v, cursor] = stack.back();
      bool pushed = false;
      while (cursor < adj[static_cast<std::size_t>(v)].size()) {
        int u = adj[static_cast<std::size_t>(v)][cursor++];
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          in_tree_edge[static_cast<std::size_t>(edge_index(v, u) - edge_lo)] = 1;
          stack.push_back({u, 0});
          pushed = true;
          break;
        }
      }
      if (!pushed) stack.pop_back();
    }
  }

  Presentation p;
  std::vector<int> generator_of(static_cast<std::size_t>(K.count_in_dim(1)), -1);
  for (int e = 0; e < K.count_in_dim(1); ++e) {
    if (in_tree_edge[static_cast<std::size_t>(e)]) continue;
    const auto& edge = K.simplices()[static_cast<std::size_t>(edge_lo + e)];
    generator_of[static_cast<std::size_t>(e)] = static_cast<int>(p.generators.size());
    p.generators.push_back("[" + K.label(edge[0]) + "|" + K.label(edge[1]) + "]");
  }

  // One relator per 2-simplex {a,b,c}: (a,b)(b,c)(a,c)^{-1}.
  for (int i = K.dim_begin(2); i < K.dim_end(2); ++i) {
    const auto& t = K.simplices()[static_cast<std::size_t>(i)];
    Word w;
    auto push_edge = [&](int a, int b, int exp) {
      int g = generator_of[static_cast<std::size_t>(edge_index(a, b) - edge_lo)];
      if (g >= 0) w.letters.push_back({g, exp});
    };
    push_edge(t[0], t[1], 1);
    push_edge(t[1], t[2], 1);
    push_edge(t[0], t[2], -1);
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

long long hom_count(const Presentation& p, const FiniteGroup& T) {
  p.validate();
  const int n = static_cast<int>(p.generators.size());
  const long long order = T.order();
  double log_total = n * std::log2(static_cast<double>(order == 0 ? 1 : order));
  if (log_total > 31) throw std::runtime_error("hom_count domain too large");

  long long total = 1;
  for (int i = 0; i < n; ++i) total *= order;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  long long count = 0;
  for (long long it = 0; it < total; ++it) {
    bool ok = true;
    for (const Word& w : p.relators) {
      int acc = T.identity();
      for (const Letter& l : w.letters) {
        int x = assign[static_cast<std::size_t>(l.generator)];
        if (l.exponent < 0) x = T.inverse(x);
        acc = T.mul(acc, x);
      }
      if (acc != T.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    for (int j = n - 1; j >= 0; --j) {
      if (++assign[static_cast<std::size_t>(j)] < order) break;
      assign[static_cast<std::size_t>(j)] = 0;
    }
  }
  return count;
}

std::vector<std::pair<std::string, FiniteGroup>> default_hom_panel() {
  std::vector<std::pair<std::string, FiniteGroup>> panel;
  panel.emplace_back("Z2", FiniteGroup::cyclic(2));
  panel.emplace_back("Z3", FiniteGroup::cyclic(3));
  panel.emplace_back("Z4", FiniteGroup::cyclic(4));
  // S3 as permutations of 3 points.
  {
    auto elems = symmetric_group(3);
    std::vector<std::string> names;
    std::map<Perm, int> idx;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      std::string n = "p";
      for (int x : elems[i]) n += std::to_string(x);
      names.push_back(n);
      idx[elems[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            idx[perm_compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)])];
    int id = idx[perm_identity(3)];
    panel.emplace_back("S3", FiniteGroup(std::move(names), id, std::move(table)));
  }
  // Z/2 x Z/2.
  {
    std::vector<std::string> names{"e", "a", "b", "ab"};
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
    panel.emplace_back("Z2xZ2", FiniteGroup(std::move(names), 0, std::move(table)));
  }
  return panel;
}

}  // namespace fintop
