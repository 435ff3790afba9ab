#include "fintop/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "fintop/automorphism_engine.hpp"

namespace fintop {

namespace {

bool simplex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void append_subsets(const std::vector<int>& facet,
                    std::unordered_set<std::vector<int>, VecIntHash>& out) {
  const std::size_t k = facet.size();
  if (k > 25) throw std::invalid_argument("facet too large for downward closure");
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(__builtin_popcount(mask)));
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(facet[i]);
    out.insert(std::move(s));
  }
}

}  // namespace

void SimplicialComplex::finalize(std::vector<std::vector<int>> simplices) {
  simplices_ = std::move(simplices);
  std::sort(simplices_.begin(), simplices_.end(), simplex_less);
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());

  label_index_.clear();
  label_index_.reserve(labels_.size() * 2);
  for (std::size_t i = 0; i < labels_.size(); ++i)
    label_index_[labels_[i]] = static_cast<int>(i);

  simplex_index_.clear();
  simplex_index_.reserve(simplices_.size() * 2);
  dim_ = -1;
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const auto& s = simplices_[i];
    if (s.empty()) throw std::invalid_argument("empty simplex");
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0 || s[j] >= vertex_count())
        throw std::invalid_argument("simplex references unknown vertex");
      if (j > 0 && s[j] <= s[j - 1]) throw std::invalid_argument("simplex vertices not sorted");
    }
    simplex_index_[s] = static_cast<int>(i);
    dim_ = std::max(dim_, static_cast<int>(s.size()) - 1);
  }

  // dim_offsets_[s] = first index of the block of simplices with s vertices.
  dim_offsets_.assign(static_cast<std::size_t>(dim_ + 3), 0);
  for (const auto& s : simplices_) ++dim_offsets_[s.size() + 1];
  for (std::size_t d = 1; d < dim_offsets_.size(); ++d) dim_offsets_[d] += dim_offsets_[d - 1];
  skeleton_.clear();
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& facets) {
  SimplicialComplex K;
  K.labels_ = vertices;
  std::sort(K.labels_.begin(), K.labels_.end());
  if (std::adjacent_find(K.labels_.begin(), K.labels_.end()) != K.labels_.end())
    throw std::invalid_argument("duplicate vertex label");
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < K.labels_.size(); ++i) idx[K.labels_[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> index_facets;
  index_facets.reserve(facets.size());
  for (const auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    std::vector<int> g;
    g.reserve(f.size());
    for (const auto& l : f) {
      auto it = idx.find(l);
      if (it == idx.end()) throw std::invalid_argument("facet references unknown vertex: " + l);
      g.push_back(it->second);
    }
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
      throw std::invalid_argument("duplicate vertex in a facet");
    index_facets.push_back(std::move(g));
  }
  return from_index_facets(std::move(K.labels_), index_facets);
}

SimplicialComplex SimplicialComplex::from_simplices(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& simplices) {
  return from_facets(vertices, simplices);
}

SimplicialComplex SimplicialComplex::from_index_facets(
    std::vector<std::string> labels, const std::vector<std::vector<int>>& facets) {
  SimplicialComplex K;
  K.labels_ = std::move(labels);
  for (std::size_t i = 1; i < K.labels_.size(); ++i)
    if (!(K.labels_[i - 1] < K.labels_[i]))
      throw std::invalid_argument("labels must be sorted and unique");

  std::unordered_set<std::vector<int>, VecIntHash> closed;
  for (const auto& f : facets) append_subsets(f, closed);
  for (int v = 0; v < K.vertex_count(); ++v) closed.insert({v});

  std::vector<std::vector<int>> all(closed.begin(), closed.end());
  K.finalize(std::move(all));
  return K;
}

SimplicialComplex SimplicialComplex::from_closed_simplices(std::vector<std::string> labels,
                                                           std::vector<std::vector<int>> simplices) {
  SimplicialComplex K;
  K.labels_ = std::move(labels);
  for (std::size_t i = 1; i < K.labels_.size(); ++i)
    if (!(K.labels_[i - 1] < K.labels_[i]))
      throw std::invalid_argument("labels must be sorted and unique");
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  for (int v = 0; v < K.vertex_count(); ++v) simplices.push_back({v});
  K.finalize(std::move(simplices));
  return K;
}

int SimplicialComplex::index_of(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) throw std::invalid_argument("unknown vertex label: " + label);
  return it->second;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& s) const {
  return simplex_index_.find(s) != simplex_index_.end();
}

int SimplicialComplex::simplex_index(const std::vector<int>& s) const {
  auto it = simplex_index_.find(s);
  return it == simplex_index_.end() ? -1 : it->second;
}

int SimplicialComplex::dim_begin(int d) const {
  if (d < 0 || d > dim_) return simplex_count();
  return dim_offsets_[static_cast<std::size_t>(d) + 1];
}

int SimplicialComplex::dim_end(int d) const {
  if (d < 0 || d > dim_) return simplex_count();
  return dim_offsets_[static_cast<std::size_t>(d) + 2];
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  // A simplex is maximal iff no coface of codimension 1 exists.
  std::vector<std::vector<int>> out;
  std::unordered_set<std::vector<int>, VecIntHash> non_maximal;
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    std::vector<int> face;
    face.reserve(s.size() - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<long>(i));
      non_maximal.insert(face);
    }
  }
  for (const auto& s : simplices_)
    if (non_maximal.find(s) == non_maximal.end()) out.push_back(s);
  return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets()) out.push_back(to_labels(f));
  return out;
}

const std::vector<std::vector<int>>& SimplicialComplex::skeleton() const {
  if (skeleton_.empty() && vertex_count() > 0) {
    skeleton_.assign(static_cast<std::size_t>(vertex_count()), {});
    for (int i = dim_begin(1); i < dim_end(1); ++i) {
      const auto& e = simplices_[static_cast<std::size_t>(i)];
      skeleton_[e[0]].push_back(e[1]);
      skeleton_[e[1]].push_back(e[0]);
    }
    for (auto& nbrs : skeleton_) std::sort(nbrs.begin(), nbrs.end());
  }
  return skeleton_;
}

std::vector<std::vector<int>> SimplicialComplex::membership_vectors() const {
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(vertex_count()),
                                       std::vector<int>(static_cast<std::size_t>(dim_ + 1), 0));
  for (const auto& s : simplices_) {
    int d = static_cast<int>(s.size()) - 1;
    for (int v : s) ++counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
  }
  return counts;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::is_connected() const {
  if (vertex_count() == 0) return false;
  const auto& adj = skeleton();
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
  }
  return visited == vertex_count();
}

std::vector<int> SimplicialComplex::to_indices(const std::vector<std::string>& ls) const {
  std::vector<int> out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(index_of(l));
  return out;
}

std::vector<std::string> SimplicialComplex::to_labels(const std::vector<int>& idx) const {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(labels_[static_cast<std::size_t>(i)]);
  return out;
}

bool is_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                       const SimplicialMap& f) {
  if (static_cast<int>(f.image.size()) != dom.vertex_count()) return false;
  for (int w : f.image)
    if (w < 0 || w >= cod.vertex_count()) return false;
  for (const auto& s : dom.facets()) {
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s) img.push_back(f.image[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!cod.has_simplex(img)) return false;
  }
  return true;
}

bool is_automorphism(const SimplicialComplex& K, const SimplicialMap& f) {
  if (static_cast<int>(f.image.size()) != K.vertex_count()) return false;
  std::vector<char> seen(f.image.size(), 0);
  for (int w : f.image) {
    if (w < 0 || w >= K.vertex_count() || seen[static_cast<std::size_t>(w)]) return false;
    seen[static_cast<std::size_t>(w)] = 1;
  }
  // Injective vertex map: simplex images keep their size, so preserving all
  // simplices forces a bijection on simplices in each dimension.
  for (const auto& s : K.facets()) {
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s) img.push_back(f.image[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    if (!K.has_simplex(img)) return false;
  }
  return true;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.image.resize(g.image.size());
  for (std::size_t i = 0; i < g.image.size(); ++i)
    h.image[i] = f.image[static_cast<std::size_t>(g.image[i])];
  return h;
}

SimplicialMap map_from_labels(const SimplicialComplex& dom, const SimplicialComplex& cod,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
  SimplicialMap f;
  f.image.assign(static_cast<std::size_t>(dom.vertex_count()), -1);
  for (const auto& [a, b] : pairs) f.image[static_cast<std::size_t>(dom.index_of(a))] = cod.index_of(b);
  for (int v = 0; v < dom.vertex_count(); ++v)
    if (f.image[static_cast<std::size_t>(v)] < 0)
      throw std::invalid_argument("vertex map missing image for " + dom.label(v));
  return f;
}

bool is_vertex_path(const SimplicialComplex& K, const VertexPath& p) {
  if (p.vertices.empty()) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    std::vector<int> e{p.vertices[i], p.vertices[i + 1]};
    if (e[0] == e[1]) return false;
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (!K.has_simplex(e)) return false;
  }
  return true;
}

std::string simplex_label(const SimplicialComplex& K, const std::vector<int>& simplex) {
  std::string out = "{";
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) out += ",";
    out += K.label(simplex[i]);
  }
  out += "}";
  return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
  const auto& simp = K.simplices();
  const int n = K.simplex_count();

  // Proper cofaces of each simplex, found by enumerating subsets.
  std::vector<std::vector<int>> cofaces(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto& s = simp[static_cast<std::size_t>(j)];
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      int idx = K.simplex_index(sub);
      if (idx >= 0) cofaces[static_cast<std::size_t>(idx)].push_back(j);
    }
  }

  // New vertex per simplex, labels sorted for the new complex.
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = simplex_label(K, simp[static_cast<std::size_t>(i)]);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)]; });
  std::vector<int> new_id(static_cast<std::size_t>(n));
  std::vector<std::string> sorted_labels(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    new_id[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    sorted_labels[static_cast<std::size_t>(r)] = labels[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])];
  }

  // Enumerate all chains under strict inclusion.
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int last) -> void {
    for (int nxt : cofaces[static_cast<std::size_t>(last)]) {
      cur.push_back(nxt);
      std::vector<int> named;
      named.reserve(cur.size());
      for (int c : cur) named.push_back(new_id[static_cast<std::size_t>(c)]);
      std::sort(named.begin(), named.end());
      chains.push_back(std::move(named));
      self(self, nxt);
      cur.pop_back();
    }
  };
  for (int i = 0; i < n; ++i) {
    cur = {i};
    chains.push_back({new_id[static_cast<std::size_t>(i)]});
    extend(extend, i);
  }

  return SimplicialComplex::from_closed_simplices(std::move(sorted_labels), std::move(chains));
}

VertexPath covering_walk(const SimplicialComplex& K) {
  if (K.vertex_count() < 2)
    throw std::invalid_argument("covering_walk requires at least 2 vertices");
  if (!K.is_connected()) throw std::invalid_argument("covering_walk requires a connected complex");

  const auto& adj = K.skeleton();
  std::vector<char> seen(static_cast<std::size_t>(K.vertex_count()), 0);
  std::vector<int> tour{0};
  std::size_t last_new = 0;
  seen[0] = 1;
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, cursor] = stack.back();
    bool pushed = false;
    while (cursor < adj[static_cast<std::size_t>(v)].size()) {
      int u = adj[static_cast<std::size_t>(v)][cursor++];
      if (!seen[u]) {
        seen[u] = 1;
        tour.push_back(u);
        last_new = tour.size() - 1;
        stack.push_back({u, 0});
        pushed = true;
        break;
      }
    }
    if (!pushed) {
      stack.pop_back();
      if (!stack.empty()) tour.push_back(stack.back().first);
    }
  }
  tour.resize(last_new + 1);
  return VertexPath{tour};
}

SimplicialComplex glue(const std::vector<const SimplicialComplex*>& parts,
                       const std::vector<std::pair<std::pair<int, std::string>,
                                                   std::pair<int, std::string>>>& identifications) {
  // Union-find over (part, vertex) pairs.
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    offset[p + 1] = offset[p] + parts[p]->vertex_count();
  const int total = offset[parts.size()];
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const auto& [lhs, rhs] : identifications) {
    if (lhs.first < 0 || lhs.first >= static_cast<int>(parts.size()) || rhs.first < 0 ||
        rhs.first >= static_cast<int>(parts.size()))
      throw std::invalid_argument("identification references unknown part");
    unite(offset[static_cast<std::size_t>(lhs.first)] + parts[static_cast<std::size_t>(lhs.first)]->index_of(lhs.second),
          offset[static_cast<std::size_t>(rhs.first)] + parts[static_cast<std::size_t>(rhs.first)]->index_of(rhs.second));
  }

  // Representative label: the (part, label) pair smallest in part order.
  std::vector<std::string> rep_label(static_cast<std::size_t>(total));
  std::vector<char> is_rep(static_cast<std::size_t>(total), 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < parts[p]->vertex_count(); ++v) {
      int id = offset[p] + v;
      if (find(id) == id) is_rep[static_cast<std::size_t>(id)] = 1;
    }
  std::map<std::string, int> label_uses;
  for (int id = 0; id < total; ++id)
    if (is_rep[static_cast<std::size_t>(id)]) {
      int p = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin()) - 1;
      ++label_uses[parts[static_cast<std::size_t>(p)]->label(id - offset[static_cast<std::size_t>(p)])];
    }
  for (int id = 0; id < total; ++id) {
    if (!is_rep[static_cast<std::size_t>(id)]) continue;
    int p = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), id) - offset.begin()) - 1;
    const std::string& l = parts[static_cast<std::size_t>(p)]->label(id - offset[static_cast<std::size_t>(p)]);
    rep_label[static_cast<std::size_t>(id)] =
        label_uses[l] > 1 ? ("p" + std::to_string(p) + ":" + l) : l;
  }

  // Collect relabeled simplices; detect collapsed simplices.
  std::vector<std::string> labels;
  for (int id = 0; id < total; ++id)
    if (is_rep[static_cast<std::size_t>(id)]) labels.push_back(rep_label[static_cast<std::size_t>(id)]);
  std::sort(labels.begin(), labels.end());
  std::unordered_map<std::string, int> new_index;
  for (std::size_t i = 0; i < labels.size(); ++i) new_index[labels[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> simplices;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& s : parts[p]->simplices()) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int v : s)
        img.push_back(new_index[rep_label[static_cast<std::size_t>(find(offset[p] + v))]]);
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end())
        throw std::invalid_argument("identification collapses a simplex");
      simplices.push_back(std::move(img));
    }
  }
  return SimplicialComplex::from_closed_simplices(std::move(labels), std::move(simplices));
}

namespace {

SearchGraph complex_search_graph(const SimplicialComplex& K) {
  SearchGraph g;
  g.n = K.vertex_count();
  g.up = K.skeleton();
  g.down.assign(static_cast<std::size_t>(g.n), {});
  g.color.resize(static_cast<std::size_t>(g.n));
  auto mv = K.membership_vectors();
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t h = 0x12345;
    for (int c : mv[static_cast<std::size_t>(v)]) h = hash_combine(h, static_cast<std::uint64_t>(c));
    g.color[static_cast<std::size_t>(v)] = h;
  }
  return g;
}

std::function<bool(const std::vector<int>&)> facet_acceptor(const SimplicialComplex& dom,
                                                            const SimplicialComplex& cod) {
  auto facets = dom.facets();
  return [facets = std::move(facets), &cod](const std::vector<int>& image) {
    std::vector<int> img;
    for (const auto& s : facets) {
      img.clear();
      for (int v : s) img.push_back(image[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (!cod.has_simplex(img)) return false;
    }
    return true;
  };
}

}  // namespace

std::vector<SimplicialMap> automorphism_group(const SimplicialComplex& K,
                                              const AutomorphismOptions& opts) {
  SearchGraph g = complex_search_graph(K);
  std::vector<int> colors = refine_colors(g);
  EngineOptions eopts;
  eopts.node_budget = opts.node_budget;
  auto maps = enumerate_maps(g, g, colors, colors, facet_acceptor(K, K), eopts);
  std::vector<SimplicialMap> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(SimplicialMap{std::move(m)});
  return out;
}

std::optional<SimplicialMap> find_isomorphism(const SimplicialComplex& A,
                                              const SimplicialComplex& B,
                                              const AutomorphismOptions& opts) {
  if (A.vertex_count() != B.vertex_count() || A.simplex_count() != B.simplex_count() ||
      A.dimension() != B.dimension())
    return std::nullopt;
  for (int d = 0; d <= A.dimension(); ++d)
    if (A.count_in_dim(d) != B.count_in_dim(d)) return std::nullopt;
  SearchGraph ga = complex_search_graph(A);
  SearchGraph gb = complex_search_graph(B);
  auto [ca, cb] = refine_colors_joint(ga, gb);
  EngineOptions eopts;
  eopts.node_budget = opts.node_budget;
  eopts.first_only = true;
  auto maps = enumerate_maps(ga, gb, ca, cb, facet_acceptor(A, B), eopts);
  if (maps.empty()) return std::nullopt;
  return SimplicialMap{maps.front()};
}

bool isomorphic(const SimplicialComplex& A, const SimplicialComplex& B) {
  return find_isomorphism(A, B).has_value();
}

}  // namespace fintop
