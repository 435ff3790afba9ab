#include "fintop/rigidify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace fintop {

std::vector<std::vector<int>> orbit_of_tuple(const std::vector<Perm>& group,
                                             const std::vector<int>& tuple, int domain_size) {
  for (const Perm& g : group)
    if (static_cast<int>(g.size()) != domain_size || !is_permutation(g))
      throw std::invalid_argument("orbit_of_tuple: not a permutation of the domain");
  for (int x : tuple)
    if (x < 0 || x >= domain_size)
      throw std::invalid_argument("orbit_of_tuple: tuple references elements outside the domain");
  std::set<std::vector<int>> orbit;
  for (const Perm& g : group) {
    std::vector<int> img;
    img.reserve(tuple.size());
    for (int x : tuple) img.push_back(g[static_cast<std::size_t>(x)]);
    orbit.insert(std::move(img));
  }
  return {orbit.begin(), orbit.end()};
}

RigidificationResult rigidify(const SimplicialComplex& K,
                              const std::vector<SimplicialMap>& G_action, const VertexPath& P,
                              const RigidifyOptions& opts) {
  if (!K.is_connected()) throw std::invalid_argument("rigidify requires a connected complex");
  if (G_action.size() < 2)
    throw std::invalid_argument("rigidify requires |G| >= 2 (use rigidify_trivial)");
  for (const SimplicialMap& f : G_action)
    if (!is_automorphism(K, f))
      throw std::invalid_argument("G_action contains a map that is not an automorphism");
  {
    std::set<std::vector<int>> distinct;
    for (const SimplicialMap& f : G_action) distinct.insert(f.image);
    if (distinct.size() != G_action.size())
      throw std::invalid_argument("G_action contains duplicate automorphisms");
  }

  // Canonical element order and composition table.
  std::vector<SimplicialMap> G = G_action;
  std::sort(G.begin(), G.end());
  const int ord = static_cast<int>(G.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < ord; ++i) index[G[static_cast<std::size_t>(i)].image] = i;
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(ord), std::vector<int>(static_cast<std::size_t>(ord)));
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b) {
      auto it = index.find(compose(G[static_cast<std::size_t>(a)], G[static_cast<std::size_t>(b)]).image);
      if (it == index.end())
        throw std::invalid_argument("G_action is not closed under composition");
      comp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = it->second;
    }

  // Walk checks: a path covering every vertex, no consecutive repeats.
  if (!is_vertex_path(K, P))
    throw std::invalid_argument("P is not a vertex path of K (consecutive entries must span edges)");
  {
    std::vector<char> seen(static_cast<std::size_t>(K.vertex_count()), 0);
    for (int v : P.vertices) seen[static_cast<std::size_t>(v)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("P does not cover every vertex of K");
  }
  const int m = P.length();
  if (m < 2) throw std::invalid_argument("walk too short for a band (need length >= 2)");

  const int D = opts.band_dimension > 0 ? opts.band_dimension : std::max(3, K.dimension() + 2);
  BandComplex band = band_complex(m, D);

  // Spine template indices x_0..x_m.
  std::vector<int> spine_idx;
  std::vector<char> is_spine(static_cast<std::size_t>(band.complex.vertex_count()), 0);
  for (const std::string& s : band.spine) {
    int idx = band.complex.index_of(s);
    spine_idx.push_back(idx);
    is_spine[static_cast<std::size_t>(idx)] = 1;
  }

  // Global label set: K plus namespaced band vertices.
  std::vector<std::string> labels = K.labels();
  std::vector<std::vector<std::string>> band_vertex_labels(static_cast<std::size_t>(ord));
  for (int g = 0; g < ord; ++g) {
    std::string prefix = "band" + std::to_string(g) + "/";
    for (int v = 0; v < band.complex.vertex_count(); ++v)
      if (!is_spine[static_cast<std::size_t>(v)]) {
        labels.push_back(prefix + band.complex.label(v));
        band_vertex_labels[static_cast<std::size_t>(g)].push_back(labels.back());
      }
  }
  std::sort(labels.begin(), labels.end());
  std::unordered_map<std::string, int> global;
  global.reserve(labels.size() * 2);
  for (std::size_t i = 0; i < labels.size(); ++i) global[labels[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> simplices;
  simplices.reserve(K.simplices().size() + static_cast<std::size_t>(ord) * band.complex.simplices().size());
  {
    std::vector<int> kmap(static_cast<std::size_t>(K.vertex_count()));
    for (int v = 0; v < K.vertex_count(); ++v) kmap[static_cast<std::size_t>(v)] = global[K.label(v)];
    for (const auto& s : K.simplices()) {
      std::vector<int> t;
      t.reserve(s.size());
      for (int v : s) t.push_back(kmap[static_cast<std::size_t>(v)]);
      std::sort(t.begin(), t.end());
      simplices.push_back(std::move(t));
    }
  }
  for (int g = 0; g < ord; ++g) {
    std::string prefix = "band" + std::to_string(g) + "/";
    std::vector<int> remap(static_cast<std::size_t>(band.complex.vertex_count()));
    for (int j = 0; j <= m; ++j) {
      int walk_vertex = G[static_cast<std::size_t>(g)].image[static_cast<std::size_t>(P.vertices[static_cast<std::size_t>(j)])];
      remap[static_cast<std::size_t>(spine_idx[static_cast<std::size_t>(j)])] = global[K.label(walk_vertex)];
    }
    for (int v = 0; v < band.complex.vertex_count(); ++v)
      if (!is_spine[static_cast<std::size_t>(v)])
        remap[static_cast<std::size_t>(v)] = global[prefix + band.complex.label(v)];
    for (const auto& s : band.complex.simplices()) {
      std::vector<int> t;
      t.reserve(s.size());
      for (int v : s) t.push_back(remap[static_cast<std::size_t>(v)]);
      std::sort(t.begin(), t.end());
      if (std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("walk repetition collapses a band simplex");
      simplices.push_back(std::move(t));
    }
  }

  RigidificationResult out;
  out.complex = SimplicialComplex::from_closed_simplices(std::move(labels), std::move(simplices));
  out.base = K.labels();
  out.bands = std::move(band_vertex_labels);
  out.walk = P.vertices;
  out.band_dimension = D;

  // Action: each g acts on the base by its own map and permutes the bands by
  // left composition.
  for (int g = 0; g < ord; ++g) {
    SimplicialMap f;
    f.image.assign(static_cast<std::size_t>(out.complex.vertex_count()), -1);
    for (int v = 0; v < K.vertex_count(); ++v)
      f.image[static_cast<std::size_t>(out.complex.index_of(K.label(v)))] =
          out.complex.index_of(K.label(G[static_cast<std::size_t>(g)].image[static_cast<std::size_t>(v)]));
    for (int h = 0; h < ord; ++h) {
      int gh = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
      std::string from = "band" + std::to_string(h) + "/";
      std::string to = "band" + std::to_string(gh) + "/";
      for (int v = 0; v < band.complex.vertex_count(); ++v)
        if (!is_spine[static_cast<std::size_t>(v)])
          f.image[static_cast<std::size_t>(out.complex.index_of(from + band.complex.label(v)))] =
              out.complex.index_of(to + band.complex.label(v));
    }
    if (!is_automorphism(out.complex, f))
      throw std::runtime_error("extended action map is not an automorphism of the rigidification");
    out.action.push_back(std::move(f));
  }
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b)
      if (!(compose(out.action[static_cast<std::size_t>(a)], out.action[static_cast<std::size_t>(b)]).image ==
            out.action[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])].image))
        throw std::runtime_error("extended action is not a homomorphism");
  return out;
}

SimplicialComplex rigidify_trivial(const SimplicialComplex& K) {
  if (!K.is_connected()) throw std::invalid_argument("rigidify_trivial requires a connected complex");
  const int n = K.vertex_count();

  std::vector<std::string> labels = K.labels();
  std::vector<std::vector<int>> simplices = K.simplices();
  std::vector<SimplicialComplex> gadgets;
  gadgets.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    gadgets.push_back(w_complex(n + i));
    std::string prefix = "w" + std::to_string(i) + "/";
    for (const auto& l : gadgets.back().labels())
      if (l != "v2") labels.push_back(prefix + l);
  }
  std::sort(labels.begin(), labels.end());
  std::unordered_map<std::string, int> global;
  for (std::size_t i = 0; i < labels.size(); ++i) global[labels[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> out_simplices;
  {
    std::vector<int> kmap(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) kmap[static_cast<std::size_t>(v)] = global[K.label(v)];
    for (const auto& s : simplices) {
      std::vector<int> t;
      for (int v : s) t.push_back(kmap[static_cast<std::size_t>(v)]);
      std::sort(t.begin(), t.end());
      out_simplices.push_back(std::move(t));
    }
  }
  for (int i = 1; i <= n; ++i) {
    const SimplicialComplex& W = gadgets[static_cast<std::size_t>(i - 1)];
    std::string prefix = "w" + std::to_string(i) + "/";
    std::vector<int> remap(static_cast<std::size_t>(W.vertex_count()));
    for (int v = 0; v < W.vertex_count(); ++v)
      remap[static_cast<std::size_t>(v)] = W.label(v) == "v2"
                                               ? global[K.label(i - 1)]
                                               : global[prefix + W.label(v)];
    for (const auto& s : W.simplices()) {
      std::vector<int> t;
      for (int v : s) t.push_back(remap[static_cast<std::size_t>(v)]);
      std::sort(t.begin(), t.end());
      out_simplices.push_back(std::move(t));
    }
  }
  return SimplicialComplex::from_closed_simplices(std::move(labels), std::move(out_simplices));
}

}  // namespace fintop
