#include "fintop/finite_poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fintop/automorphism_engine.hpp"

namespace fintop {

void FinitePoset::finalize(bool validate_reduction) {
  index_.clear();
  index_.reserve(points_.size() * 2);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].empty()) throw std::invalid_argument("empty point name");
    if (!index_.emplace(points_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate point name: " + points_[i]);
  }
  for (auto& v : up_) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument("duplicate cover pair");
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());

  // Acyclicity via Kahn's algorithm.
  std::vector<int> indeg(points_.size(), 0);
  for (std::size_t p = 0; p < points_.size(); ++p) indeg[p] = static_cast<int>(down_[p].size());
  std::vector<int> queue;
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (indeg[p] == 0) queue.push_back(static_cast<int>(p));
  std::size_t head = 0, seen = 0;
  while (head < queue.size()) {
    int p = queue[head++];
    ++seen;
    for (int q : up_[static_cast<std::size_t>(p)])
      if (--indeg[static_cast<std::size_t>(q)] == 0) queue.push_back(q);
  }
  if (seen != points_.size()) throw std::invalid_argument("cover relation contains a cycle");

  if (validate_reduction) {
    // A cover (p, q) is transitively implied iff q is reachable from p in
    // two or more cover steps.
    for (std::size_t p = 0; p < points_.size(); ++p) {
      if (up_[p].empty()) continue;
      std::vector<char> reach(points_.size(), 0);
      std::vector<int> stack;
      for (int q : up_[p])
        for (int r : up_[static_cast<std::size_t>(q)])
          if (!reach[static_cast<std::size_t>(r)]) {
            reach[static_cast<std::size_t>(r)] = 1;
            stack.push_back(r);
          }
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int r : up_[static_cast<std::size_t>(q)])
          if (!reach[static_cast<std::size_t>(r)]) {
            reach[static_cast<std::size_t>(r)] = 1;
            stack.push_back(r);
          }
      }
      for (int q : up_[p])
        if (reach[static_cast<std::size_t>(q)])
          throw std::invalid_argument("cover relation contains transitively implied pair: " +
                                      points_[p] + " < " + points_[static_cast<std::size_t>(q)]);
    }
  }
}

FinitePoset FinitePoset::from_covers(const std::vector<std::string>& points,
                                     const std::vector<std::pair<std::string, std::string>>& covers,
                                     int validate_reduction_limit) {
  FinitePoset X;
  X.points_ = points;
  std::sort(X.points_.begin(), X.points_.end());
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < X.points_.size(); ++i) idx[X.points_[i]] = static_cast<int>(i);
  X.up_.assign(X.points_.size(), {});
  X.down_.assign(X.points_.size(), {});
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end() || b == idx.end())
      throw std::invalid_argument("cover references unknown point");
    if (a->second == b->second) throw std::invalid_argument("cover relates a point to itself");
    X.up_[static_cast<std::size_t>(a->second)].push_back(b->second);
    X.down_[static_cast<std::size_t>(b->second)].push_back(a->second);
  }
  X.finalize(X.size() <= validate_reduction_limit);
  return X;
}

FinitePoset FinitePoset::from_index_covers(std::vector<std::string> points,
                                           std::vector<std::pair<int, int>> covers, bool validate) {
  FinitePoset X;
  X.points_ = std::move(points);
  X.up_.assign(X.points_.size(), {});
  X.down_.assign(X.points_.size(), {});
  for (auto& [lo, hi] : covers) {
    X.up_[static_cast<std::size_t>(lo)].push_back(hi);
    X.down_[static_cast<std::size_t>(hi)].push_back(lo);
  }
  X.finalize(validate && X.size() <= 50000);
  return X;
}

int FinitePoset::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown point name: " + name);
  return it->second;
}

long long FinitePoset::cover_count() const {
  long long c = 0;
  for (const auto& v : up_) c += static_cast<long long>(v.size());
  return c;
}

bool FinitePoset::less(int a, int b) const {
  if (a == b) return false;
  std::vector<char> seen(points_.size(), 0);
  std::vector<int> stack{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int q : up_[static_cast<std::size_t>(p)]) {
      if (q == b) return true;
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        stack.push_back(q);
      }
    }
  }
  return false;
}

namespace {

std::vector<int> topo_order(const FinitePoset& X) {
  std::vector<int> indeg(static_cast<std::size_t>(X.size()), 0);
  for (int p = 0; p < X.size(); ++p) indeg[static_cast<std::size_t>(p)] = static_cast<int>(X.down()[static_cast<std::size_t>(p)].size());
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(X.size()));
  for (int p = 0; p < X.size(); ++p)
    if (indeg[static_cast<std::size_t>(p)] == 0) order.push_back(p);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (int q : X.up()[static_cast<std::size_t>(order[head])])
      if (--indeg[static_cast<std::size_t>(q)] == 0) order.push_back(q);
  return order;
}

}  // namespace

std::vector<int> FinitePoset::heights() const {
  std::vector<int> h(points_.size(), 0);
  for (int p : topo_order(*this))
    for (int q : up_[static_cast<std::size_t>(p)])
      h[static_cast<std::size_t>(q)] = std::max(h[static_cast<std::size_t>(q)], h[static_cast<std::size_t>(p)] + 1);
  return h;
}

std::vector<int> FinitePoset::depths() const {
  std::vector<int> d(points_.size(), 0);
  auto order = topo_order(*this);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int q : up_[static_cast<std::size_t>(*it)])
      d[static_cast<std::size_t>(*it)] =
          std::max(d[static_cast<std::size_t>(*it)], d[static_cast<std::size_t>(q)] + 1);
  return d;
}

int FinitePoset::max_chain_cardinality() const {
  if (points_.empty()) return 0;
  auto h = heights();
  return *std::max_element(h.begin(), h.end()) + 1;
}

std::vector<std::vector<int>> FinitePoset::strict_upsets() const {
  // Reverse-topological merge of cover upsets.
  std::vector<std::vector<int>> ups(points_.size());
  auto order = topo_order(*this);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int p = *it;
    std::vector<int>& out = ups[static_cast<std::size_t>(p)];
    out = up_[static_cast<std::size_t>(p)];
    for (int q : up_[static_cast<std::size_t>(p)]) {
      const auto& uq = ups[static_cast<std::size_t>(q)];
      std::vector<int> merged;
      merged.reserve(out.size() + uq.size());
      std::merge(out.begin(), out.end(), uq.begin(), uq.end(), std::back_inserter(merged));
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      out = std::move(merged);
    }
  }
  return ups;
}

bool is_monotone(const FinitePoset& dom, const FinitePoset& cod, const PosetMap& f) {
  if (static_cast<int>(f.image.size()) != dom.size()) return false;
  for (int p = 0; p < dom.size(); ++p)
    for (int q : dom.up()[static_cast<std::size_t>(p)]) {
      int a = f.image[static_cast<std::size_t>(p)], b = f.image[static_cast<std::size_t>(q)];
      if (a != b && !cod.less(a, b)) return false;
    }
  return true;
}

bool is_poset_automorphism(const FinitePoset& X, const PosetMap& f) {
  if (static_cast<int>(f.image.size()) != X.size()) return false;
  std::vector<char> seen(f.image.size(), 0);
  for (int w : f.image) {
    if (w < 0 || w >= X.size() || seen[static_cast<std::size_t>(w)]) return false;
    seen[static_cast<std::size_t>(w)] = 1;
  }
  // A bijection preserving covers preserves the order both ways.
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)]) {
      const auto& ups = X.up()[static_cast<std::size_t>(f.image[static_cast<std::size_t>(p)])];
      if (!std::binary_search(ups.begin(), ups.end(), f.image[static_cast<std::size_t>(q)]))
        return false;
    }
  return true;
}

FinitePoset face_poset(const SimplicialComplex& K) {
  const auto& simp = K.simplices();
  std::vector<std::string> names(simp.size());
  for (std::size_t i = 0; i < simp.size(); ++i) names[i] = simplex_label(K, simp[i]);

  std::vector<int> order(simp.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return names[static_cast<std::size_t>(a)] < names[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_id(simp.size());
  std::vector<std::string> sorted_names(simp.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    new_id[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    sorted_names[r] = names[static_cast<std::size_t>(order[r])];
  }

  std::vector<std::pair<int, int>> covers;
  std::vector<int> face;
  for (std::size_t i = 0; i < simp.size(); ++i) {
    const auto& s = simp[i];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<long>(j));
      int fi = K.simplex_index(face);
      covers.emplace_back(new_id[static_cast<std::size_t>(fi)], new_id[i]);
    }
  }
  return FinitePoset::from_index_covers(std::move(sorted_names), std::move(covers), false);
}

SimplicialComplex order_complex(const FinitePoset& X) {
  auto ups = X.strict_upsets();
  long long chain_estimate = 0;

  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int last) -> void {
    for (int nxt : ups[static_cast<std::size_t>(last)]) {
      cur.push_back(nxt);
      chains.push_back(cur);
      if (++chain_estimate > 30000000LL)
        throw std::runtime_error("order_complex too large to materialise");
      self(self, nxt);
      cur.pop_back();
    }
  };
  for (int p = 0; p < X.size(); ++p) {
    cur = {p};
    chains.push_back(cur);
    extend(extend, p);
  }

  // from_index_facets needs sorted labels; remap through a name-sorted index.
  std::vector<std::string> names = X.points();
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return names[static_cast<std::size_t>(a)] < names[static_cast<std::size_t>(b)]; });
  std::vector<int> new_id(names.size());
  std::vector<std::string> sorted_names(names.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    new_id[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    sorted_names[r] = names[static_cast<std::size_t>(order[r])];
  }
  for (auto& c : chains) {
    for (int& p : c) p = new_id[static_cast<std::size_t>(p)];
    std::sort(c.begin(), c.end());
  }
  return SimplicialComplex::from_closed_simplices(std::move(sorted_names), std::move(chains));
}

std::vector<int> beat_points(const FinitePoset& X) {
  std::vector<int> out;
  for (int p = 0; p < X.size(); ++p)
    if (X.up()[static_cast<std::size_t>(p)].size() == 1 ||
        X.down()[static_cast<std::size_t>(p)].size() == 1)
      out.push_back(p);
  return out;
}

bool is_minimal(const FinitePoset& X) { return beat_points(X).empty(); }

namespace {

SearchGraph poset_search_graph(const FinitePoset& X) {
  SearchGraph g;
  g.n = X.size();
  g.up = X.up();
  g.down = X.down();
  g.color.resize(static_cast<std::size_t>(g.n));
  auto h = X.heights();
  auto d = X.depths();
  for (int p = 0; p < g.n; ++p) {
    std::uint64_t c = hash_combine(static_cast<std::uint64_t>(X.up()[static_cast<std::size_t>(p)].size()),
                                   static_cast<std::uint64_t>(X.down()[static_cast<std::size_t>(p)].size()));
    c = hash_combine(c, static_cast<std::uint64_t>(h[static_cast<std::size_t>(p)]));
    c = hash_combine(c, static_cast<std::uint64_t>(d[static_cast<std::size_t>(p)]));
    g.color[static_cast<std::size_t>(p)] = c;
  }
  return g;
}

}  // namespace

std::vector<PosetMap> poset_automorphisms(const FinitePoset& X,
                                          const PosetAutomorphismOptions& opts) {
  SearchGraph g = poset_search_graph(X);
  std::vector<int> colors = refine_colors(g);
  EngineOptions eopts;
  eopts.node_budget = opts.node_budget;
  auto maps = enumerate_maps(g, g, colors, colors, nullptr, eopts);
  std::vector<PosetMap> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(PosetMap{std::move(m)});
  return out;
}

long long poset_automorphism_count(const FinitePoset& X, const PosetAutomorphismOptions& opts) {
  return static_cast<long long>(poset_automorphisms(X, opts).size());
}

std::optional<PosetMap> find_poset_isomorphism(const FinitePoset& A, const FinitePoset& B,
                                               const PosetAutomorphismOptions& opts) {
  if (A.size() != B.size() || A.cover_count() != B.cover_count()) return std::nullopt;
  SearchGraph ga = poset_search_graph(A);
  SearchGraph gb = poset_search_graph(B);
  auto [ca, cb] = refine_colors_joint(ga, gb);
  EngineOptions eopts;
  eopts.node_budget = opts.node_budget;
  eopts.first_only = true;
  auto maps = enumerate_maps(ga, gb, ca, cb, nullptr, eopts);
  if (maps.empty()) return std::nullopt;
  return PosetMap{maps.front()};
}

bool poset_isomorphic(const FinitePoset& A, const FinitePoset& B) {
  return find_poset_isomorphism(A, B).has_value();
}

PointedPoset w2_poset() {
  // Transcription of the 17-point Hasse diagram, oriented by the vertical
  // coordinate (higher = greater); a is the rightmost minimal point.
  std::vector<std::string> pts;
  pts.reserve(17);
  for (int i = 1; i <= 17; ++i) pts.push_back("m" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers = {
      {"m1", "m2"},   {"m1", "m5"},   {"m2", "m3"},  {"m2", "m6"},  {"m4", "m2"},
      {"m4", "m5"},   {"m4", "m8"},   {"m7", "m5"},  {"m7", "m8"},  {"m5", "m3"},
      {"m5", "m9"},   {"m8", "m9"},   {"m8", "m6"},  {"m10", "m1"}, {"m13", "m1"},
      {"m11", "m10"}, {"m14", "m10"}, {"m11", "m13"}, {"m14", "m13"}, {"m14", "m16"},
      {"m16", "m15"}, {"m13", "m15"}, {"m16", "m12"}, {"m17", "m16"}, {"m17", "m13"},
      {"m10", "m12"}};
  return PointedPoset{FinitePoset::from_covers(pts, covers), "m17"};
}

L1Poset l1_poset() {
  // The 9-point block under (and including) the gluing point of W2: the
  // right half of the Figure, relabeled m1..m9 through the block isomorphism
  // m11,m10,m1,m14,m13,m12,m17,m16,m15 -> m1..m9.
  std::vector<std::string> pts;
  for (int i = 1; i <= 9; ++i) pts.push_back("m" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers = {
      {"m1", "m2"}, {"m1", "m5"}, {"m2", "m3"}, {"m2", "m6"}, {"m4", "m2"},
      {"m4", "m5"}, {"m4", "m8"}, {"m7", "m5"}, {"m7", "m8"}, {"m5", "m3"},
      {"m5", "m9"}, {"m8", "m9"}, {"m8", "m6"}};
  return L1Poset{FinitePoset::from_covers(pts, covers), "m3", "m7"};
}

FinitePoset relabeled(const FinitePoset& X, const std::string& prefix) {
  FinitePoset Y;
  Y.points_.reserve(X.points_.size());
  for (const auto& n : X.points_) Y.points_.push_back(prefix + n);
  Y.up_ = X.up_;
  Y.down_ = X.down_;
  Y.finalize(false);
  return Y;
}

PointedPoset wk_poset(int k) {
  if (k < 2) throw std::invalid_argument("wk_poset requires k >= 2");
  PointedPoset cur = w2_poset();
  for (int c = 3; c <= k; ++c) {
    L1Poset block = l1_poset();
    std::string prefix = "w" + std::to_string(c) + "/";
    FinitePoset fresh = relabeled(block.poset, prefix);
    FinitePoset next = wedge(cur.poset, cur.base, fresh, prefix + block.top);
    cur = PointedPoset{std::move(next), prefix + block.base};
  }
  return cur;
}

FinitePoset wedge(const FinitePoset& X, const std::string& x0, const FinitePoset& Y,
                  const std::string& y0) {
  int xi = X.index_of(x0);
  int yi = Y.index_of(y0);
  // Union of covers through the identified point is already transitively
  // reduced: any new path between two points of one side passes the wedge
  // point twice, which a poset forbids.
  std::vector<std::string> pts;
  pts.reserve(static_cast<std::size_t>(X.size() + Y.size() - 1));
  std::vector<int> x_id(static_cast<std::size_t>(X.size())), y_id(static_cast<std::size_t>(Y.size()));
  for (int p = 0; p < X.size(); ++p) {
    x_id[static_cast<std::size_t>(p)] = static_cast<int>(pts.size());
    pts.push_back(X.name(p));
  }
  for (int p = 0; p < Y.size(); ++p) {
    if (p == yi) {
      y_id[static_cast<std::size_t>(p)] = x_id[static_cast<std::size_t>(xi)];
      continue;
    }
    y_id[static_cast<std::size_t>(p)] = static_cast<int>(pts.size());
    if (X.has_point(Y.name(p)))
      throw std::invalid_argument("wedge point name collision: " + Y.name(p));
    pts.push_back(Y.name(p));
  }
  std::vector<std::pair<int, int>> covers;
  covers.reserve(static_cast<std::size_t>(X.cover_count() + Y.cover_count()));
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)])
      covers.emplace_back(x_id[static_cast<std::size_t>(p)], x_id[static_cast<std::size_t>(q)]);
  for (int p = 0; p < Y.size(); ++p)
    for (int q : Y.up()[static_cast<std::size_t>(p)])
      covers.emplace_back(y_id[static_cast<std::size_t>(p)], y_id[static_cast<std::size_t>(q)]);
  return FinitePoset::from_index_covers(std::move(pts), std::move(covers), false);
}

FinitePoset disjoint_union(const FinitePoset& X, const FinitePoset& Y) {
  bool clash = false;
  for (int p = 0; p < Y.size() && !clash; ++p) clash = X.has_point(Y.name(p));
  std::vector<std::string> pts;
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p < X.size(); ++p) pts.push_back(clash ? "L:" + X.name(p) : X.name(p));
  for (int p = 0; p < Y.size(); ++p) pts.push_back(clash ? "R:" + Y.name(p) : Y.name(p));
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)]) covers.emplace_back(p, q);
  for (int p = 0; p < Y.size(); ++p)
    for (int q : Y.up()[static_cast<std::size_t>(p)])
      covers.emplace_back(X.size() + p, X.size() + q);
  return FinitePoset::from_index_covers(std::move(pts), std::move(covers), false);
}

FinitePoset non_hausdorff_join(const FinitePoset& X, const FinitePoset& Y) {
  bool clash = false;
  for (int p = 0; p < Y.size() && !clash; ++p) clash = X.has_point(Y.name(p));
  std::vector<std::string> pts;
  std::vector<std::pair<int, int>> covers;
  for (int p = 0; p < X.size(); ++p) pts.push_back(clash ? "L:" + X.name(p) : X.name(p));
  for (int p = 0; p < Y.size(); ++p) pts.push_back(clash ? "R:" + Y.name(p) : Y.name(p));
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)]) covers.emplace_back(p, q);
  for (int p = 0; p < Y.size(); ++p)
    for (int q : Y.up()[static_cast<std::size_t>(p)])
      covers.emplace_back(X.size() + p, X.size() + q);
  // Covers across: maximal points of X below minimal points of Y.
  for (int p = 0; p < X.size(); ++p) {
    if (!X.up()[static_cast<std::size_t>(p)].empty()) continue;
    for (int q = 0; q < Y.size(); ++q)
      if (Y.down()[static_cast<std::size_t>(q)].empty()) covers.emplace_back(p, X.size() + q);
  }
  return FinitePoset::from_index_covers(std::move(pts), std::move(covers), false);
}

GlueWResult glue_w_at_beat_points(const FinitePoset& X, int level) {
  std::vector<int> beats = beat_points(X);
  GlueWResult out;
  if (beats.empty()) {
    out.poset = X;
    out.level = 0;
    return out;
  }

  int l = level;
  if (l <= 0) {
    int target = X.max_chain_cardinality();
    l = 2;
    while (wk_poset(l).poset.max_chain_cardinality() <= target) ++l;
  }
  PointedPoset W = wk_poset(l);
  int base = W.poset.index_of(W.base);

  // Single-pass bulk construction: X plus one fresh relabeled copy per beat
  // point, the copy's base identified with the beat point.
  std::vector<std::string> pts = X.points();
  std::vector<std::pair<int, int>> covers;
  covers.reserve(static_cast<std::size_t>(X.cover_count()) +
                 beats.size() * static_cast<std::size_t>(W.poset.cover_count()));
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)]) covers.emplace_back(p, q);

  for (int b : beats) {
    std::string prefix = X.name(b) + "*";
    out.copies.emplace_back(X.name(b), prefix);
    std::vector<int> copy_id(static_cast<std::size_t>(W.poset.size()));
    for (int p = 0; p < W.poset.size(); ++p) {
      if (p == base) {
        copy_id[static_cast<std::size_t>(p)] = b;
        continue;
      }
      copy_id[static_cast<std::size_t>(p)] = static_cast<int>(pts.size());
      pts.push_back(prefix + W.poset.name(p));
    }
    for (int p = 0; p < W.poset.size(); ++p)
      for (int q : W.poset.up()[static_cast<std::size_t>(p)])
        covers.emplace_back(copy_id[static_cast<std::size_t>(p)], copy_id[static_cast<std::size_t>(q)]);
  }
  out.level = l;
  out.poset = FinitePoset::from_index_covers(std::move(pts), std::move(covers), false);
  return out;
}

FinitePoset join_with_w2_plus_point(const FinitePoset& Y, int times) {
  if (times < 1) throw std::invalid_argument("join_with_w2_plus_point requires times >= 1");
  FinitePoset cur = Y;
  for (int t = 0; t < times; ++t) {
    FinitePoset w2p = disjoint_union(w2_poset().poset, FinitePoset::from_covers({"p"}, {}));
    FinitePoset joined = non_hausdorff_join(cur, relabeled(w2p, "j" + std::to_string(t) + "/"));
    cur = std::move(joined);
  }
  return cur;
}

}  // namespace fintop
