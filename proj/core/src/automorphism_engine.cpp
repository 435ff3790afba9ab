#include "fintop/automorphism_engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "fintop/util.hpp"

namespace fintop {

namespace {

// One refinement round: new color = H(old color, neighbor color sums).
// Sum-combining keeps the update order-free; hash collisions can only merge
// pruning classes, never exclude a true automorphism.
void refine_round(const SearchGraph& g, const std::vector<std::uint64_t>& cur,
                  std::vector<std::uint64_t>& next) {
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t up_sum = 0, down_sum = 0;
    for (int u : g.up[v]) up_sum += hash_mix(cur[u]);
    for (int u : g.down[v]) down_sum += hash_mix(cur[u] ^ 0x5bf03635ULL);
    std::uint64_t h = hash_combine(cur[v], 0x9e3779b9ULL);
    h = hash_combine(h, up_sum);
    h = hash_combine(h, down_sum);
    next[v] = h;
  }
}

std::size_t count_classes(const std::vector<std::uint64_t>& colors) {
  std::unordered_map<std::uint64_t, int> seen;
  seen.reserve(colors.size() * 2);
  for (auto c : colors) seen.emplace(c, 0);
  return seen.size();
}

std::vector<std::uint64_t> refine_raw(const SearchGraph& g, std::vector<std::uint64_t> colors) {
  std::vector<std::uint64_t> next(g.n);
  std::size_t classes = count_classes(colors);
  int stall = 0;
  const int max_rounds = std::min(g.n + 2, 1200);
  for (int round = 0; round < max_rounds && stall < 3; ++round) {
    refine_round(g, colors, next);
    colors.swap(next);
    std::size_t c = count_classes(colors);
    if (c == classes)
      ++stall;
    else
      stall = 0;
    classes = c;
    if (classes == static_cast<std::size_t>(g.n)) break;
  }
  return colors;
}

std::vector<int> compact(const std::vector<std::uint64_t>& colors) {
  // Deterministic ids: rank of the color value among sorted distinct values.
  std::vector<std::uint64_t> vals(colors);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::unordered_map<std::uint64_t, int> rank;
  rank.reserve(vals.size() * 2);
  for (std::size_t i = 0; i < vals.size(); ++i) rank[vals[i]] = static_cast<int>(i);
  std::vector<int> ids(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) ids[v] = rank[colors[v]];
  return ids;
}

}  // namespace

std::vector<int> refine_colors(const SearchGraph& g) {
  return compact(refine_raw(g, g.color));
}

std::pair<std::vector<int>, std::vector<int>> refine_colors_joint(const SearchGraph& a,
                                                                  const SearchGraph& b) {
  SearchGraph u;
  u.n = a.n + b.n;
  u.up.resize(u.n);
  u.down.resize(u.n);
  u.color.resize(u.n);
  for (int v = 0; v < a.n; ++v) {
    u.up[v] = a.up[v];
    u.down[v] = a.down[v];
    u.color[v] = a.color[v];
  }
  for (int v = 0; v < b.n; ++v) {
    u.up[a.n + v].reserve(b.up[v].size());
    for (int w : b.up[v]) u.up[a.n + v].push_back(a.n + w);
    u.down[a.n + v].reserve(b.down[v].size());
    for (int w : b.down[v]) u.down[a.n + v].push_back(a.n + w);
    u.color[a.n + v] = b.color[v];
  }
  std::vector<int> ids = compact(refine_raw(u, u.color));
  std::vector<int> ca(ids.begin(), ids.begin() + a.n);
  std::vector<int> cb(ids.begin() + a.n, ids.end());
  return {ca, cb};
}

namespace {

bool adjacency_ok(const SearchGraph& dom, const SearchGraph& cod, const std::vector<int>& image,
                  const std::vector<char>& used, int v, int w) {
  // Assigned neighbors of v must map into the matching neighborhood of w,
  // and w must not have extra already-used neighbors.
  int v_assigned = 0;
  for (int u : dom.up[v]) {
    if (image[u] >= 0) {
      ++v_assigned;
      if (!std::binary_search(cod.up[w].begin(), cod.up[w].end(), image[u])) return false;
    }
  }
  int w_used = 0;
  for (int u : cod.up[w])
    if (used[u]) ++w_used;
  if (w_used != v_assigned) return false;

  v_assigned = 0;
  for (int u : dom.down[v]) {
    if (image[u] >= 0) {
      ++v_assigned;
      if (!std::binary_search(cod.down[w].begin(), cod.down[w].end(), image[u])) return false;
    }
  }
  w_used = 0;
  for (int u : cod.down[w])
    if (used[u]) ++w_used;
  return w_used == v_assigned;
}

bool full_structure_check(const SearchGraph& dom, const SearchGraph& cod,
                          const std::vector<int>& image) {
  // Bijective and color-consistent by construction; verify every edge maps to
  // an edge.  Equal edge counts then force the inverse to preserve edges too.
  std::size_t dom_edges = 0, cod_edges = 0;
  for (int v = 0; v < dom.n; ++v) dom_edges += dom.up[v].size();
  for (int v = 0; v < cod.n; ++v) cod_edges += cod.up[v].size();
  if (dom_edges != cod_edges) return false;
  for (int v = 0; v < dom.n; ++v)
    for (int u : dom.up[v])
      if (!std::binary_search(cod.up[image[v]].begin(), cod.up[image[v]].end(), image[u]))
        return false;
  return true;
}

}  // namespace

namespace {

/**
 * Backtracking with unit propagation.  After every assignment the neighbors
 * of newly assigned vertices are re-examined; vertices with a single
 * consistent candidate are assigned immediately and a vertex with none fails
 * the branch.  Branching only happens when nothing is forced, so locally
 * symmetric regions cannot accumulate contradictory choices.
 */
struct Searcher {
  const SearchGraph& dom;
  const SearchGraph& cod;
  const std::vector<int>& dom_colors;
  const std::vector<std::vector<int>>& cod_buckets;
  const std::function<bool(const std::vector<int>&)>& accept;
  const EngineOptions& opts;

  std::vector<int> image;
  std::vector<char> used;
  std::vector<int> trail;  // assignment order, for undo
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> results;
  bool done = false;

  Searcher(const SearchGraph& dom_, const SearchGraph& cod_, const std::vector<int>& dc,
           const std::vector<std::vector<int>>& cb,
           const std::function<bool(const std::vector<int>&)>& acc, const EngineOptions& o)
      : dom(dom_), cod(cod_), dom_colors(dc), cod_buckets(cb), accept(acc), opts(o),
        image(static_cast<std::size_t>(dom_.n), -1), used(static_cast<std::size_t>(cod_.n), 0) {}

  std::vector<int> candidates_of(int v) {
    std::vector<int> out;
    for (int w : cod_buckets[static_cast<std::size_t>(dom_colors[static_cast<std::size_t>(v)])]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (++nodes > opts.node_budget)
        throw BudgetExceeded("automorphism search exceeded node budget");
      if (adjacency_ok(dom, cod, image, used, v, w)) out.push_back(w);
    }
    return out;
  }

  void assign(int v, int w, std::vector<int>& dirty) {
    image[static_cast<std::size_t>(v)] = w;
    used[static_cast<std::size_t>(w)] = 1;
    trail.push_back(v);
    for (int u : dom.up[static_cast<std::size_t>(v)])
      if (image[static_cast<std::size_t>(u)] < 0) dirty.push_back(u);
    for (int u : dom.down[static_cast<std::size_t>(v)])
      if (image[static_cast<std::size_t>(u)] < 0) dirty.push_back(u);
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      used[static_cast<std::size_t>(image[static_cast<std::size_t>(v)])] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
  }

  // Returns false on conflict.  Forced assignments are applied and recorded
  // on the trail.
  bool propagate(std::vector<int> dirty) {
    while (!dirty.empty()) {
      int v = dirty.back();
      dirty.pop_back();
      if (image[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<int> cands = candidates_of(v);
      if (cands.empty()) return false;
      if (cands.size() == 1) assign(v, cands[0], dirty);
    }
    return true;
  }

  // Deterministic branch vertex: the unassigned vertex with the fewest
  // consistent candidates (ties by index).
  int pick_branch_vertex(std::vector<int>& cands_out) {
    int best = -1;
    std::vector<int> best_cands;
    for (int v = 0; v < dom.n; ++v) {
      if (image[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<int> cands = candidates_of(v);
      if (cands.empty()) {
        cands_out.clear();
        return v;  // conflict
      }
      if (best < 0 || cands.size() < best_cands.size()) {
        best = v;
        best_cands = std::move(cands);
        if (best_cands.size() == 1) break;  // effectively forced
      }
    }
    cands_out = std::move(best_cands);
    return best;
  }

  void search() {
    if (done) return;
    std::size_t mark = trail.size();
    if (!propagate({})) {
      undo_to(mark);
      return;
    }
    // Propagation may have been triggered externally; find a branch point.
    if (static_cast<int>(trail.size()) == dom.n) {
      if (full_structure_check(dom, cod, image) && (!accept || accept(image))) {
        results.push_back(image);
        if (opts.first_only) done = true;
      }
      undo_to(mark);
      return;
    }
    std::vector<int> cands;
    int v = pick_branch_vertex(cands);
    if (v >= 0 && !cands.empty()) {
      for (int w : cands) {
        std::size_t inner = trail.size();
        std::vector<int> dirty;
        assign(v, w, dirty);
        if (propagate(std::move(dirty))) {
          if (static_cast<int>(trail.size()) == dom.n) {
            if (full_structure_check(dom, cod, image) && (!accept || accept(image))) {
              results.push_back(image);
              if (opts.first_only) done = true;
            }
          } else {
            search();
          }
        }
        undo_to(inner);
        if (done) break;
      }
    }
    undo_to(mark);
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_maps(
    const SearchGraph& dom, const SearchGraph& cod,
    const std::vector<int>& dom_colors, const std::vector<int>& cod_colors,
    const std::function<bool(const std::vector<int>&)>& accept,
    const EngineOptions& opts) {
  std::vector<std::vector<int>> results;
  if (dom.n != cod.n) return results;
  if (dom.n == 0) {
    results.push_back({});
    return results;
  }

  int num_colors = 0;
  for (int c : dom_colors) num_colors = std::max(num_colors, c + 1);
  for (int c : cod_colors) num_colors = std::max(num_colors, c + 1);

  std::vector<std::vector<int>> cod_buckets(static_cast<std::size_t>(num_colors));
  for (int v = 0; v < cod.n; ++v) cod_buckets[static_cast<std::size_t>(cod_colors[static_cast<std::size_t>(v)])].push_back(v);
  {
    std::vector<std::size_t> dom_hist(static_cast<std::size_t>(num_colors), 0);
    for (int c : dom_colors) ++dom_hist[static_cast<std::size_t>(c)];
    for (int c = 0; c < num_colors; ++c)
      if (dom_hist[static_cast<std::size_t>(c)] != cod_buckets[static_cast<std::size_t>(c)].size())
        return results;
  }

  Searcher s(dom, cod, dom_colors, cod_buckets, accept, opts);
  s.search();
  results = std::move(s.results);
  std::sort(results.begin(), results.end());
  return results;
}

}  // namespace fintop
