#ifndef FINTOP_AUTOMORPHISM_ENGINE_HPP
#define FINTOP_AUTOMORPHISM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fintop {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Colored-digraph backtracking search used by both simplicial-complex and
 * poset automorphism enumeration.  Vertices carry initial colors (invariants
 * any automorphism must preserve); colors are refined by iterating over
 * up/down neighborhoods until stable.  For undirected graphs pass the same
 * adjacency as `up` and `down`.
 */
struct SearchGraph {
  int n = 0;
  std::vector<std::vector<int>> up;    // sorted
  std::vector<std::vector<int>> down;  // sorted
  std::vector<std::uint64_t> color;    // initial invariants
};

// Stable color refinement (worklist based); returns compacted color ids.
std::vector<int> refine_colors(const SearchGraph& g);

// Refines the disjoint union of two graphs so their color ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors_joint(const SearchGraph& a,
                                                                  const SearchGraph& b);

struct EngineOptions {
  std::uint64_t node_budget = 200000000ULL;
  bool first_only = false;  // stop after the first completed map
};

// Enumerates color-preserving bijections dom -> cod compatible with the
// adjacency structure; each completed candidate must also pass `accept`.
// For automorphisms pass the same graph twice.  Result sorted by image vector.
std::vector<std::vector<int>> enumerate_maps(
    const SearchGraph& dom, const SearchGraph& cod,
    const std::vector<int>& dom_colors, const std::vector<int>& cod_colors,
    const std::function<bool(const std::vector<int>&)>& accept,
    const EngineOptions& opts);

}  // namespace fintop

#endif
