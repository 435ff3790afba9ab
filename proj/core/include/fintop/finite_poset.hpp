#ifndef FINTOP_FINITE_POSET_HPP
#define FINTOP_FINITE_POSET_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fintop/simplicial_complex.hpp"

namespace fintop {

/**
 * Finite T0 space as a poset with cover relations (Hasse diagram).
 * Point names are opaque strings; covers are stored as up/down adjacency by
 * point index.  The cover relation must be acyclic and transitively reduced.
 */
class FinitePoset {
 public:
  FinitePoset() = default;

  // `covers` are (lower, upper) name pairs.  Acyclicity is always checked;
  // transitive reduction is verified for posets up to `validate_reduction_limit`
  // points (larger posets are trusted, construction-side).
  static FinitePoset from_covers(const std::vector<std::string>& points,
                                 const std::vector<std::pair<std::string, std::string>>& covers,
                                 int validate_reduction_limit = 50000);

  static FinitePoset from_index_covers(std::vector<std::string> points,
                                       std::vector<std::pair<int, int>> covers,
                                       bool validate = true);

  const std::vector<std::string>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::string& name(int p) const { return points_[static_cast<std::size_t>(p)]; }
  int index_of(const std::string& name) const;
  bool has_point(const std::string& name) const { return index_.count(name) > 0; }

  const std::vector<std::vector<int>>& up() const { return up_; }      // covers of p
  const std::vector<std::vector<int>>& down() const { return down_; }  // covered by p
  long long cover_count() const;

  bool less(int a, int b) const;  // a < b in the order (reachability)

  // Longest-chain statistics.
  std::vector<int> heights() const;  // longest chain strictly below, in covers
  std::vector<int> depths() const;   // longest chain strictly above
  int max_chain_cardinality() const;

  // Strict up-sets as sorted index lists (for chain enumeration).
  std::vector<std::vector<int>> strict_upsets() const;

  bool operator==(const FinitePoset& o) const {
    return points_ == o.points_ && up_ == o.up_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<int>> up_, down_;
  std::unordered_map<std::string, int> index_;

  void finalize(bool validate_reduction);
  friend FinitePoset relabeled(const FinitePoset& X, const std::string& prefix);
};

/// Monotone map between posets.
struct PosetMap {
  std::vector<int> image;
  bool operator==(const PosetMap& o) const { return image == o.image; }
};

bool is_monotone(const FinitePoset& dom, const FinitePoset& cod, const PosetMap& f);
bool is_poset_automorphism(const FinitePoset& X, const PosetMap& f);

// Face poset: one point per simplex (named by simplex_label), covers are
// codimension-1 inclusions.
FinitePoset face_poset(const SimplicialComplex& K);

// Order complex: vertices are the points, simplices the non-empty chains.
SimplicialComplex order_complex(const FinitePoset& X);

// Points covering, or covered by, exactly one point.
std::vector<int> beat_points(const FinitePoset& X);
bool is_minimal(const FinitePoset& X);

struct PosetAutomorphismOptions {
  std::uint64_t node_budget = 400000000ULL;
};

// All order automorphisms; pruned by (down-degree, up-degree, height, depth)
// signatures refined over the Hasse diagram.
std::vector<PosetMap> poset_automorphisms(const FinitePoset& X,
                                          const PosetAutomorphismOptions& opts = {});
long long poset_automorphism_count(const FinitePoset& X,
                                   const PosetAutomorphismOptions& opts = {});
std::optional<PosetMap> find_poset_isomorphism(const FinitePoset& A, const FinitePoset& B,
                                               const PosetAutomorphismOptions& opts = {});
bool poset_isomorphic(const FinitePoset& A, const FinitePoset& B);

// The 17-point minimal rigid weakly-contractible space W2 with distinguished
// minimal point a.  Ships as transcribed Hasse data.
struct PointedPoset {
  FinitePoset poset;
  std::string base;
};

PointedPoset w2_poset();

// The 9-point building block L1 of W2, with its top gluing point and its
// distinguished minimal point.
struct L1Poset {
  FinitePoset poset;
  std::string top;   // maximal gluing point
  std::string base;  // minimal point a
};

L1Poset l1_poset();

// W_k tower: W_2 for k = 2, else W_{k-1} with a fresh copy of L1 hung below
// the base point (top of the new copy identified with a(W_{k-1})).
PointedPoset wk_poset(int k);

// One-point union; the identified point keeps x0's name.
FinitePoset wedge(const FinitePoset& X, const std::string& x0, const FinitePoset& Y,
                  const std::string& y0);

// Disjoint union of X and Y keeping both orders and adding x <= y for all
// x in X, y in Y.  Point names get "L:"/"R:" prefixes when they clash.
FinitePoset non_hausdorff_join(const FinitePoset& X, const FinitePoset& Y);

FinitePoset disjoint_union(const FinitePoset& X, const FinitePoset& Y);

struct GlueWResult {
  FinitePoset poset;
  int level = 0;  // the l used
  std::vector<std::pair<std::string, std::string>> copies;  // (beat point, copy prefix)
};

// Glues a fresh W_l copy (by its base point) at every beat point of X.
// level <= 0 selects the smallest l with a longer maximum chain than X.
GlueWResult glue_w_at_beat_points(const FinitePoset& X, int level = 0);

// (k-1)-fold non-Hausdorff join of Y with (W2 disjoint-union one point).
FinitePoset join_with_w2_plus_point(const FinitePoset& Y, int times);

}  // namespace fintop

#endif
