#ifndef FINTOP_SIMPLICIAL_COMPLEX_HPP
#define FINTOP_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fintop/util.hpp"

namespace fintop {

/**
 * Finite abstract simplicial complex.
 *
 * Vertices are opaque string labels, stored sorted; simplices are stored as
 * sorted vectors of vertex indices, ordered by (dimension, lex).  The simplex
 * list is always downward closed and contains every vertex as a 0-simplex.
 * All operations iterate in this canonical order, so results are reproducible.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Builds the downward closure of `facets` over the declared vertex set.
  // Isolated vertices (in no facet) are preserved.
  static SimplicialComplex from_facets(const std::vector<std::string>& vertices,
                                       const std::vector<std::vector<std::string>>& facets);

  // As above but with an already-deduplicated list of simplices given as
  // label sets; the list is closed downward.
  static SimplicialComplex from_simplices(const std::vector<std::string>& vertices,
                                          const std::vector<std::vector<std::string>>& simplices);

  // Internal fast path: labels must be sorted and unique, simplices are index
  // vectors (each sorted); the closure is computed.
  static SimplicialComplex from_index_facets(std::vector<std::string> labels,
                                             const std::vector<std::vector<int>>& facets);

  // Fast path for families that are already downward closed (chains, cell
  // readouts); every vertex is still added as a 0-simplex.
  static SimplicialComplex from_closed_simplices(std::vector<std::string> labels,
                                                 std::vector<std::vector<int>> simplices);

  const std::vector<std::string>& labels() const { return labels_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  int index_of(const std::string& label) const;

  // All simplices, sorted by (dimension, lex on index tuples).
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }
  int simplex_count() const { return static_cast<int>(simplices_.size()); }
  bool has_simplex(const std::vector<int>& sorted_vertices) const;
  int simplex_index(const std::vector<int>& sorted_vertices) const;  // -1 if absent

  int dimension() const { return dim_; }
  // Simplex indices of dimension d form the contiguous range
  // [dim_begin(d), dim_end(d)) in simplices().
  int dim_begin(int d) const;
  int dim_end(int d) const;
  int count_in_dim(int d) const { return dim_begin(d) <= dim_end(d) ? dim_end(d) - dim_begin(d) : 0; }

  // Maximal simplices, in canonical order.
  std::vector<std::vector<int>> facets() const;
  std::vector<std::vector<std::string>> facet_labels() const;

  // 1-skeleton adjacency, sorted neighbor lists.
  const std::vector<std::vector<int>>& skeleton() const;

  // Number of n-simplices containing vertex v, for n = 0..dimension().
  std::vector<std::vector<int>> membership_vectors() const;

  long long euler_characteristic() const;
  bool is_connected() const;

  std::vector<int> to_indices(const std::vector<std::string>& labels) const;
  std::vector<std::string> to_labels(const std::vector<int>& idx) const;

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && simplices_ == o.simplices_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> simplices_;
  std::unordered_map<std::string, int> label_index_;
  std::unordered_map<std::vector<int>, int, VecIntHash> simplex_index_;
  std::vector<int> dim_offsets_;  // dim_offsets_[d] = first index of dim d
  int dim_ = -1;
  mutable std::vector<std::vector<int>> skeleton_;  // built lazily

  void finalize(std::vector<std::vector<int>> simplices);
};

/// Vertex map between complexes; image of every simplex must be a simplex.
struct SimplicialMap {
  std::vector<int> image;  // image[v] = vertex index in the codomain

  bool operator==(const SimplicialMap& o) const { return image == o.image; }
  bool operator<(const SimplicialMap& o) const { return image < o.image; }
};

bool is_simplicial_map(const SimplicialComplex& dom, const SimplicialComplex& cod,
                       const SimplicialMap& f);
bool is_automorphism(const SimplicialComplex& K, const SimplicialMap& f);
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);  // f after g
SimplicialMap map_from_labels(const SimplicialComplex& dom, const SimplicialComplex& cod,
                              const std::vector<std::pair<std::string, std::string>>& pairs);

/// Path in the 1-skeleton; consecutive entries span an edge.
struct VertexPath {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool is_vertex_path(const SimplicialComplex& K, const VertexPath& p);

// Barycentric subdivision.  Vertices of the result are the simplices of K,
// labeled "{a,b,c}" (sorted original labels); simplices are the chains of
// simplices of K under strict inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

// Canonical label of a simplex under the subdivision naming scheme.
std::string simplex_label(const SimplicialComplex& K, const std::vector<int>& simplex);

// Deterministic walk visiting every vertex: depth-first spanning tree of the
// 1-skeleton rooted at the lexicographically smallest vertex, children in
// lexicographic order, Euler tour truncated after the last first visit.
VertexPath covering_walk(const SimplicialComplex& K);

struct GluePart {
  const SimplicialComplex* complex;
};

// Quotient of a disjoint union of complexes by the equivalence generated by
// `identifications` ((part, label) pairs).  Vertex labels of merged classes
// are taken from the smallest (part, label) pair; unmerged duplicate labels
// across parts are disambiguated with a "p<i>:" prefix.  Throws if two
// distinct vertices of one simplex become identified.
SimplicialComplex glue(const std::vector<const SimplicialComplex*>& parts,
                       const std::vector<std::pair<std::pair<int, std::string>,
                                                   std::pair<int, std::string>>>& identifications);

struct AutomorphismOptions {
  std::uint64_t node_budget = 200000000ULL;  // candidate tests before aborting
};

// Complete automorphism group, sorted by image vector.  Backtracking prunes
// with per-vertex membership-count vectors refined along the 1-skeleton.
std::vector<SimplicialMap> automorphism_group(const SimplicialComplex& K,
                                              const AutomorphismOptions& opts = {});

// Label-preserving-structure isomorphism test (not label equality).
std::optional<SimplicialMap> find_isomorphism(const SimplicialComplex& A,
                                              const SimplicialComplex& B,
                                              const AutomorphismOptions& opts = {});
bool isomorphic(const SimplicialComplex& A, const SimplicialComplex& B);

}  // namespace fintop

#endif
