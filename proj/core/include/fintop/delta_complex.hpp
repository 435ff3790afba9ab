#ifndef FINTOP_DELTA_COMPLEX_HPP
#define FINTOP_DELTA_COMPLEX_HPP

#include <array>
#include <string>
#include <vector>

#include "fintop/simplicial_complex.hpp"
#include "fintop/util.hpp"

namespace fintop {

/**
 * Delta-complex of dimension <= 2: cells with ordered vertex tuples glued
 * along faces by order-preserving identifications (loops and multi-edges
 * allowed).  Each cell carries a globally unique name so subdivisions and
 * cell maps stay canonical.
 *
 * A 1-cell stores its ordered endpoints (v0, v1); a 2-cell with ordered
 * vertices (v0, v1, v2) stores its edge faces (e0, e1, e2) where e_i omits
 * v_i, so e0 = (v1,v2), e1 = (v0,v2), e2 = (v0,v1).
 */
class DeltaComplex {
 public:
  struct Edge {
    int v0, v1;
    std::string name;
  };
  struct Triangle {
    std::array<int, 3> edges;  // (e0, e1, e2)
    std::string name;
  };

  DeltaComplex() = default;
  DeltaComplex(std::vector<std::string> vertex_names, std::vector<Edge> edges,
               std::vector<Triangle> triangles);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }

  // Ordered corner vertices (v0, v1, v2) of a triangle, derived from faces.
  std::array<int, 3> triangle_corners(int t) const;

  long long euler_characteristic() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;

  void validate() const;
};

/// Cellular self-map given by per-dimension cell permutations that commute
/// with the face structure.
struct DeltaMap {
  Perm vertices, edges, triangles;
};

bool is_delta_automorphism(const DeltaComplex& Y, const DeltaMap& f);
DeltaMap compose(const DeltaMap& f, const DeltaMap& g);

// Barycentric subdivision; new cell names are derived from parent names so
// that lifted maps act canonically.  `lift` rewrites a cell map of Y to one
// of the subdivision.
DeltaComplex delta_subdivide(const DeltaComplex& Y);
DeltaMap lift_through_subdivision(const DeltaComplex& Y, const DeltaComplex& sdY,
                                  const DeltaMap& f);

// Reads the cells of a (twice subdivided) Delta-complex as vertex sets.
// Throws if any cell is degenerate or two cells share a vertex set.
SimplicialComplex delta_to_simplicial(const DeltaComplex& Y);

}  // namespace fintop

#endif
