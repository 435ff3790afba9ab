#ifndef FINTOP_RIGIDIFY_HPP
#define FINTOP_RIGIDIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "fintop/gadgets.hpp"
#include "fintop/simplicial_complex.hpp"

namespace fintop {

// Orbit of a tuple under the diagonal action of a list of permutations.
std::vector<std::vector<int>> orbit_of_tuple(const std::vector<Perm>& group,
                                             const std::vector<int>& tuple, int domain_size);

struct RigidificationResult {
  SimplicialComplex complex;
  std::vector<std::string> base;                      // vertex labels of the embedded K
  std::vector<std::vector<std::string>> bands;        // per group element: band vertex labels
  std::vector<SimplicialMap> action;                  // extension of each g, same order as input
  std::vector<int> walk;                              // the walk P (K vertex indices)
  int band_dimension = 0;
};

struct RigidifyOptions {
  int band_dimension = 0;  // <= 0 selects max(3, dim K + 2)
};

/**
 * G-rigidification: for each g a fresh band B(m, D) glued by identifying its
 * spine with the walk g.P.  The automorphism list must be composition-closed
 * with at least two distinct elements; the walk must cover every vertex and
 * never repeat consecutively.
 */
RigidificationResult rigidify(const SimplicialComplex& K,
                              const std::vector<SimplicialMap>& G_action, const VertexPath& P,
                              const RigidifyOptions& opts = {});

// Trivial-group rigidification: W_{n+i} glued at each vertex x_i (sorted
// order) by identifying the gadget's v2 with x_i.
SimplicialComplex rigidify_trivial(const SimplicialComplex& K);

}  // namespace fintop

#endif
