#ifndef FINTOP_GADGETS_HPP
#define FINTOP_GADGETS_HPP

#include "fintop/simplicial_complex.hpp"

namespace fintop {

// Path with k edges on vertices u0..uk.
SimplicialComplex path_complex(int k);

// Full triangle {v0,v1,v2} with a path of length k at v0 (u1..uk) and a path
// of length k+1 at v1 (t1..t_{k+1}).  Rigid and collapsible.
SimplicialComplex w_complex(int k);

/**
 * U piece: a full d-simplex on {x_{i-1}, x_i, y_i, w_i, v_{1,i}..v_{d-3,i}}
 * with a path of length i at w_i (vertices u[s,i]) and a path of length i+j
 * at each v_{j,i}; all attached path lengths within a piece are distinct.
 */
SimplicialComplex u_complex(int i, int d);

struct BandComplex {
  SimplicialComplex complex;
  std::vector<std::string> spine;  // x0..xm
  std::string y_first, y_last;
};

/**
 * Band B(m, d): u_complex(i, d) for i = 1..m chained along the spine, with
 * connector triangles {x_i, w_i, w_{i+1}} (and their edges) for i < m.
 * Automorphisms are generated by the swaps (x0 y1) and (xm ym).
 */
BandComplex band_complex(int m, int d);

}  // namespace fintop

#endif
