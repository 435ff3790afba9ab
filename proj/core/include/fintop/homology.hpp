#ifndef FINTOP_HOMOLOGY_HPP
#define FINTOP_HOMOLOGY_HPP

#include <vector>

#include "fintop/finite_poset.hpp"
#include "fintop/integer_matrix.hpp"
#include "fintop/simplicial_complex.hpp"
#include "fintop/sparse_reduction.hpp"

namespace fintop {

/**
 * Integer chain complex of a simplicial complex.  Bases are the simplices of
 * each dimension in the complex's canonical order; boundary signs alternate
 * over the sorted vertex tuple.
 */
struct ChainComplex {
  std::vector<int> dim_counts;          // number of d-simplices
  std::vector<IntMatrix> boundaries;    // boundaries[d] = del_d (C_d -> C_{d-1}), d >= 1
};

ChainComplex chain_complex(const SimplicialComplex& K, int max_dim = -1);

// Boundary of the (d+1)-dimensional chain group as sparse relation rows over
// the d-simplices (one row per (d+1)-simplex).
std::vector<SparseRow> boundary_rows(const SimplicialComplex& K, int d_plus_1);

// H_d with integer coefficients: rank n_d - rank(del_d) - rank(del_{d+1}),
// torsion = invariant factors of del_{d+1}.
AbelianGroup homology(const SimplicialComplex& K, int d);
AbelianGroup reduced_homology(const SimplicialComplex& K, int d);

// All homology groups up to max_dim (inclusive).
std::vector<AbelianGroup> homology_all(const SimplicialComplex& K, int max_dim);

// H_0/H_1 of the order complex of a poset, computed from the 2-skeleton
// (points, comparable pairs, 3-chains) without materialising longer chains.
AbelianGroup order_complex_h1(const FinitePoset& X);
long long order_complex_component_count(const FinitePoset& X);

struct OrderSkeletonSizes {
  long long vertices = 0, edges = 0, triangles = 0;
};
OrderSkeletonSizes order_complex_two_skeleton_sizes(const FinitePoset& X);

}  // namespace fintop

#endif
