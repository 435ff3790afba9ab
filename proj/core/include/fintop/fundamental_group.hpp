#ifndef FINTOP_FUNDAMENTAL_GROUP_HPP
#define FINTOP_FUNDAMENTAL_GROUP_HPP

#include "fintop/presentation.hpp"
#include "fintop/simplicial_complex.hpp"

namespace fintop {

// Edge-path presentation of the fundamental group: one generator per
// non-tree edge of a deterministic DFS spanning tree rooted at `base`, one
// relator per 2-simplex (tree edges read as identity), freely reduced.
Presentation edge_path_pi1(const SimplicialComplex& K, int base);
Presentation edge_path_pi1(const SimplicialComplex& K, const std::string& base);

// Number of tuples in T^{#generators} satisfying all relators.
long long hom_count(const Presentation& p, const FiniteGroup& T);

// Standard fingerprint panel: Z/2, Z/3, Z/4, S3, Z/2 x Z/2.
std::vector<std::pair<std::string, FiniteGroup>> default_hom_panel();

}  // namespace fintop

#endif
