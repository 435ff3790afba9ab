#ifndef FINTOP_COLLAPSE_HPP
#define FINTOP_COLLAPSE_HPP

#include "fintop/simplicial_complex.hpp"

namespace fintop {

/**
 * Greedy free-face collapse.  A simplex is free when it has exactly one
 * proper coface (necessarily of codimension 1 and maximal); collapsing
 * removes the pair.  Pairs are processed smallest free face first in the
 * canonical simplex order, so runs are reproducible.
 */
struct CollapseResult {
  bool collapsed_to_point = false;
  long long steps = 0;
  std::vector<int> surviving;  // indices of surviving simplices
};

CollapseResult collapse_run(const SimplicialComplex& K);

// True if greedy collapses reduce K to a single vertex.  False means "no
// certificate", not "not contractible".
bool collapse(const SimplicialComplex& K);

}  // namespace fintop

#endif
