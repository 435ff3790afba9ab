#ifndef FINTOP_SPARSE_REDUCTION_HPP
#define FINTOP_SPARSE_REDUCTION_HPP

#include <cstdint>
#include <vector>

#include "fintop/integer_matrix.hpp"

namespace fintop {

/**
 * Rank and invariant factors of a sparse integer matrix, given as relation
 * rows over `ncols` generators.
 *
 * Elimination strategy: zero-fill coreductions first (rows of length one with
 * a unit coefficient, generators appearing in a single row with a unit
 * coefficient), then unit pivots chosen to minimise fill, and finally a dense
 * Smith normal form on the small residue.  Coefficients are 64-bit with
 * overflow checks; rows that would overflow are deferred to the dense stage.
 */
struct SparseRow {
  std::vector<std::pair<int, long long>> terms;  // (column, coefficient), sorted by column
};

struct SparseSummary {
  long long rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

SparseSummary sparse_rank_torsion(long long ncols, std::vector<SparseRow> rows);

}  // namespace fintop

#endif
