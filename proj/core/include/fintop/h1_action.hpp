#ifndef FINTOP_H1_ACTION_HPP
#define FINTOP_H1_ACTION_HPP

#include <vector>

#include "fintop/integer_matrix.hpp"
#include "fintop/presentation.hpp"
#include "fintop/simplicial_complex.hpp"

namespace fintop {

/**
 * H_1 of a simplicial complex together with an explicit basis: cycle
 * representatives and a projection from 1-cycles to coordinates.
 * Coordinates are ordered torsion first (in invariant-factor order), then
 * free.  Intended for desk-scale complexes; all transforms are tracked
 * through dense Smith normal forms.
 */
class H1Basis {
 public:
  explicit H1Basis(const SimplicialComplex& K);

  const AbelianGroup& group() const { return group_; }

  // Matrix of the chain map induced by an automorphism, columns = images of
  // the basis elements in basis coordinates (torsion entries reduced mod
  // their invariant factor).
  IntMatrix action_matrix(const SimplicialMap& f) const;

 private:
  const SimplicialComplex& K_;
  AbelianGroup group_;
  int edge_lo_ = 0;                 // index of first 1-simplex
  int n_edges_ = 0;
  IntMatrix kernel_basis_;          // E x z
  IntMatrix v1inv_;                 // E x E, coordinates of cycles
  int rank1_ = 0;                   // rank of del_1
  IntMatrix u2_, u2inv_;            // z x z basis change for coker(del_2)
  std::vector<Int> diag2_;          // invariant factors of del_2 in Z_1 coords
  std::vector<int> coord_pos_;      // positions in diag2 order: torsion then free

  std::vector<Int> cycle_coords(const std::vector<Int>& cycle) const;
};

IntMatrix induced_h1_action(const SimplicialComplex& K, const SimplicialMap& f);

// Matrices of a group action on the abelianization of a presentation, in the
// Smith-basis coordinates of the abelianization (torsion coords first).
struct AbelianizedAction {
  AbelianGroup group;
  std::vector<IntMatrix> matrices;  // one per group element
};

AbelianizedAction abelianized_action(const GroupAction& action);

enum class ActionEquivalence { Equivalent, NotEquivalent, Inconclusive };

struct ActionEquivalenceOptions {
  long long free_entry_bound = 3;  // unimodular search bound for free rank >= 2
};

// True iff some automorphism U of the coefficient group satisfies
// U A_g = B_g U for all g.  Exhaustive for finite groups and free rank <= 1;
// bounded unimodular search (reporting Inconclusive on failure) beyond.
ActionEquivalence actions_equivalent(const std::vector<IntMatrix>& A,
                                     const std::vector<IntMatrix>& B,
                                     const AbelianGroup& coefficients,
                                     const ActionEquivalenceOptions& opts = {});

}  // namespace fintop

#endif
