#ifndef FINTOP_PRESENTATION_COMPLEX_HPP
#define FINTOP_PRESENTATION_COMPLEX_HPP

#include "fintop/delta_complex.hpp"
#include "fintop/presentation.hpp"
#include "fintop/simplicial_complex.hpp"

namespace fintop {

/**
 * Presentation complex as a Delta-complex: one wedge 0-cell, one barycenter
 * 0-cell per relator, one loop 1-cell per generator, one spoke 1-cell per
 * relator letter, and one triangle per relator letter.  Length-1 relators
 * become a single triangle with two identified spoke sides.
 */
struct PresentationComplexResult {
  DeltaComplex complex;
  int basepoint = 0;  // the wedge 0-cell
};

PresentationComplexResult presentation_complex(const Presentation& p);

// Cell automorphism of the presentation complex induced by (xi, rho).
DeltaMap presentation_cell_map(const Presentation& p, const SymmetricPresentation& sp, int g);

/**
 * The simplicial complex of the symmetric presentation: presentation complex,
 * subdivided twice, read as a simplicial complex; the G-action permutes the
 * canonical subdivision vertices.
 */
struct EquivariantComplexResult {
  SimplicialComplex complex;
  std::string basepoint;
  std::vector<SimplicialMap> action;  // one automorphism per group element
};

EquivariantComplexResult equivariant_presentation_complex(const SymmetricPresentation& sp);

}  // namespace fintop

#endif
