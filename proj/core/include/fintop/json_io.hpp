#ifndef FINTOP_JSON_IO_HPP
#define FINTOP_JSON_IO_HPP

#include <string>
#include <vector>

#include "fintop/finite_poset.hpp"
#include "fintop/integer_matrix.hpp"
#include "fintop/presentation.hpp"
#include "fintop/simplicial_complex.hpp"

namespace fintop {

// Complexes: {"vertices":[...], "facets":[[...],...]}; serialisation lists
// the maximal simplices, so parse/serialise round-trips are byte stable.
SimplicialComplex parse_complex_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& K);

// Presentations: {"generators":[...], "relators":["x y x^-1", ...]}.
Presentation parse_presentation_json(const std::string& text);
std::string presentation_to_json(const Presentation& p);

// Groups: {"elements":[...], "identity":"e", "table":[[names...],...]},
// table[i][j] = elements[i] * elements[j].
FiniteGroup parse_group_json(const std::string& text);
std::string group_to_json(const FiniteGroup& G);

// Actions: {"images": {"g": ["word for x1", ...], ...}} over a presentation.
GroupAction parse_action_json(const std::string& text, const FiniteGroup& group,
                              const Presentation& target);
std::string action_to_json(const GroupAction& a);

// Posets: {"points":[...], "covers":[["x","y"],...]} with y covering x.
FinitePoset parse_poset_json(const std::string& text);
std::string poset_to_json(const FinitePoset& X);

// Complex automorphisms / vertex maps: {"g": {"v": "image", ...}, ...}.
std::string vertex_maps_to_json(const SimplicialComplex& K,
                                const std::vector<std::string>& names,
                                const std::vector<SimplicialMap>& maps);
std::vector<std::pair<std::string, SimplicialMap>> parse_vertex_maps_json(
    const std::string& text, const SimplicialComplex& K);

std::string homology_report_json(const std::vector<std::pair<int, AbelianGroup>>& groups);

// Hasse diagram in DOT, one node per point, one edge per cover, points
// ranked by height.
std::string poset_to_dot(const FinitePoset& X);

std::string symmetric_presentation_to_json(const SymmetricPresentation& sp);

// Deterministic content hashes for pipeline stage records.
std::string content_hash(const SimplicialComplex& K);
std::string content_hash(const FinitePoset& X);
std::string content_hash(const Presentation& p);

}  // namespace fintop

#endif
