#include "fintop/presentation_complex.hpp"

#include <stdexcept>

namespace fintop {

namespace {

struct Layout {
  int n = 0, r = 0;
  std::vector<int> lengths;
  std::vector<int> spoke_offset;  // spoke cell index = n + spoke_offset[j] + pos
  int total_spokes = 0;
  std::vector<int> tri_offset;    // triangle index = tri_offset[j] + pos

  explicit Layout(const Presentation& p) {
    n = static_cast<int>(p.generators.size());
    r = static_cast<int>(p.relators.size());
    for (const Word& w : p.relators) {
      if (w.empty()) throw std::invalid_argument("empty relator word");
      spoke_offset.push_back(total_spokes);
      tri_offset.push_back(total_spokes);
      lengths.push_back(w.length());
      total_spokes += w.length();
    }
  }
};

}  // namespace

PresentationComplexResult presentation_complex(const Presentation& p) {
  p.validate();
  Layout L(p);

  std::vector<std::string> verts;
  verts.push_back("p");
  for (int j = 0; j < L.r; ++j) verts.push_back("b" + std::to_string(j + 1));

  std::vector<DeltaComplex::Edge> edges;
  for (int i = 0; i < L.n; ++i) edges.push_back({0, 0, "g:" + p.generators[static_cast<std::size_t>(i)]});
  for (int j = 0; j < L.r; ++j)
    for (int pos = 0; pos < L.lengths[static_cast<std::size_t>(j)]; ++pos)
      edges.push_back({0, 1 + j, "s" + std::to_string(j + 1) + "." + std::to_string(pos)});

  auto spoke = [&](int j, int pos) { return L.n + L.spoke_offset[static_cast<std::size_t>(j)] + pos; };

  std::vector<DeltaComplex::Triangle> tris;
  for (int j = 0; j < L.r; ++j) {
    const Word& w = p.relators[static_cast<std::size_t>(j)];
    const int l = w.length();
    for (int pos = 0; pos < l; ++pos) {
      const Letter& letter = w.letters[static_cast<std::size_t>(pos)];
      DeltaComplex::Triangle t;
      int nxt = (pos + 1) % l;
      if (letter.exponent > 0)
        t.edges = {spoke(j, nxt), spoke(j, pos), letter.generator};
      else
        t.edges = {spoke(j, pos), spoke(j, nxt), letter.generator};
      t.name = "t" + std::to_string(j + 1) + "." + std::to_string(pos);
      tris.push_back(std::move(t));
    }
  }
  return {DeltaComplex(std::move(verts), std::move(edges), std::move(tris)), 0};
}

DeltaMap presentation_cell_map(const Presentation& p, const SymmetricPresentation& sp, int g) {
  Layout L(p);
  const Perm& xi = sp.xi[static_cast<std::size_t>(g)];
  const Perm& rho = sp.rho[static_cast<std::size_t>(g)];
  DeltaMap f;
  f.vertices.resize(static_cast<std::size_t>(1 + L.r));
  f.vertices[0] = 0;
  for (int j = 0; j < L.r; ++j)
    f.vertices[static_cast<std::size_t>(1 + j)] = 1 + rho[static_cast<std::size_t>(j)];
  f.edges.resize(static_cast<std::size_t>(L.n + L.total_spokes));
  for (int i = 0; i < L.n; ++i) f.edges[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i)];
  for (int j = 0; j < L.r; ++j)
    for (int pos = 0; pos < L.lengths[static_cast<std::size_t>(j)]; ++pos)
      f.edges[static_cast<std::size_t>(L.n + L.spoke_offset[static_cast<std::size_t>(j)] + pos)] =
          L.n + L.spoke_offset[static_cast<std::size_t>(rho[static_cast<std::size_t>(j)])] + pos;
  f.triangles.resize(static_cast<std::size_t>(L.total_spokes));
  for (int j = 0; j < L.r; ++j)
    for (int pos = 0; pos < L.lengths[static_cast<std::size_t>(j)]; ++pos)
      f.triangles[static_cast<std::size_t>(L.tri_offset[static_cast<std::size_t>(j)] + pos)] =
          L.tri_offset[static_cast<std::size_t>(rho[static_cast<std::size_t>(j)])] + pos;
  return f;
}

EquivariantComplexResult equivariant_presentation_complex(const SymmetricPresentation& sp) {
  sp.verify();
  PresentationComplexResult pc = presentation_complex(sp.presentation);
  DeltaComplex sd1 = delta_subdivide(pc.complex);
  DeltaComplex sd2 = delta_subdivide(sd1);

  EquivariantComplexResult out;
  out.complex = delta_to_simplicial(sd2);
  out.basepoint = pc.complex.vertex_name(pc.basepoint);

  std::vector<int> kidx(static_cast<std::size_t>(sd2.vertex_count()));
  for (int v = 0; v < sd2.vertex_count(); ++v)
    kidx[static_cast<std::size_t>(v)] = out.complex.index_of(sd2.vertex_name(v));

  const int ord = sp.group.order();
  for (int g = 0; g < ord; ++g) {
    DeltaMap f0 = presentation_cell_map(sp.presentation, sp, g);
    DeltaMap f1 = lift_through_subdivision(pc.complex, sd1, f0);
    DeltaMap f2 = lift_through_subdivision(sd1, sd2, f1);
    SimplicialMap m;
    m.image.assign(static_cast<std::size_t>(out.complex.vertex_count()), -1);
    for (int v = 0; v < sd2.vertex_count(); ++v)
      m.image[static_cast<std::size_t>(kidx[static_cast<std::size_t>(v)])] =
          kidx[static_cast<std::size_t>(f2.vertices[static_cast<std::size_t>(v)])];
    if (!is_automorphism(out.complex, m))
      throw std::runtime_error("induced vertex map fails to be simplicial (invalid xi/rho)");
    out.action.push_back(std::move(m));
  }
  // Homomorphism check over the whole group.
  for (int g = 0; g < ord; ++g)
    for (int h = 0; h < ord; ++h)
      if (!(compose(out.action[static_cast<std::size_t>(g)], out.action[static_cast<std::size_t>(h)]) ==
            out.action[static_cast<std::size_t>(sp.group.mul(g, h))]))
        throw std::runtime_error("action map is not a group homomorphism");
  return out;
}

}  // namespace fintop
