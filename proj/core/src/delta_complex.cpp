#include "fintop/delta_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fintop {

DeltaComplex::DeltaComplex(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                           std::vector<Triangle> triangles)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)),
      triangles_(std::move(triangles)) {
  validate();
}

void DeltaComplex::validate() const {
  std::unordered_set<std::string> names;
  auto add_name = [&](const std::string& n) {
    if (n.empty() || !names.insert(n).second)
      throw std::invalid_argument("cell names must be unique and non-empty: " + n);
  };
  for (const auto& n : vertex_names_) add_name(n);
  for (const auto& e : edges_) {
    add_name(e.name);
    if (e.v0 < 0 || e.v0 >= vertex_count() || e.v1 < 0 || e.v1 >= vertex_count())
      throw std::invalid_argument("edge references unknown vertex");
  }
  for (const auto& t : triangles_) {
    add_name(t.name);
    for (int e : t.edges)
      if (e < 0 || e >= edge_count()) throw std::invalid_argument("triangle references unknown edge");
    // Simplicial identities for (e0, e1, e2) framing corners (v0, v1, v2).
    const Edge& e0 = edges_[static_cast<std::size_t>(t.edges[0])];
    const Edge& e1 = edges_[static_cast<std::size_t>(t.edges[1])];
    const Edge& e2 = edges_[static_cast<std::size_t>(t.edges[2])];
    if (e2.v0 != e1.v0 || e2.v1 != e0.v0 || e1.v1 != e0.v1)
      throw std::invalid_argument("triangle face identities violated for cell " + t.name);
  }
}

std::array<int, 3> DeltaComplex::triangle_corners(int t) const {
  const Triangle& tr = triangles_[static_cast<std::size_t>(t)];
  const Edge& e0 = edges_[static_cast<std::size_t>(tr.edges[0])];
  const Edge& e2 = edges_[static_cast<std::size_t>(tr.edges[2])];
  return {e2.v0, e2.v1, e0.v1};
}

long long DeltaComplex::euler_characteristic() const {
  return vertex_count() - edge_count() + triangle_count();
}

bool is_delta_automorphism(const DeltaComplex& Y, const DeltaMap& f) {
  if (static_cast<int>(f.vertices.size()) != Y.vertex_count() ||
      static_cast<int>(f.edges.size()) != Y.edge_count() ||
      static_cast<int>(f.triangles.size()) != Y.triangle_count())
    return false;
  if (!is_permutation(f.vertices) || !is_permutation(f.edges) || !is_permutation(f.triangles))
    return false;
  for (int e = 0; e < Y.edge_count(); ++e) {
    const auto& src = Y.edge(e);
    const auto& dst = Y.edge(f.edges[static_cast<std::size_t>(e)]);
    if (dst.v0 != f.vertices[static_cast<std::size_t>(src.v0)] ||
        dst.v1 != f.vertices[static_cast<std::size_t>(src.v1)])
      return false;
  }
  for (int t = 0; t < Y.triangle_count(); ++t) {
    const auto& src = Y.triangle(t);
    const auto& dst = Y.triangle(f.triangles[static_cast<std::size_t>(t)]);
    for (int k = 0; k < 3; ++k)
      if (dst.edges[static_cast<std::size_t>(k)] !=
          f.edges[static_cast<std::size_t>(src.edges[static_cast<std::size_t>(k)])])
        return false;
  }
  return true;
}

DeltaMap compose(const DeltaMap& f, const DeltaMap& g) {
  return DeltaMap{perm_compose(f.vertices, g.vertices), perm_compose(f.edges, g.edges),
                  perm_compose(f.triangles, g.triangles)};
}

DeltaComplex delta_subdivide(const DeltaComplex& Y) {
  const int V = Y.vertex_count(), E = Y.edge_count(), T = Y.triangle_count();

  std::vector<std::string> verts;
  verts.reserve(static_cast<std::size_t>(V + E + T));
  for (int v = 0; v < V; ++v) verts.push_back(Y.vertex_name(v));
  for (int e = 0; e < E; ++e) verts.push_back(Y.edge(e).name);
  for (int t = 0; t < T; ++t) verts.push_back(Y.triangle(t).name);
  auto bary_edge = [&](int e) { return V + e; };
  auto bary_tri = [&](int t) { return V + E + t; };

  std::vector<DeltaComplex::Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * E + 6 * T));
  for (int e = 0; e < E; ++e) {
    edges.push_back({Y.edge(e).v0, bary_edge(e), Y.edge(e).name + ".0"});
    edges.push_back({Y.edge(e).v1, bary_edge(e), Y.edge(e).name + ".1"});
  }
  // Per triangle: corner spokes then edge spokes.
  for (int t = 0; t < T; ++t) {
    auto corners = Y.triangle_corners(t);
    for (int c = 0; c < 3; ++c)
      edges.push_back({corners[static_cast<std::size_t>(c)], bary_tri(t),
                       Y.triangle(t).name + ".v" + std::to_string(c)});
    for (int d = 0; d < 3; ++d)
      edges.push_back({bary_edge(Y.triangle(t).edges[static_cast<std::size_t>(d)]), bary_tri(t),
                       Y.triangle(t).name + ".e" + std::to_string(d)});
  }
  auto half_edge = [&](int e, int half) { return 2 * e + half; };
  auto corner_spoke = [&](int t, int c) { return 2 * E + 6 * t + c; };
  auto edge_spoke = [&](int t, int d) { return 2 * E + 6 * t + 3 + d; };

  std::vector<DeltaComplex::Triangle> tris;
  tris.reserve(static_cast<std::size_t>(6 * T));
  for (int t = 0; t < T; ++t) {
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) {
        if (d == c) continue;
        // Corner c's position (source/target) inside face d is given by its
        // rank among {0,1,2} minus d; loop faces rely on this, not on ids.
        int p = -1, q = -1;
        for (int x = 0; x < 3; ++x) {
          if (x == d) continue;
          (p < 0 ? p : q) = x;
        }
        int half = (c == p) ? 0 : 1;
        DeltaComplex::Triangle nt;
        nt.edges = {edge_spoke(t, d), corner_spoke(t, c),
                    half_edge(Y.triangle(t).edges[static_cast<std::size_t>(d)], half)};
        nt.name = Y.triangle(t).name + ".c" + std::to_string(c) + "e" + std::to_string(d);
        tris.push_back(std::move(nt));
      }
  }
  return DeltaComplex(std::move(verts), std::move(edges), std::move(tris));
}

DeltaMap lift_through_subdivision(const DeltaComplex& Y, const DeltaComplex& sdY,
                                  const DeltaMap& f) {
  if (!is_delta_automorphism(Y, f))
    throw std::invalid_argument("cell map does not commute with the face structure");
  const int V = Y.vertex_count(), E = Y.edge_count(), T = Y.triangle_count();
  DeltaMap out;
  out.vertices.resize(static_cast<std::size_t>(sdY.vertex_count()));
  out.edges.resize(static_cast<std::size_t>(sdY.edge_count()));
  out.triangles.resize(static_cast<std::size_t>(sdY.triangle_count()));
  for (int v = 0; v < V; ++v) out.vertices[static_cast<std::size_t>(v)] = f.vertices[static_cast<std::size_t>(v)];
  for (int e = 0; e < E; ++e)
    out.vertices[static_cast<std::size_t>(V + e)] = V + f.edges[static_cast<std::size_t>(e)];
  for (int t = 0; t < T; ++t)
    out.vertices[static_cast<std::size_t>(V + E + t)] = V + E + f.triangles[static_cast<std::size_t>(t)];
  for (int e = 0; e < E; ++e)
    for (int h = 0; h < 2; ++h)
      out.edges[static_cast<std::size_t>(2 * e + h)] = 2 * f.edges[static_cast<std::size_t>(e)] + h;
  for (int t = 0; t < T; ++t) {
    int ft = f.triangles[static_cast<std::size_t>(t)];
    for (int k = 0; k < 6; ++k)
      out.edges[static_cast<std::size_t>(2 * E + 6 * t + k)] = 2 * E + 6 * ft + k;
    for (int k = 0; k < 6; ++k)
      out.triangles[static_cast<std::size_t>(6 * t + k)] = 6 * ft + k;
  }
  if (!is_delta_automorphism(sdY, out))
    throw std::runtime_error("lifted map is not a cell automorphism");
  return out;
}

SimplicialComplex delta_to_simplicial(const DeltaComplex& Y) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(Y.vertex_count()));
  for (int v = 0; v < Y.vertex_count(); ++v) labels.push_back(Y.vertex_name(v));
  std::vector<int> order(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)]; });
  std::vector<int> new_id(labels.size());
  std::vector<std::string> sorted_labels(labels.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    new_id[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
    sorted_labels[r] = labels[static_cast<std::size_t>(order[r])];
  }

  std::unordered_set<std::vector<int>, VecIntHash> seen;
  std::vector<std::vector<int>> facets;
  auto add_cell = [&](std::vector<int> cell, const std::string& name) {
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
      throw std::invalid_argument("cell is degenerate as a vertex set: " + name);
    if (!seen.insert(cell).second)
      throw std::invalid_argument("two cells share one vertex set at " + name);
    facets.push_back(std::move(cell));
  };
  for (int t = 0; t < Y.triangle_count(); ++t) {
    auto c = Y.triangle_corners(t);
    add_cell({new_id[static_cast<std::size_t>(c[0])], new_id[static_cast<std::size_t>(c[1])],
              new_id[static_cast<std::size_t>(c[2])]},
             Y.triangle(t).name);
  }
  for (int e = 0; e < Y.edge_count(); ++e)
    add_cell({new_id[static_cast<std::size_t>(Y.edge(e).v0)], new_id[static_cast<std::size_t>(Y.edge(e).v1)]},
             Y.edge(e).name);
  return SimplicialComplex::from_index_facets(std::move(sorted_labels), facets);
}

}  // namespace fintop
