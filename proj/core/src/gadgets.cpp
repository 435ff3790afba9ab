#include "fintop/gadgets.hpp"

#include <stdexcept>

namespace fintop {

namespace {

// Appends edges of a path start - p1 - ... - plen to `facets` using labels
// name(s) for s = 1..len.
template <typename NameFn>
void attach_path(std::vector<std::vector<std::string>>& facets, const std::string& start,
                 int len, NameFn&& name, std::vector<std::string>& vertices) {
  std::string prev = start;
  for (int s = 1; s <= len; ++s) {
    std::string v = name(s);
    vertices.push_back(v);
    facets.push_back({prev, v});
    prev = v;
  }
}

}  // namespace

SimplicialComplex path_complex(int k) {
  if (k < 1) throw std::invalid_argument("path_complex requires k >= 1");
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i <= k; ++i) vertices.push_back("u" + std::to_string(i));
  for (int i = 0; i < k; ++i)
    facets.push_back({"u" + std::to_string(i), "u" + std::to_string(i + 1)});
  return SimplicialComplex::from_facets(vertices, facets);
}

SimplicialComplex w_complex(int k) {
  if (k < 2) throw std::invalid_argument("w_complex requires k >= 2");
  std::vector<std::string> vertices{"v0", "v1", "v2"};
  std::vector<std::vector<std::string>> facets{{"v0", "v1", "v2"}};
  attach_path(facets, "v0", k, [](int s) { return "u" + std::to_string(s); }, vertices);
  attach_path(facets, "v1", k + 1, [](int s) { return "t" + std::to_string(s); }, vertices);
  return SimplicialComplex::from_facets(vertices, facets);
}

SimplicialComplex u_complex(int i, int d) {
  if (d < 3) throw std::invalid_argument("u_complex requires d >= 3");
  if (i < 1) throw std::invalid_argument("u_complex requires i >= 1");
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;

  std::string xa = "x" + std::to_string(i - 1);
  std::string xb = "x" + std::to_string(i);
  std::string y = "y" + std::to_string(i);
  std::string w = "w" + std::to_string(i);
  std::vector<std::string> top{xa, xb, y, w};
  for (int j = 1; j <= d - 3; ++j)
    top.push_back("v[" + std::to_string(j) + "," + std::to_string(i) + "]");
  vertices = top;
  facets.push_back(top);

  attach_path(facets, w, i,
              [&](int s) { return "u[" + std::to_string(s) + "," + std::to_string(i) + "]"; },
              vertices);
  for (int j = 1; j <= d - 3; ++j)
    attach_path(facets, top[static_cast<std::size_t>(3 + j)], i + j,
                [&](int s) {
                  return "t[" + std::to_string(s) + "," + std::to_string(j) + "," +
                         std::to_string(i) + "]";
                },
                vertices);
  return SimplicialComplex::from_facets(vertices, facets);
}

BandComplex band_complex(int m, int d) {
  if (m < 2) throw std::invalid_argument("band_complex requires m >= 2");
  if (d < 3) throw std::invalid_argument("band_complex requires d >= 3");

  // Pieces already share spine labels x_{i-1}, x_i; plain union glues them.
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  std::unordered_map<std::string, int> seen;
  auto add_vertex = [&](const std::string& v) {
    if (seen.emplace(v, 0).second) vertices.push_back(v);
  };
  for (int i = 1; i <= m; ++i) {
    SimplicialComplex piece = u_complex(i, d);
    for (const auto& l : piece.labels()) add_vertex(l);
    for (const auto& f : piece.facet_labels()) facets.push_back(f);
  }
  for (int i = 1; i < m; ++i) {
    std::string xi = "x" + std::to_string(i);
    std::string wi = "w" + std::to_string(i);
    std::string wj = "w" + std::to_string(i + 1);
    facets.push_back({xi, wi, wj});
  }

  BandComplex out;
  out.complex = SimplicialComplex::from_facets(vertices, facets);
  for (int i = 0; i <= m; ++i) out.spine.push_back("x" + std::to_string(i));
  out.y_first = "y1";
  out.y_last = "y" + std::to_string(m);
  return out;
}

}  // namespace fintop
