#include <doctest.h>

#include <set>

#include "fintop/collapse.hpp"
#include "fintop/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

SimplicialComplex triangle_full() {
  return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
}

SimplicialComplex cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::vector<std::string>> f;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i) f.push_back({v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % n)]});
  return SimplicialComplex::from_facets(v, f);
}

}  // namespace

TEST_CASE("from_facets: closure, isolated vertices, errors") {
  SimplicialComplex K = triangle_full();
  CHECK(K.simplex_count() == 7);  // 2^3 - 1 subsets
  CHECK(K.dimension() == 2);

  SimplicialComplex P = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(P.simplex_count() == 5);
  CHECK(P.dimension() == 1);

  SimplicialComplex I = SimplicialComplex::from_facets({"a", "b"}, {{"a"}});
  CHECK(I.simplex_count() == 2);
  CHECK_FALSE(I.is_connected());

  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{"a", "a"}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a"}, {{"a", "z"}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("facets recovers the maximal simplices") {
  SimplicialComplex K = SimplicialComplex::from_facets(
      {"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
  auto f = K.facet_labels();
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::vector<std::string>{"c", "d"});
  CHECK(f[1] == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("barycentric subdivision: pinned sizes") {
  // Oracle: chains in the face poset, enumerated by direct subset tests.
  SimplicialComplex K = triangle_full();
  CHECK(oracles::chain_count_of_length(K.simplices(), 1) == 7);
  CHECK(oracles::chain_count_of_length(K.simplices(), 2) == 12);
  CHECK(oracles::chain_count_of_length(K.simplices(), 3) == 6);

  SimplicialComplex sd = barycentric_subdivision(K);
  CHECK(sd.vertex_count() == 7);
  CHECK(sd.count_in_dim(1) == 12);
  CHECK(sd.count_in_dim(2) == 6);
  CHECK(sd.euler_characteristic() == 1);

  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  SimplicialComplex sd_edge = barycentric_subdivision(edge);
  CHECK(sd_edge.vertex_count() == 3);
  CHECK(sd_edge.count_in_dim(1) == 2);

  SimplicialComplex pt = SimplicialComplex::from_facets({"a"}, {{"a"}});
  SimplicialComplex sd_pt = barycentric_subdivision(pt);
  CHECK(sd_pt.vertex_count() == 1);
  CHECK(sd_pt.simplex_count() == 1);
  CHECK(sd_pt.label(0) == "{a}");
}

TEST_CASE("covering_walk: deterministic truncated Euler tour") {
  SimplicialComplex tri = cycle(3);
  VertexPath w = covering_walk(tri);
  CHECK(tri.to_labels(w.vertices) == std::vector<std::string>{"a", "b", "c"});
  CHECK(w.length() <= 2 * (tri.vertex_count() - 1));

  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  CHECK(edge.to_labels(covering_walk(edge).vertices) == std::vector<std::string>{"a", "b"});

  SimplicialComplex p2 =
      SimplicialComplex::from_facets({"u0", "u1", "u2"}, {{"u0", "u1"}, {"u1", "u2"}});
  CHECK(p2.to_labels(covering_walk(p2).vertices) == std::vector<std::string>{"u0", "u1", "u2"});

  // A star forces revisiting the center.
  SimplicialComplex star = SimplicialComplex::from_facets(
      {"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  VertexPath sw = covering_walk(star);
  CHECK(is_vertex_path(star, sw));
  std::set<int> seen(sw.vertices.begin(), sw.vertices.end());
  CHECK(static_cast<int>(seen.size()) == star.vertex_count());

  CHECK_THROWS_AS(covering_walk(SimplicialComplex::from_facets({"a"}, {{"a"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(covering_walk(SimplicialComplex::from_facets({"a", "b"}, {{"a"}, {"b"}})),
                  std::invalid_argument);
}

TEST_CASE("automorphism_group: pinned orders and group axioms") {
  CHECK(automorphism_group(triangle_full()).size() == 6);
  CHECK(automorphism_group(cycle(3)).size() == 6);

  // Path with three edges: identity and reversal only.
  SimplicialComplex p3 = SimplicialComplex::from_facets(
      {"u0", "u1", "u2", "u3"}, {{"u0", "u1"}, {"u1", "u2"}, {"u2", "u3"}});
  auto auts = automorphism_group(p3);
  CHECK(auts.size() == 2);

  // Group axioms on a complex with some symmetry.
  SimplicialComplex K = cycle(4);
  auto group = automorphism_group(K);
  CHECK(group.size() == 8);
  std::set<std::vector<int>> images;
  for (const auto& f : group) images.insert(f.image);
  std::vector<int> id(static_cast<std::size_t>(K.vertex_count()));
  for (int i = 0; i < K.vertex_count(); ++i) id[static_cast<std::size_t>(i)] = i;
  CHECK(images.count(id) == 1);
  for (const auto& f : group) {
    for (const auto& g : group) CHECK(images.count(compose(f, g).image) == 1);
    Perm inv = perm_inverse(f.image);
    CHECK(images.count(inv) == 1);
  }
}

TEST_CASE("automorphism_group agrees with the brute-force oracle") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 12; ++i) {
    SimplicialComplex K = oracles::random_complex(rng, 7, 4);
    auto expected = oracles::naive_automorphisms(K);
    auto got = automorphism_group(K);
    REQUIRE(got.size() == expected.size());
    std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
    for (const auto& f : got) CHECK(expected_set.count(f.image) == 1);
  }
}

TEST_CASE("membership vectors and path images are preserved by automorphisms") {
  std::mt19937 rng(991);
  for (int i = 0; i < 10; ++i) {
    SimplicialComplex K = oracles::random_complex(rng, 7, 4, /*connected=*/true);
    auto mv = K.membership_vectors();
    auto group = automorphism_group(K);
    for (const auto& f : group)
      for (int v = 0; v < K.vertex_count(); ++v)
        CHECK(mv[static_cast<std::size_t>(v)] == mv[static_cast<std::size_t>(f.image[static_cast<std::size_t>(v)])]);
    VertexPath P = covering_walk(K);
    for (const auto& f : group) {
      VertexPath img;
      for (int v : P.vertices) img.vertices.push_back(f.image[static_cast<std::size_t>(v)]);
      CHECK(is_vertex_path(K, img));
      CHECK(img.length() == P.length());
    }
  }
}

TEST_CASE("glue: pushouts, wedges and degeneracy errors") {
  SimplicialComplex e1 = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  SimplicialComplex e2 = SimplicialComplex::from_facets({"c", "d"}, {{"c", "d"}});
  SimplicialComplex path = glue({&e1, &e2}, {{{0, "b"}, {1, "c"}}});
  CHECK(path.vertex_count() == 3);
  CHECK(path.count_in_dim(1) == 2);

  SimplicialComplex tri = triangle_full();
  SimplicialComplex p2 =
      SimplicialComplex::from_facets({"u0", "u1", "u2"}, {{"u0", "u1"}, {"u1", "u2"}});
  SimplicialComplex wedge = glue({&tri, &p2}, {{{0, "a"}, {1, "u0"}}});
  CHECK(wedge.vertex_count() == 5);

  CHECK_THROWS_AS(glue({&e1}, {{{0, "a"}, {0, "b"}}}), std::invalid_argument);
}

TEST_CASE("glue is associative up to isomorphism") {
  SimplicialComplex a = triangle_full();
  SimplicialComplex b = SimplicialComplex::from_facets({"p", "q"}, {{"p", "q"}});
  SimplicialComplex c = cycle(4);

  SimplicialComplex ab = glue({&a, &b}, {{{0, "a"}, {1, "p"}}});
  SimplicialComplex ab_c = glue({&ab, &c}, {{{0, "q"}, {1, "a"}}});

  SimplicialComplex bc = glue({&b, &c}, {{{0, "q"}, {1, "a"}}});
  SimplicialComplex a_bc = glue({&a, &bc}, {{{0, "a"}, {1, "p"}}});

  CHECK(isomorphic(ab_c, a_bc));
}

TEST_CASE("isomorphism check distinguishes full triangle from its boundary") {
  SimplicialComplex full = triangle_full();
  SimplicialComplex hollow = cycle(3);
  CHECK_FALSE(isomorphic(full, hollow));
  CHECK(isomorphic(full, SimplicialComplex::from_facets({"x", "y", "z"}, {{"x", "y", "z"}})));
}

TEST_CASE("collapse: cones collapse, cycles do not") {
  SimplicialComplex d3 = SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
  CHECK(collapse(d3));
  CHECK_FALSE(collapse(cycle(3)));
}
