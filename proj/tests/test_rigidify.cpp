#include <doctest.h>

#include <set>

#include "fintop/homology.hpp"
#include "fintop/rigidify.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

SimplicialComplex cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::vector<std::string>> f;
  for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int i = 0; i < n; ++i) f.push_back({v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % n)]});
  return SimplicialComplex::from_facets(v, f);
}

std::vector<SimplicialMap> rotation_subgroup(const SimplicialComplex& cn) {
  // Generated by v -> v+1 in the sorted a,b,c,... labeling.
  const int n = cn.vertex_count();
  Perm rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<SimplicialMap> out;
  for (const Perm& p : generated_subgroup({rot}, n)) out.push_back(SimplicialMap{p});
  return out;
}

}  // namespace

TEST_CASE("orbit_of_tuple") {
  // Cyclic rotation of (0,1,2).
  std::vector<Perm> c3 = generated_subgroup({{1, 2, 0}}, 3);
  auto orbit = orbit_of_tuple(c3, {0, 1, 2}, 3);
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[0] == std::vector<int>{0, 1, 2});
  CHECK(orbit[1] == std::vector<int>{1, 2, 0});
  CHECK(orbit[2] == std::vector<int>{2, 0, 1});

  CHECK(orbit_of_tuple({perm_identity(3)}, {0, 1, 2}, 3).size() == 1);
  CHECK_THROWS_AS(orbit_of_tuple(c3, {0, 3}, 3), std::invalid_argument);
}

TEST_CASE("distinct subgroups of S3 have distinct identity-tuple orbits") {
  auto s3 = symmetric_group(3);
  auto subgroups = all_subgroups(s3);
  REQUIRE(subgroups.size() == 6);
  std::set<std::vector<std::vector<int>>> orbits;
  for (const auto& sub : subgroups) {
    std::vector<Perm> elems;
    for (int id : sub) elems.push_back(s3[static_cast<std::size_t>(id)]);
    orbits.insert(orbit_of_tuple(elems, {0, 1, 2}, 3));
  }
  CHECK(orbits.size() == subgroups.size());
}

TEST_CASE("rigidify C3 by the rotation subgroup") {
  SimplicialComplex K = cycle(3);
  auto G = rotation_subgroup(K);
  REQUIRE(G.size() == 3);
  VertexPath P = covering_walk(K);
  RigidificationResult R = rigidify(K, G, P);

  CHECK(R.band_dimension == 3);
  CHECK(R.bands.size() == 3);
  // Bands only meet inside the base.
  std::set<std::string> base(R.base.begin(), R.base.end());
  std::set<std::string> seen;
  for (const auto& band : R.bands)
    for (const auto& v : band) {
      CHECK(base.count(v) == 0);
      CHECK(seen.insert(v).second);
    }

  auto auts = automorphism_group(R.complex);
  CHECK(auts.size() == 3);

  CHECK(homology(R.complex, 0) == homology(K, 0));
  CHECK(homology(R.complex, 1) == homology(K, 1));
  CHECK(homology(R.complex, 2).is_trivial());
}

TEST_CASE("rigidify C3 by its full dihedral automorphism group") {
  SimplicialComplex K = cycle(3);
  auto G = automorphism_group(K);
  REQUIRE(G.size() == 6);
  RigidificationResult R = rigidify(K, G, covering_walk(K));
  CHECK(automorphism_group(R.complex).size() == 6);
  CHECK(homology(R.complex, 1) == AbelianGroup{1, {}});
}

TEST_CASE("restriction of aut(R) to the base is the G-orbit of the walk") {
  SimplicialComplex K = cycle(4);
  auto G = rotation_subgroup(K);  // Z/4
  REQUIRE(G.size() == 4);
  VertexPath P = covering_walk(K);
  RigidificationResult R = rigidify(K, G, P);
  auto auts = automorphism_group(R.complex);
  REQUIRE(auts.size() == 4);

  std::set<std::vector<int>> walk_orbit;
  for (const auto& g : G) {
    std::vector<int> img;
    for (int v : P.vertices) img.push_back(g.image[static_cast<std::size_t>(v)]);
    walk_orbit.insert(img);
  }
  // Restrict each automorphism of R to the base and apply to the walk.
  for (const auto& f : auts) {
    std::vector<int> img;
    for (int v : P.vertices) {
      int rv = R.complex.index_of(K.label(v));
      img.push_back(K.index_of(R.complex.label(f.image[static_cast<std::size_t>(rv)])));
    }
    CHECK(walk_orbit.count(img) == 1);
  }
}

TEST_CASE("Euler characteristic bookkeeping of the rigidification") {
  SimplicialComplex K = cycle(4);
  auto G = rotation_subgroup(K);
  VertexPath P = covering_walk(K);
  RigidificationResult R = rigidify(K, G, P);

  BandComplex band = band_complex(P.length(), R.band_dimension);
  // chi of the walk image inside K: distinct vertices minus distinct edges.
  std::set<int> wv(P.vertices.begin(), P.vertices.end());
  std::set<std::pair<int, int>> we;
  for (std::size_t i = 0; i + 1 < P.vertices.size(); ++i)
    we.insert({std::min(P.vertices[i], P.vertices[i + 1]),
               std::max(P.vertices[i], P.vertices[i + 1])});
  long long chi_walk = static_cast<long long>(wv.size()) - static_cast<long long>(we.size());
  long long expected = K.euler_characteristic() +
                       static_cast<long long>(G.size()) *
                           (band.complex.euler_characteristic() - chi_walk);
  CHECK(R.complex.euler_characteristic() == expected);
}

TEST_CASE("rigidify rejects invalid inputs") {
  SimplicialComplex K = cycle(3);
  auto G = rotation_subgroup(K);
  VertexPath P = covering_walk(K);

  CHECK_THROWS_AS(rigidify(K, {G[0]}, P), std::invalid_argument);  // trivial group

  std::vector<SimplicialMap> not_closed{G[0], G[1]};  // id and one rotation
  CHECK_THROWS_AS(rigidify(K, not_closed, P), std::invalid_argument);

  VertexPath bad{{0, 1}};  // does not cover c
  CHECK_THROWS_AS(rigidify(K, G, bad), std::invalid_argument);

  VertexPath repeat{{0, 0, 1, 2}};
  CHECK_THROWS_AS(rigidify(K, G, repeat), std::invalid_argument);

  std::vector<SimplicialMap> not_auto{G[0], SimplicialMap{{0, 0, 1}}};
  CHECK_THROWS_AS(rigidify(K, not_auto, P), std::invalid_argument);
}

TEST_CASE("rigidify_trivial") {
  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  SimplicialComplex L = rigidify_trivial(edge);
  // W_3 and W_4 attached: 2 + (2*3+4 - 1) + (2*4+4 - 1) vertices.
  CHECK(L.vertex_count() == 2 + 9 + 11);
  CHECK(automorphism_group(L).size() == 1);
  CHECK(homology(L, 1).is_trivial());

  SimplicialComplex K = cycle(3);
  SimplicialComplex L3 = rigidify_trivial(K);
  CHECK(automorphism_group(L3).size() == 1);
  CHECK(homology(L3, 0) == AbelianGroup{1, {}});
  CHECK(homology(L3, 1) == AbelianGroup{1, {}});

  SimplicialComplex pt = SimplicialComplex::from_facets({"a"}, {{"a"}});
  SimplicialComplex Lp = rigidify_trivial(pt);
  CHECK(Lp.vertex_count() == 1 + 7);  // W_2 wedged at its v2
  CHECK(automorphism_group(Lp).size() == 1);
}
