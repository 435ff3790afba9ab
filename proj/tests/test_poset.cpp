#include <doctest.h>

#include <set>

#include "fintop/collapse.hpp"
#include "fintop/finite_poset.hpp"
#include "fintop/homology.hpp"
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

FinitePoset chain(int n) {
  std::vector<std::string> pts;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) pts.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(i + 1)]);
  return FinitePoset::from_covers(pts, covers);
}

FinitePoset antichain(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("a" + std::to_string(i));
  return FinitePoset::from_covers(pts, {});
}

// Minimal 4-point model of the circle: two minimal points both under two
// maximal points.
FinitePoset circle_model() {
  return FinitePoset::from_covers({"x1", "x2", "y1", "y2"},
                                  {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}});
}

}  // namespace

TEST_CASE("poset validation") {
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  std::invalid_argument);
  // Transitively implied pair.
  CHECK_THROWS_AS(
      FinitePoset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
      std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("face_poset basics") {
  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  FinitePoset X = face_poset(edge);
  CHECK(X.size() == 3);
  CHECK(X.cover_count() == 2);

  SimplicialComplex tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
  FinitePoset Y = face_poset(tri);
  CHECK(Y.size() == 7);
  CHECK(Y.max_chain_cardinality() == 3);
  CHECK(Y.size() == tri.simplex_count());
}

TEST_CASE("order_complex basics and the subdivision bridge") {
  CHECK(order_complex(chain(2)).count_in_dim(1) == 1);
  SimplicialComplex two = order_complex(antichain(2));
  CHECK(two.vertex_count() == 2);
  CHECK(two.dimension() == 0);

  SimplicialComplex tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK(order_complex(face_poset(tri)) == barycentric_subdivision(tri));
}

TEST_CASE("beat points and minimality") {
  FinitePoset c3 = chain(3);
  CHECK(beat_points(c3).size() == 3);
  CHECK_FALSE(is_minimal(c3));

  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  FinitePoset X = face_poset(edge);
  auto beats = beat_points(X);
  REQUIRE(beats.size() == 2);
  CHECK(X.name(beats[0]) == "{a}");
  CHECK(X.name(beats[1]) == "{b}");

  CHECK(is_minimal(w2_poset().poset));
  CHECK(is_minimal(FinitePoset::from_covers({"x"}, {})));
}

TEST_CASE("poset automorphisms: pinned counts and oracle agreement") {
  CHECK(poset_automorphisms(antichain(2)).size() == 2);
  CHECK(poset_automorphisms(w2_poset().poset).size() == 1);

  FinitePoset fc3 = face_poset(cycle(3));
  CHECK(poset_automorphisms(fc3).size() == 6);
  CHECK(poset_automorphisms(fc3).size() == automorphism_group(cycle(3)).size());

  std::mt19937 rng(4242);
  for (int i = 0; i < 12; ++i) {
    FinitePoset X = oracles::random_poset(rng, 8);
    auto expected = oracles::naive_poset_automorphisms(X);
    auto got = poset_automorphisms(X);
    REQUIRE(got.size() == expected.size());
    std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
    for (const auto& f : got) CHECK(expected_set.count(f.image) == 1);
  }
}

TEST_CASE("automorphisms preserve degree/height/depth signatures") {
  std::mt19937 rng(777);
  for (int i = 0; i < 10; ++i) {
    FinitePoset X = oracles::random_poset(rng, 9);
    auto h = X.heights();
    auto d = X.depths();
    for (const auto& f : poset_automorphisms(X))
      for (int p = 0; p < X.size(); ++p) {
        int q = f.image[static_cast<std::size_t>(p)];
        CHECK(X.up()[static_cast<std::size_t>(p)].size() == X.up()[static_cast<std::size_t>(q)].size());
        CHECK(X.down()[static_cast<std::size_t>(p)].size() == X.down()[static_cast<std::size_t>(q)].size());
        CHECK(h[static_cast<std::size_t>(p)] == h[static_cast<std::size_t>(q)]);
        CHECK(d[static_cast<std::size_t>(p)] == d[static_cast<std::size_t>(q)]);
      }
  }
}

TEST_CASE("W2 fixture: transcription properties") {
  PointedPoset w2 = w2_poset();
  CHECK(w2.poset.size() == 17);
  CHECK(w2.poset.cover_count() == 26);
  CHECK(w2.base == "m17");
  CHECK(w2.poset.down()[static_cast<std::size_t>(w2.poset.index_of("m17"))].empty());
  CHECK(is_minimal(w2.poset));
  CHECK(poset_automorphisms(w2.poset).size() == 1);
  CHECK(w2.poset.max_chain_cardinality() == 5);

  SimplicialComplex k = order_complex(w2.poset);
  auto groups = homology_all(k, k.dimension());
  CHECK(groups[0] == AbelianGroup{1, {}});
  for (std::size_t d = 1; d < groups.size(); ++d) CHECK(groups[d].is_trivial());
  CHECK(collapse(k));
}

TEST_CASE("W2 is the wedge of two L1 blocks") {
  L1Poset a = l1_poset();
  CHECK(a.poset.size() == 9);
  // Relabel a second copy and hang it below the base of the first.
  std::vector<std::string> pts;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int p = 0; p < a.poset.size(); ++p) pts.push_back("B" + a.poset.name(p));
  for (int p = 0; p < a.poset.size(); ++p)
    for (int q : a.poset.up()[static_cast<std::size_t>(p)])
      covers.emplace_back("B" + a.poset.name(p), "B" + a.poset.name(q));
  FinitePoset copyB = FinitePoset::from_covers(pts, covers);
  FinitePoset wedged = wedge(a.poset, a.base, copyB, "B" + a.top);
  CHECK(poset_isomorphic(wedged, w2_poset().poset));
}

TEST_CASE("W_k towers: sizes, rigidity, minimality, chain growth") {
  CHECK(wk_poset(3).poset.size() == 25);  // 17 + 9 - 1
  for (int k = 2; k <= 5; ++k) {
    PointedPoset w = wk_poset(k);
    CHECK(is_minimal(w.poset));
    CHECK(poset_automorphisms(w.poset).size() == 1);
    CHECK(w.poset.max_chain_cardinality() == 2 * k + 1);
    CHECK(w.poset.down()[static_cast<std::size_t>(w.poset.index_of(w.base))].empty());
  }
}

TEST_CASE("wedge basics") {
  FinitePoset s1 = FinitePoset::from_covers({"x"}, {});
  FinitePoset s2 = FinitePoset::from_covers({"y"}, {});
  CHECK(wedge(s1, "x", s2, "y").size() == 1);

  FinitePoset c1 = chain(2);
  std::vector<std::string> pts{"d0", "d1"};
  FinitePoset c2 = FinitePoset::from_covers(pts, {{"d0", "d1"}});
  FinitePoset v = wedge(c1, "c0", c2, "d0");
  CHECK(v.size() == 3);
  int minimal_points = 0, maximal_points = 0;
  for (int p = 0; p < v.size(); ++p) {
    if (v.down()[static_cast<std::size_t>(p)].empty()) ++minimal_points;
    if (v.up()[static_cast<std::size_t>(p)].empty()) ++maximal_points;
  }
  CHECK(minimal_points == 1);
  CHECK(maximal_points == 2);
}

TEST_CASE("non-Hausdorff join") {
  FinitePoset two = non_hausdorff_join(FinitePoset::from_covers({"x"}, {}),
                                       FinitePoset::from_covers({"y"}, {}));
  CHECK(two.size() == 2);
  CHECK(two.cover_count() == 1);

  FinitePoset s0s0 = non_hausdorff_join(antichain(2), antichain(2));
  CHECK(s0s0.size() == 4);
  SimplicialComplex k = order_complex(s0s0);
  CHECK(k.count_in_dim(1) == 4);
  CHECK(homology(k, 1) == AbelianGroup{1, {}});
  CHECK(poset_isomorphic(s0s0, circle_model()));
}

TEST_CASE("join with S0 shifts homology (suspension shadow)") {
  for (const FinitePoset& X : {circle_model(), face_poset(cycle(3))}) {
    FinitePoset join = non_hausdorff_join(X, antichain(2));
    SimplicialComplex kx = order_complex(X);
    SimplicialComplex kj = order_complex(join);
    for (int q = 1; q <= kx.dimension(); ++q)
      CHECK(homology(kj, q + 1) == homology(kx, q));
    // Reduced H1 of the join equals reduced H0 of X.
    AbelianGroup h0 = reduced_homology(kx, 0);
    CHECK(reduced_homology(kj, 1) == h0);
  }
}

TEST_CASE("glue_w_at_beat_points: minimality, homology, automorphisms") {
  SimplicialComplex edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
  FinitePoset X = face_poset(edge);
  GlueWResult g = glue_w_at_beat_points(X);
  CHECK(g.copies.size() == 2);
  CHECK(is_minimal(g.poset));
  CHECK(g.level == 2);

  // Already minimal: unchanged.
  FinitePoset W = w2_poset().poset;
  GlueWResult unchanged = glue_w_at_beat_points(W);
  CHECK(unchanged.poset == W);
  CHECK(unchanged.copies.empty());

  // Automorphisms restrict bijectively on the full triangle's face poset.
  SimplicialComplex tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
  FinitePoset Y = face_poset(tri);
  GlueWResult gy = glue_w_at_beat_points(Y);
  CHECK(is_minimal(gy.poset));
  auto before = poset_automorphisms(Y);
  auto after = poset_automorphisms(gy.poset);
  CHECK(after.size() == before.size());
  std::set<std::vector<int>> restrictions;
  for (const auto& f : after) {
    std::vector<int> r;
    bool inside = true;
    for (int p = 0; p < Y.size(); ++p) {
      int img = f.image[static_cast<std::size_t>(p)];
      if (img >= Y.size()) inside = false;
      r.push_back(img);
    }
    CHECK(inside);
    restrictions.insert(r);
  }
  CHECK(restrictions.size() == before.size());

  // Homology of the order complex is unchanged in every degree.
  SimplicialComplex ky = order_complex(Y);
  SimplicialComplex kgy = order_complex(gy.poset);
  for (int d = 0; d <= kgy.dimension(); ++d)
    CHECK(homology(kgy, d) == (d <= ky.dimension() ? homology(ky, d) : AbelianGroup{}));
}

TEST_CASE("auto level exceeds the chain length of the input") {
  SimplicialComplex tet =
      SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
  FinitePoset X = face_poset(tet);  // chains of 4 elements
  GlueWResult g = glue_w_at_beat_points(X);
  CHECK(wk_poset(g.level).poset.max_chain_cardinality() > X.max_chain_cardinality());
  CHECK(g.level == 2);
  CHECK(is_minimal(g.poset));
}

TEST_CASE("join_with_w2_plus_point: minimal, aut preserved, H2 of the circle") {
  FinitePoset Y = circle_model();
  FinitePoset J = join_with_w2_plus_point(Y, 1);
  CHECK(is_minimal(J));
  CHECK(poset_automorphisms(J).size() == poset_automorphisms(Y).size());
  CHECK(homology(order_complex(J), 2) == AbelianGroup{1, {}});
}
