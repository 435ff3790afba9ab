#include <doctest.h>

#include <set>

#include "fintop/collapse.hpp"
#include "fintop/gadgets.hpp"
#include "oracles.hpp"

using namespace fintop;

TEST_CASE("path_complex") {
  SimplicialComplex p1 = path_complex(1);
  CHECK(p1.vertex_count() == 2);
  CHECK(p1.count_in_dim(1) == 1);

  SimplicialComplex p3 = path_complex(3);
  CHECK(p3.vertex_count() == 4);
  CHECK(p3.count_in_dim(1) == 3);
  CHECK(automorphism_group(p3).size() == 2);

  // P_2 as a pushout of two 1-simplices.
  SimplicialComplex a = SimplicialComplex::from_facets({"u0", "u1"}, {{"u0", "u1"}});
  SimplicialComplex b = SimplicialComplex::from_facets({"u1", "u2"}, {{"u1", "u2"}});
  SimplicialComplex pushout = glue({&a, &b}, {{{0, "u1"}, {1, "u1"}}});
  CHECK(pushout == path_complex(2));

  CHECK_THROWS_AS(path_complex(0), std::invalid_argument);
}

TEST_CASE("w_complex matches the k=2 picture and is rigid and collapsible") {
  SimplicialComplex w2 = w_complex(2);
  CHECK(w2.vertex_count() == 8);
  CHECK(w2.labels() ==
        std::vector<std::string>{"t1", "t2", "t3", "u1", "u2", "v0", "v1", "v2"});
  CHECK(w2.count_in_dim(2) == 1);

  // Oracle check at k = 2, engine thereafter.
  CHECK(oracles::naive_automorphisms(w2).size() == 1);
  for (int k = 2; k <= 6; ++k) {
    SimplicialComplex w = w_complex(k);
    CHECK(automorphism_group(w).size() == 1);
    CHECK(collapse(w));
  }
  CHECK_THROWS_AS(w_complex(1), std::invalid_argument);
}

TEST_CASE("u_complex structure") {
  SimplicialComplex u13 = u_complex(1, 3);
  CHECK(u13.labels() == std::vector<std::string>{"u[1,1]", "w1", "x0", "x1", "y1"});
  CHECK(u13.dimension() == 3);
  CHECK(u13.count_in_dim(3) == 1);

  SimplicialComplex u23 = u_complex(2, 3);
  for (const auto& l : u23.labels()) CHECK(l.find("v[") == std::string::npos);
  // Path of length 2 at w2.
  CHECK(u23.vertex_count() == 4 + 2);

  SimplicialComplex u14 = u_complex(1, 4);
  int v_count = 0, t_count = 0;
  for (const auto& l : u14.labels()) {
    if (l.rfind("v[", 0) == 0) ++v_count;
    if (l.rfind("t[", 0) == 0) ++t_count;
  }
  CHECK(v_count == 1);
  CHECK(t_count == 2);  // the v-path has length i + j = 2, distinct from w's 1

  CHECK_THROWS_AS(u_complex(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(u_complex(0, 3), std::invalid_argument);
}

TEST_CASE("band_complex(3,3) carries the expected vertex roles") {
  BandComplex b = band_complex(3, 3);
  std::set<std::string> labels(b.complex.labels().begin(), b.complex.labels().end());
  for (const char* role : {"x0", "x1", "x2", "x3", "y1", "y2", "y3", "w1", "w2", "w3",
                           "u[1,1]", "u[1,2]", "u[2,2]", "u[1,3]", "u[2,3]", "u[3,3]"})
    CHECK(labels.count(role) == 1);
  CHECK(b.complex.vertex_count() == 16);
  CHECK(b.spine == std::vector<std::string>{"x0", "x1", "x2", "x3"});
  CHECK(b.y_first == "y1");
  CHECK(b.y_last == "y3");
}

TEST_CASE("band automorphisms: order four, generated by the end swaps") {
  BandComplex b = band_complex(2, 3);
  auto auts = automorphism_group(b.complex);
  REQUIRE(auts.size() == 4);

  const SimplicialComplex& K = b.complex;
  auto transposition = [&](const std::string& a, const std::string& bb) {
    SimplicialMap f;
    f.image.resize(static_cast<std::size_t>(K.vertex_count()));
    for (int v = 0; v < K.vertex_count(); ++v) f.image[static_cast<std::size_t>(v)] = v;
    std::swap(f.image[static_cast<std::size_t>(K.index_of(a))],
              f.image[static_cast<std::size_t>(K.index_of(bb))]);
    return f;
  };
  std::set<std::vector<int>> images;
  for (const auto& f : auts) images.insert(f.image);
  CHECK(images.count(transposition("x0", "y1").image) == 1);
  CHECK(images.count(transposition("x2", "y2").image) == 1);
}

TEST_CASE("band suite: collapsibility, aut order 4, trivial y-stabilizer") {
  for (int m : {2, 3}) {
    for (int d : {3, 4}) {
      BandComplex b = band_complex(m, d);
      CHECK(collapse(b.complex));
      auto auts = automorphism_group(b.complex);
      CHECK(auts.size() == 4);
      int y1 = b.complex.index_of(b.y_first);
      int ym = b.complex.index_of(b.y_last);
      int fixing = 0;
      for (const auto& f : auts)
        if (f.image[static_cast<std::size_t>(y1)] == y1 &&
            f.image[static_cast<std::size_t>(ym)] == ym)
          ++fixing;
      CHECK(fixing == 1);
    }
  }
}

TEST_CASE("band membership counts support the rigidification argument") {
  BandComplex b = band_complex(3, 4);
  const SimplicialComplex& K = b.complex;
  auto mv = K.membership_vectors();
  const int top = K.dimension();
  for (int v = 0; v < K.vertex_count(); ++v) {
    const std::string& l = K.label(v);
    int tops = mv[static_cast<std::size_t>(v)][static_cast<std::size_t>(top)];
    int tris = mv[static_cast<std::size_t>(v)][2];
    if (l.rfind("u[", 0) == 0 || l.rfind("t[", 0) == 0) {
      CHECK(tops == 0);
      CHECK(tris == 0);
    } else if (l[0] == 'y' || l.rfind("v[", 0) == 0 || l[0] == 'w') {
      CHECK(tops == 1);
    } else {  // spine
      CHECK(tops >= 1);
    }
  }
}
