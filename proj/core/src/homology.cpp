#include "fintop/homology.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace fintop {

ChainComplex chain_complex(const SimplicialComplex& K, int max_dim) {
  if (max_dim < 0) max_dim = K.dimension();
  ChainComplex C;
  C.dim_counts.resize(static_cast<std::size_t>(max_dim) + 1, 0);
  for (int d = 0; d <= max_dim; ++d) C.dim_counts[static_cast<std::size_t>(d)] = K.count_in_dim(d);
  C.boundaries.resize(static_cast<std::size_t>(max_dim) + 1);
  for (int d = 1; d <= max_dim; ++d) {
    IntMatrix M(K.count_in_dim(d - 1), K.count_in_dim(d));
    int lo = K.dim_begin(d), lo_prev = K.dim_begin(d - 1);
    for (int i = lo; i < K.dim_end(d); ++i) {
      const auto& s = K.simplices()[static_cast<std::size_t>(i)];
      std::vector<int> face;
      int sign = 1;
      for (std::size_t j = 0; j < s.size(); ++j) {
        face.assign(s.begin(), s.end());
        face.erase(face.begin() + static_cast<long>(j));
        int fi = K.simplex_index(face);
        M.at(fi - lo_prev, i - lo) = sign;
        sign = -sign;
      }
    }
    C.boundaries[static_cast<std::size_t>(d)] = std::move(M);
  }
  return C;
}

std::vector<SparseRow> boundary_rows(const SimplicialComplex& K, int d_plus_1) {
  std::vector<SparseRow> rows;
  if (d_plus_1 < 1 || d_plus_1 > K.dimension()) return rows;
  const int lo_prev = K.dim_begin(d_plus_1 - 1);
  rows.reserve(static_cast<std::size_t>(K.count_in_dim(d_plus_1)));
  std::vector<int> face;
  for (int i = K.dim_begin(d_plus_1); i < K.dim_end(d_plus_1); ++i) {
    const auto& s = K.simplices()[static_cast<std::size_t>(i)];
    SparseRow row;
    row.terms.reserve(s.size());
    int sign = 1;
    for (std::size_t j = 0; j < s.size(); ++j) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<long>(j));
      row.terms.emplace_back(K.simplex_index(face) - lo_prev, sign);
      sign = -sign;
    }
    std::sort(row.terms.begin(), row.terms.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

long long boundary_rank(const SimplicialComplex& K, int d) {
  if (d < 1 || d > K.dimension()) return 0;
  return sparse_rank_torsion(K.count_in_dim(d - 1), boundary_rows(K, d)).rank;
}

}  // namespace

AbelianGroup homology(const SimplicialComplex& K, int d) {
  if (d < 0) throw std::invalid_argument("negative homology dimension");
  AbelianGroup H;
  if (d > K.dimension()) return H;
  long long n_d = K.count_in_dim(d);
  long long r_d = boundary_rank(K, d);
  SparseSummary up = d + 1 <= K.dimension()
                         ? sparse_rank_torsion(n_d, boundary_rows(K, d + 1))
                         : SparseSummary{};
  H.rank = n_d - r_d - up.rank;
  H.torsion = up.torsion;
  return H;
}

AbelianGroup reduced_homology(const SimplicialComplex& K, int d) {
  AbelianGroup H = homology(K, d);
  if (d == 0 && H.rank > 0) --H.rank;
  return H;
}

std::vector<AbelianGroup> homology_all(const SimplicialComplex& K, int max_dim) {
  // Share boundary ranks between adjacent dimensions.
  std::vector<AbelianGroup> out;
  std::vector<long long> ranks(static_cast<std::size_t>(max_dim) + 2, 0);
  std::vector<std::vector<Int>> torsions(static_cast<std::size_t>(max_dim) + 2);
  for (int d = 1; d <= max_dim + 1; ++d) {
    if (d > K.dimension()) break;
    SparseSummary s = sparse_rank_torsion(K.count_in_dim(d - 1), boundary_rows(K, d));
    ranks[static_cast<std::size_t>(d)] = s.rank;
    torsions[static_cast<std::size_t>(d)] = std::move(s.torsion);
  }
  for (int d = 0; d <= max_dim; ++d) {
    AbelianGroup H;
    if (d <= K.dimension()) {
      H.rank = K.count_in_dim(d) - ranks[static_cast<std::size_t>(d)] -
               ranks[static_cast<std::size_t>(d) + 1];
      H.torsion = torsions[static_cast<std::size_t>(d) + 1];
    }
    out.push_back(std::move(H));
  }
  return out;
}

OrderSkeletonSizes order_complex_two_skeleton_sizes(const FinitePoset& X) {
  OrderSkeletonSizes sz;
  sz.vertices = X.size();
  auto ups = X.strict_upsets();
  for (const auto& u : ups) sz.edges += static_cast<long long>(u.size());
  for (int a = 0; a < X.size(); ++a)
    for (int b : ups[static_cast<std::size_t>(a)])
      sz.triangles += static_cast<long long>(ups[static_cast<std::size_t>(b)].size());
  return sz;
}

long long order_complex_component_count(const FinitePoset& X) {
  if (X.size() == 0) return 0;
  std::vector<int> parent(static_cast<std::size_t>(X.size()));
  for (int p = 0; p < X.size(); ++p) parent[static_cast<std::size_t>(p)] = p;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int p = 0; p < X.size(); ++p)
    for (int q : X.up()[static_cast<std::size_t>(p)]) {
      int a = find(p), b = find(q);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  long long comps = 0;
  for (int p = 0; p < X.size(); ++p)
    if (find(p) == p) ++comps;
  return comps;
}

AbelianGroup order_complex_h1(const FinitePoset& X) {
  // Edges of the order complex are the strictly comparable pairs; triangles
  // are the 3-chains.  H_1 only needs this 2-skeleton.
  auto ups = X.strict_upsets();

  long long n_edges = 0;
  std::vector<long long> edge_offset(static_cast<std::size_t>(X.size()) + 1, 0);
  for (int a = 0; a < X.size(); ++a) {
    edge_offset[static_cast<std::size_t>(a)] = n_edges;
    n_edges += static_cast<long long>(ups[static_cast<std::size_t>(a)].size());
  }
  edge_offset[static_cast<std::size_t>(X.size())] = n_edges;
  // Edge id of (a, b), b in ups[a]: edge_offset[a] + position of b.
  auto edge_id = [&](int a, int b) -> long long {
    const auto& u = ups[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(u.begin(), u.end(), b);
    return edge_offset[static_cast<std::size_t>(a)] + (it - u.begin());
  };

  // rank(del_1) over the comparability graph.
  {
    std::vector<SparseRow> rows;
    rows.reserve(static_cast<std::size_t>(n_edges));
    for (int a = 0; a < X.size(); ++a)
      for (int b : ups[static_cast<std::size_t>(a)]) {
        SparseRow r;
        r.terms = a < b ? std::vector<std::pair<int, long long>>{{a, -1}, {b, 1}}
                        : std::vector<std::pair<int, long long>>{{b, 1}, {a, -1}};
        rows.push_back(std::move(r));
      }
    SparseSummary s1 = sparse_rank_torsion(X.size(), std::move(rows));

    // Triangle rows: del (a<b<c) = (b,c) - (a,c) + (a,b).
    std::vector<SparseRow> rows2;
    for (int a = 0; a < X.size(); ++a)
      for (int b : ups[static_cast<std::size_t>(a)])
        for (int c : ups[static_cast<std::size_t>(b)]) {
          SparseRow r;
          long long e_ab = edge_id(a, b), e_bc = edge_id(b, c), e_ac = edge_id(a, c);
          r.terms.reserve(3);
          r.terms.emplace_back(static_cast<int>(e_ab), 1);
          r.terms.emplace_back(static_cast<int>(e_bc), 1);
          r.terms.emplace_back(static_cast<int>(e_ac), -1);
          std::sort(r.terms.begin(), r.terms.end());
          rows2.push_back(std::move(r));
        }
    if (n_edges > static_cast<long long>(std::numeric_limits<int>::max()))
      throw std::runtime_error("order complex too large");
    SparseSummary s2 = sparse_rank_torsion(n_edges, std::move(rows2));

    AbelianGroup H;
    H.rank = n_edges - s1.rank - s2.rank;
    H.torsion = std::move(s2.torsion);
    return H;
  }
}

}  // namespace fintop
