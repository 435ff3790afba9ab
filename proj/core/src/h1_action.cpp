#include "fintop/h1_action.hpp"

#include <algorithm>
#include <stdexcept>

#include "fintop/homology.hpp"

namespace fintop {

namespace {

Int mod_norm(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

H1Basis::H1Basis(const SimplicialComplex& K) : K_(K) {
  if (K.vertex_count() > 4000 || K.count_in_dim(1) > 6000)
    throw std::invalid_argument("H1Basis is a desk-scale construction (complex too large)");
  edge_lo_ = K.dim_begin(1);
  n_edges_ = K.count_in_dim(1);
  ChainComplex C = chain_complex(K, std::min(2, std::max(1, K.dimension())));

  IntMatrix del1 = K.dimension() >= 1 ? C.boundaries[1] : IntMatrix(K.vertex_count(), 0);
  SmithResult s1 = smith_normal_form(del1);
  rank1_ = s1.rank();
  const int z = n_edges_ - rank1_;
  kernel_basis_ = IntMatrix(n_edges_, z);
  for (int c = 0; c < z; ++c)
    for (int r = 0; r < n_edges_; ++r) kernel_basis_.at(r, c) = s1.V.at(r, rank1_ + c);
  v1inv_ = std::move(s1.Vinv);

  int n2 = K.dimension() >= 2 ? K.count_in_dim(2) : 0;
  IntMatrix X(z, n2);
  if (n2 > 0) {
    const IntMatrix& del2 = C.boundaries[2];
    for (int j = 0; j < n2; ++j) {
      // Tail coordinates of V1^{-1} * del2 column j.
      for (int i = 0; i < z; ++i) {
        Int acc = 0;
        for (int e = 0; e < n_edges_; ++e) acc += v1inv_.at(rank1_ + i, e) * del2.at(e, j);
        X.at(i, j) = acc;
      }
    }
  }
  SmithResult s2 = smith_normal_form(X);
  diag2_.assign(static_cast<std::size_t>(z), 0);
  for (int i = 0; i < z && i < n2; ++i) diag2_[static_cast<std::size_t>(i)] = s2.D.at(i, i);
  u2_ = std::move(s2.U);
  u2inv_ = std::move(s2.Uinv);

  int r2 = 0;
  for (const Int& d : diag2_)
    if (d != 0) ++r2;
  for (int i = 0; i < z; ++i)
    if (diag2_[static_cast<std::size_t>(i)] > 1) {
      coord_pos_.push_back(i);
      group_.torsion.push_back(diag2_[static_cast<std::size_t>(i)]);
    }
  for (int i = r2; i < z; ++i) coord_pos_.push_back(i);
  group_.rank = z - r2;
}

std::vector<Int> H1Basis::cycle_coords(const std::vector<Int>& cycle) const {
  const int z = kernel_basis_.cols();
  // y = tail of V1^{-1} * cycle; head must vanish for genuine cycles.
  std::vector<Int> y(static_cast<std::size_t>(z));
  for (int i = 0; i < rank1_; ++i) {
    Int acc = 0;
    for (int e = 0; e < n_edges_; ++e) acc += v1inv_.at(i, e) * cycle[static_cast<std::size_t>(e)];
    if (acc != 0) throw std::runtime_error("vector is not a 1-cycle");
  }
  for (int i = 0; i < z; ++i) {
    Int acc = 0;
    for (int e = 0; e < n_edges_; ++e)
      acc += v1inv_.at(rank1_ + i, e) * cycle[static_cast<std::size_t>(e)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  // h = U2 * y, then read the torsion/free coordinate positions.
  std::vector<Int> h(static_cast<std::size_t>(z));
  for (int i = 0; i < z; ++i) {
    Int acc = 0;
    for (int j = 0; j < z; ++j) acc += u2_.at(i, j) * y[static_cast<std::size_t>(j)];
    h[static_cast<std::size_t>(i)] = acc;
  }
  std::vector<Int> coords;
  coords.reserve(coord_pos_.size());
  for (std::size_t k = 0; k < coord_pos_.size(); ++k) {
    int pos = coord_pos_[k];
    const Int& d = diag2_[static_cast<std::size_t>(pos)];
    coords.push_back(d > 1 ? mod_norm(h[static_cast<std::size_t>(pos)], d)
                           : h[static_cast<std::size_t>(pos)]);
  }
  return coords;
}

IntMatrix H1Basis::action_matrix(const SimplicialMap& f) const {
  if (!is_automorphism(K_, f)) throw std::invalid_argument("map is not an automorphism");
  const int z = kernel_basis_.cols();
  const int m = static_cast<int>(coord_pos_.size());
  IntMatrix M(m, m);
  for (int j = 0; j < m; ++j) {
    // Lift basis element j to a cycle.
    std::vector<Int> y(static_cast<std::size_t>(z));
    for (int i = 0; i < z; ++i) y[static_cast<std::size_t>(i)] = u2inv_.at(i, coord_pos_[static_cast<std::size_t>(j)]);
    std::vector<Int> cycle(static_cast<std::size_t>(n_edges_));
    for (int e = 0; e < n_edges_; ++e) {
      Int acc = 0;
      for (int i = 0; i < z; ++i) acc += kernel_basis_.at(e, i) * y[static_cast<std::size_t>(i)];
      cycle[static_cast<std::size_t>(e)] = acc;
    }
    // Push through the chain map of f.
    std::vector<Int> image(static_cast<std::size_t>(n_edges_));
    for (int e = 0; e < n_edges_; ++e) {
      const Int& c = cycle[static_cast<std::size_t>(e)];
      if (c == 0) continue;
      const auto& edge = K_.simplices()[static_cast<std::size_t>(edge_lo_ + e)];
      int a = f.image[static_cast<std::size_t>(edge[0])];
      int b = f.image[static_cast<std::size_t>(edge[1])];
      int sign = 1;
      if (a > b) {
        std::swap(a, b);
        sign = -1;
      }
      int target = K_.simplex_index({a, b});
      image[static_cast<std::size_t>(target - edge_lo_)] += sign * c;
    }
    std::vector<Int> coords = cycle_coords(image);
    for (int i = 0; i < m; ++i) M.at(i, j) = coords[static_cast<std::size_t>(i)];
  }
  return M;
}

IntMatrix induced_h1_action(const SimplicialComplex& K, const SimplicialMap& f) {
  return H1Basis(K).action_matrix(f);
}

AbelianizedAction abelianized_action(const GroupAction& action) {
  action.validate();
  const int n = static_cast<int>(action.target.generators.size());
  SmithResult snf = smith_normal_form(action.target.relator_matrix_transposed());
  const int rank = snf.rank();

  std::vector<int> coord_pos;
  std::vector<Int> diag(static_cast<std::size_t>(n), 0);
  auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) diag[i] = d[i];
  AbelianizedAction out;
  for (int i = 0; i < n; ++i)
    if (diag[static_cast<std::size_t>(i)] > 1) {
      coord_pos.push_back(i);
      out.group.torsion.push_back(diag[static_cast<std::size_t>(i)]);
    }
  for (int i = rank; i < n; ++i) coord_pos.push_back(i);
  out.group.rank = n - rank;

  const int m = static_cast<int>(coord_pos.size());
  for (int g = 0; g < action.group.order(); ++g) {
    IntMatrix Ng = snf.U * action.abelianized_matrix(g) * snf.Uinv;
    IntMatrix M(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Int v = Ng.at(coord_pos[static_cast<std::size_t>(i)], coord_pos[static_cast<std::size_t>(j)]);
        const Int& di = diag[static_cast<std::size_t>(coord_pos[static_cast<std::size_t>(i)])];
        M.at(i, j) = di > 1 ? mod_norm(v, di) : v;
      }
    out.matrices.push_back(std::move(M));
  }
  return out;
}

namespace {

struct EquivalenceSearcher {
  const std::vector<IntMatrix>& A;
  const std::vector<IntMatrix>& B;
  const AbelianGroup& coeff;
  long long bound;
  int k, r, m;
  std::vector<Int> mods;  // per coordinate: torsion modulus or 0

  bool commutes(const IntMatrix& U) const {
    for (std::size_t g = 0; g < A.size(); ++g) {
      IntMatrix L = U * A[g];
      IntMatrix R = B[g] * U;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Int diff = L.at(i, j) - R.at(i, j);
          if (mods[static_cast<std::size_t>(i)] > 0) {
            if (diff % mods[static_cast<std::size_t>(i)] != 0) return false;
          } else if (diff != 0) {
            return false;
          }
        }
    }
    return true;
  }

  bool torsion_block_wellformed(const IntMatrix& U) const {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Int prod = U.at(i, j) * coeff.torsion[static_cast<std::size_t>(j)];
        if (prod % coeff.torsion[static_cast<std::size_t>(i)] != 0) return false;
      }
    return true;
  }

  bool torsion_part_bijective(const IntMatrix& U) const {
    // Enumerate the torsion subgroup and check the induced map is injective.
    long long size = 1;
    for (const Int& t : coeff.torsion) {
      size *= t.convert_to<long long>();
      if (size > 2000000) throw std::runtime_error("torsion subgroup too large for search");
    }
    std::vector<std::vector<long long>> images;
    std::vector<long long> elem(static_cast<std::size_t>(k), 0);
    images.reserve(static_cast<std::size_t>(size));
    for (long long idx = 0; idx < size; ++idx) {
      std::vector<long long> img(static_cast<std::size_t>(k), 0);
      for (int i = 0; i < k; ++i) {
        Int acc = 0;
        for (int j = 0; j < k; ++j) acc += U.at(i, j) * elem[static_cast<std::size_t>(j)];
        img[static_cast<std::size_t>(i)] =
            mod_norm(acc, coeff.torsion[static_cast<std::size_t>(i)]).convert_to<long long>();
      }
      images.push_back(std::move(img));
      for (int j = k - 1; j >= 0; --j) {
        if (++elem[static_cast<std::size_t>(j)] <
            coeff.torsion[static_cast<std::size_t>(j)].convert_to<long long>())
          break;
        elem[static_cast<std::size_t>(j)] = 0;
      }
    }
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
  }
};

}  // namespace

ActionEquivalence actions_equivalent(const std::vector<IntMatrix>& A,
                                     const std::vector<IntMatrix>& B,
                                     const AbelianGroup& coefficients,
                                     const ActionEquivalenceOptions& opts) {
  const int k = static_cast<int>(coefficients.torsion.size());
  const int r = static_cast<int>(coefficients.rank);
  const int m = k + r;
  if (A.size() != B.size()) throw std::invalid_argument("action families have different sizes");
  for (const auto& mat : A)
    if (mat.rows() != m || mat.cols() != m)
      throw std::invalid_argument("action matrix shape does not match coefficient group");
  for (const auto& mat : B)
    if (mat.rows() != m || mat.cols() != m)
      throw std::invalid_argument("action matrix shape does not match coefficient group");

  EquivalenceSearcher S{A, B, coefficients, opts.free_entry_bound, k, r, m, {}};
  S.mods.resize(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < k; ++i) S.mods[static_cast<std::size_t>(i)] = coefficients.torsion[static_cast<std::size_t>(i)];

  if (m == 0) return ActionEquivalence::Equivalent;
  if (S.commutes(IntMatrix::identity(m))) return ActionEquivalence::Equivalent;

  // Enumerate U = [[T, Q], [0, P]] with T an automorphism of the torsion
  // part, Q arbitrary mod torsion, P unimodular with bounded entries.
  std::vector<long long> limits;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k + r; ++j)
      limits.push_back(coefficients.torsion[static_cast<std::size_t>(i)].convert_to<long long>());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) limits.push_back(2 * opts.free_entry_bound + 1);

  long long combos = 1;
  for (long long l : limits) {
    combos *= l;
    if (combos > 2000000LL) throw std::runtime_error("actions_equivalent search space too large");
  }

  bool searched_exhaustively = (r <= 1);
  std::vector<long long> odo(limits.size(), 0);
  for (long long it = 0; it < combos; ++it) {
    IntMatrix U(m, m);
    std::size_t idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k + r; ++j) U.at(i, j) = odo[idx++];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) U.at(k + i, k + j) = odo[idx++] - opts.free_entry_bound;

    bool ok = true;
    if (r > 0) {
      IntMatrix P(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) P.at(i, j) = U.at(k + i, k + j);
      ok = is_unimodular(P);
    }
    if (ok && k > 0) ok = S.torsion_block_wellformed(U) && S.torsion_part_bijective(U);
    if (ok && S.commutes(U)) return ActionEquivalence::Equivalent;

    for (std::size_t j = odo.size(); j-- > 0;) {
      if (++odo[j] < limits[j]) break;
      odo[j] = 0;
    }
  }
  return searched_exhaustively ? ActionEquivalence::NotEquivalent : ActionEquivalence::Inconclusive;
}

}  // namespace fintop
