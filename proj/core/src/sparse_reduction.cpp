#include "fintop/sparse_reduction.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace fintop {

namespace {

constexpr long long kCoeffCap = (1LL << 62);

struct Eliminator {
  long long ncols;
  std::vector<std::vector<std::pair<int, long long>>> rows;
  std::vector<char> live_row;
  std::vector<int> col_cnt;
  // Static CSR of initial column->row incidence plus dynamic appends.
  std::vector<std::size_t> col_off;
  std::vector<int> col_rows_flat;
  std::unordered_map<int, std::vector<int>> col_extra;
  std::vector<char> col_dead;

  std::vector<int> q_rows;  // candidates with nnz <= 1
  std::vector<int> q_cols;  // candidates with col_cnt == 1
  long long rank = 0;
  bool overflow = false;

  explicit Eliminator(long long ncols_, std::vector<SparseRow>&& input) : ncols(ncols_) {
    rows.reserve(input.size());
    for (auto& r : input) {
      // Normalise: sorted by column, duplicates combined, zeros dropped.
      std::sort(r.terms.begin(), r.terms.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      std::vector<std::pair<int, long long>> terms;
      terms.reserve(r.terms.size());
      for (auto& [c, a] : r.terms) {
        if (!terms.empty() && terms.back().first == c)
          terms.back().second += a;
        else
          terms.emplace_back(c, a);
      }
      terms.erase(std::remove_if(terms.begin(), terms.end(),
                                 [](const auto& t) { return t.second == 0; }),
                  terms.end());
      rows.push_back(std::move(terms));
    }
    input.clear();
    input.shrink_to_fit();
    live_row.assign(rows.size(), 1);
    col_cnt.assign(static_cast<std::size_t>(ncols), 0);
    col_dead.assign(static_cast<std::size_t>(ncols), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].empty()) live_row[r] = 0;
      for (auto& [c, a] : rows[r]) ++col_cnt[static_cast<std::size_t>(c)];
    }
    col_off.assign(static_cast<std::size_t>(ncols) + 1, 0);
    for (const auto& row : rows)
      for (auto& [c, a] : row) ++col_off[static_cast<std::size_t>(c) + 1];
    for (std::size_t c = 1; c < col_off.size(); ++c) col_off[c] += col_off[c - 1];
    col_rows_flat.resize(col_off.back());
    std::vector<std::size_t> fill(col_off.begin(), col_off.end() - 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto& [c, a] : rows[r]) col_rows_flat[fill[static_cast<std::size_t>(c)]++] = static_cast<int>(r);

    for (std::size_t r = 0; r < rows.size(); ++r)
      if (live_row[r] && rows[r].size() == 1) q_rows.push_back(static_cast<int>(r));
    for (long long c = 0; c < ncols; ++c)
      if (col_cnt[static_cast<std::size_t>(c)] == 1) q_cols.push_back(static_cast<int>(c));
  }

  template <typename F>
  void for_each_live_row_with(int c, F&& f) {
    for (std::size_t i = col_off[static_cast<std::size_t>(c)]; i < col_off[static_cast<std::size_t>(c) + 1]; ++i) {
      int r = col_rows_flat[i];
      if (live_row[static_cast<std::size_t>(r)] && row_has(r, c)) f(r);
    }
    auto it = col_extra.find(c);
    if (it != col_extra.end())
      for (int r : it->second)
        if (live_row[static_cast<std::size_t>(r)] && row_has(r, c)) f(r);
  }

  bool row_has(int r, int c) const {
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, long long>& t, int col) { return t.first < col; });
    return it != row.end() && it->first == c;
  }

  long long coeff_of(int r, int c) const {
    const auto& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, long long>& t, int col) { return t.first < col; });
    return (it != row.end() && it->first == c) ? it->second : 0;
  }

  void decrement_col(int c) {
    if (--col_cnt[static_cast<std::size_t>(c)] == 1) q_cols.push_back(c);
  }

  void after_row_shrunk(int r) {
    if (rows[static_cast<std::size_t>(r)].size() <= 1) q_rows.push_back(r);
  }

  void kill_row(int r) {
    if (!live_row[static_cast<std::size_t>(r)]) return;
    live_row[static_cast<std::size_t>(r)] = 0;
    for (auto& [c, a] : rows[static_cast<std::size_t>(r)]) decrement_col(c);
    rows[static_cast<std::size_t>(r)].clear();
    rows[static_cast<std::size_t>(r)].shrink_to_fit();
  }

  // Pivot on (r, c) with unit coefficient: clear column c from other rows,
  // then retire the row and the generator.  If an axpy overflows, the pivot
  // is abandoned (already-applied row operations are still valid).
  void unit_pivot(int r, int c) {
    long long a = coeff_of(r, c);
    std::vector<int> others;
    for_each_live_row_with(c, [&](int r2) {
      if (r2 != r) others.push_back(r2);
    });
    for (int r2 : others) {
      long long b = coeff_of(r2, c);
      if (!axpy(r2, r, -b * a)) return;  // a = ±1 so -b*a = -b/a
    }
    col_dead[static_cast<std::size_t>(c)] = 1;
    kill_row(r);
    ++rank;
  }

  // row dst += k * row src, keeping sorted term lists; updates incidence.
  // Returns false (and leaves dst untouched) on coefficient overflow.
  bool axpy(int dst, int src, long long k) {
    if (k == 0) return true;
    const auto& a = rows[static_cast<std::size_t>(dst)];
    const auto& b = rows[static_cast<std::size_t>(src)];
    std::vector<std::pair<int, long long>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i >= a.size() || b[j].first < a[i].first) {
        long long prod;
        if (__builtin_mul_overflow(k, b[j].second, &prod) || prod > kCoeffCap || prod < -kCoeffCap) {
          overflow = true;
          return false;
        }
        out.emplace_back(b[j].first, prod);
        ++j;
      } else {
        long long prod, sum;
        if (__builtin_mul_overflow(k, b[j].second, &prod) ||
            __builtin_add_overflow(a[i].second, prod, &sum) || sum > kCoeffCap || sum < -kCoeffCap) {
          overflow = true;
          return false;
        }
        if (sum != 0) out.emplace_back(a[i].first, sum);
        ++i;
        ++j;
      }
    }
    // Commit: adjust incidence for cancelled and newly filled columns.
    {
      const auto& old = rows[static_cast<std::size_t>(dst)];
      std::size_t oi = 0, ni = 0;
      while (oi < old.size() || ni < out.size()) {
        if (ni >= out.size() || (oi < old.size() && old[oi].first < out[ni].first)) {
          decrement_col(old[oi].first);
          ++oi;
        } else if (oi >= old.size() || out[ni].first < old[oi].first) {
          ++col_cnt[static_cast<std::size_t>(out[ni].first)];
          col_extra[out[ni].first].push_back(dst);
          ++ni;
        } else {
          ++oi;
          ++ni;
        }
      }
    }
    rows[static_cast<std::size_t>(dst)] = std::move(out);
    after_row_shrunk(dst);
    return true;
  }

  void coreduce() {
    while (!q_rows.empty() || !q_cols.empty()) {
      if (!q_rows.empty()) {
        int r = q_rows.back();
        q_rows.pop_back();
        if (!live_row[static_cast<std::size_t>(r)]) continue;
        if (rows[static_cast<std::size_t>(r)].empty()) {
          live_row[static_cast<std::size_t>(r)] = 0;
          continue;
        }
        if (rows[static_cast<std::size_t>(r)].size() != 1) continue;
        auto [c, a] = rows[static_cast<std::size_t>(r)][0];
        if (a == 1 || a == -1) unit_pivot(r, c);
        continue;
      }
      int c = q_cols.back();
      q_cols.pop_back();
      if (col_dead[static_cast<std::size_t>(c)] || col_cnt[static_cast<std::size_t>(c)] != 1) continue;
      int the_row = -1;
      for_each_live_row_with(c, [&](int r2) { the_row = r2; });
      if (the_row < 0) continue;
      long long a = coeff_of(the_row, c);
      if (a == 1 || a == -1) unit_pivot(the_row, c);
    }
  }

  void substitution_phase() {
    using Entry = std::pair<std::size_t, int>;  // (nnz, row)
    while (!overflow) {
      long long rank_before = rank;
      std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (live_row[r]) heap.push({rows[r].size(), static_cast<int>(r)});
      while (!heap.empty() && !overflow) {
        auto [nnz, r] = heap.top();
        heap.pop();
        if (!live_row[static_cast<std::size_t>(r)]) continue;
        if (rows[static_cast<std::size_t>(r)].size() != nnz) {
          heap.push({rows[static_cast<std::size_t>(r)].size(), r});
          continue;
        }
        // Choose a unit-coefficient column minimising fan-out.
        int best_col = -1;
        int best_cnt = std::numeric_limits<int>::max();
        for (auto& [c, a] : rows[static_cast<std::size_t>(r)])
          if ((a == 1 || a == -1) && col_cnt[static_cast<std::size_t>(c)] < best_cnt) {
            best_cnt = col_cnt[static_cast<std::size_t>(c)];
            best_col = c;
          }
        if (best_col < 0) continue;  // no unit entry; leave for the dense stage
        std::vector<int> touched;
        for_each_live_row_with(best_col, [&](int r2) {
          if (r2 != r) touched.push_back(r2);
        });
        unit_pivot(r, best_col);
        coreduce();
        for (int r2 : touched)
          if (live_row[static_cast<std::size_t>(r2)])
            heap.push({rows[static_cast<std::size_t>(r2)].size(), r2});
      }
      if (rank == rank_before) break;
    }
  }

  SparseSummary finish() {
    // Dense Smith normal form on whatever survived.
    std::vector<int> live;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (live_row[r] && !rows[r].empty()) live.push_back(static_cast<int>(r));
    SparseSummary out;
    out.rank = rank;
    if (live.empty()) return out;

    std::unordered_map<int, int> col_map;
    for (int r : live)
      for (auto& [c, a] : rows[static_cast<std::size_t>(r)])
        col_map.emplace(c, static_cast<int>(col_map.size()));
    if (live.size() > 4000 || col_map.size() > 4000)
      throw std::runtime_error("sparse reduction residue too large for dense stage");

    IntMatrix M(static_cast<int>(live.size()), static_cast<int>(col_map.size()));
    for (std::size_t i = 0; i < live.size(); ++i)
      for (auto& [c, a] : rows[static_cast<std::size_t>(live[i])])
        M.at(static_cast<int>(i), col_map[c]) = a;
    SmithResult snf = smith_normal_form(M);
    out.rank += snf.rank();
    out.torsion = snf.torsion();
    return out;
  }
};

}  // namespace

SparseSummary sparse_rank_torsion(long long ncols, std::vector<SparseRow> rows) {
  Eliminator e(ncols, std::move(rows));
  e.coreduce();
  e.substitution_phase();
  return e.finish();
}

}  // namespace fintop
