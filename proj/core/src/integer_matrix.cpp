#include "fintop/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fintop {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix A(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) A.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return A;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  return os.str();
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
      }
    prev = M.at(k, k);
  }
  return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  Int d = determinant(A);
  return d == 1 || d == -1;
}

namespace {

struct Work {
  IntMatrix A, U, V, Uinv, Vinv;

  // Row op on A is mirrored in U (and inverted in Uinv); same for columns.
  void row_swap(int a, int b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void col_swap(int a, int b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
  void row_negate(int r) {
    A.negate_row(r);
    U.negate_row(r);
    Uinv.negate_col(r);
  }
  void row_add(int dst, int src, const Int& k) {
    A.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Uinv.add_col_multiple(src, dst, -k);
  }
  void col_add(int dst, int src, const Int& k) {
    A.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vinv.add_row_multiple(src, dst, -k);
  }
};

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
  Work w;
  w.A = A;
  w.U = IntMatrix::identity(A.rows());
  w.Uinv = IntMatrix::identity(A.rows());
  w.V = IntMatrix::identity(A.cols());
  w.Vinv = IntMatrix::identity(A.cols());

  const int n = A.rows(), m = A.cols();
  int t = 0;
  while (t < n && t < m) {
    // Minimal absolute value pivot in the remaining block; deterministic
    // tie-break by (row, col).
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j) {
        const Int& x = w.A.at(i, j);
        if (x == 0) continue;
        Int ax = int_abs(x);
        if (pr < 0 || ax < best) {
          pr = i;
          pc = j;
          best = ax;
        }
      }
    if (pr < 0) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);
    if (w.A.at(t, t) < 0) w.row_negate(t);

    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      Int q = w.A.at(i, t) / w.A.at(t, t);
      if (q != 0) w.row_add(i, t, -q);
      if (w.A.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      Int q = w.A.at(t, j) / w.A.at(t, t);
      if (q != 0) w.col_add(j, t, -q);
      if (w.A.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repick pivot

    // Enforce divisibility into the remaining block: if the pivot does not
    // divide some entry, fold that row in and redo this stage.
    bool divides = true;
    for (int i = t + 1; i < n && divides; ++i)
      for (int j = t + 1; j < m; ++j)
        if (w.A.at(i, j) % w.A.at(t, t) != 0) {
          w.row_add(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;
    ++t;
  }

  SmithResult res;
  res.D = std::move(w.A);
  res.U = std::move(w.U);
  res.V = std::move(w.V);
  res.Uinv = std::move(w.Uinv);
  res.Vinv = std::move(w.Vinv);
  return res;
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> d;
  for (int i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D.at(i, i));
  return d;
}

int SmithResult::rank() const {
  int r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

std::vector<Int> SmithResult::torsion() const {
  std::vector<Int> t;
  for (const Int& x : diagonal())
    if (x > 1) t.push_back(x);
  return t;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

}  // namespace fintop
