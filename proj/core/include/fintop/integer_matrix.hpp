#ifndef FINTOP_INTEGER_MATRIX_HPP
#define FINTOP_INTEGER_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace fintop {

using Int = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const;
  bool is_identity() const;
  std::string to_string() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  void add_row_multiple(int dst, int src, const Int& k);  // row dst += k * row src
  void add_col_multiple(int dst, int src, const Int& k);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// Determinant by fraction-free Bareiss elimination.
Int determinant(const IntMatrix& A);
bool is_unimodular(const IntMatrix& A);

struct SmithResult {
  IntMatrix D;     // D = U * A * V, diagonal with d1 | d2 | ...
  IntMatrix U, V;  // unimodular
  IntMatrix Uinv, Vinv;
  std::vector<Int> diagonal() const;
  int rank() const;
  std::vector<Int> torsion() const;  // diagonal entries > 1
};

// Smith normal form with minimal-absolute-value pivoting; all four transform
// matrices are tracked.
SmithResult smith_normal_form(const IntMatrix& A);

/// Finitely generated abelian group as rank plus invariant factors.
struct AbelianGroup {
  long long rank = 0;
  std::vector<Int> torsion;  // each >= 2, t[i] | t[i+1]

  bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

}  // namespace fintop

#endif
