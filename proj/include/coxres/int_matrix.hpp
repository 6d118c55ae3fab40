#pragma once

#include <string>
#include <vector>

#include "coxres/numbers.hpp"

namespace coxres {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(long n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Int& at(long r, long c) { return a_[r * cols_ + c]; }
  const Int& at(long r, long c) const { return a_[r * cols_ + c]; }

  std::vector<Int> column(long c) const;
  std::vector<Int> row(long r) const;

  IntMatrix transposed() const;
  IntMatrix without_columns(const std::vector<long>& drop) const;
  IntMatrix submatrix(long row0, long col0, long nrows, long ncols) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<Int> mul_vector(const std::vector<Int>& v) const;

  // Exact determinant (square only), Bareiss fraction-free elimination.
  Int determinant() const;

  std::string to_string() const;

 private:
  long rows_, cols_;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMatrix s;      // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix left;   // unimodular
  IntMatrix right;  // unimodular, left*m*right == s
  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

// SNF diagonal entries > 1, i.e. the finite cyclic factors of coker(m).
std::vector<Int> cokernel_invariant_factors(const IntMatrix& m);

}  // namespace coxres
