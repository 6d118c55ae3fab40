#include "coxres/int_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coxres/errors.hpp"

namespace coxres {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (long r = 0; r < m.rows(); ++r) {
    if (static_cast<long>(rows[r].size()) != m.cols())
      throw ParameterError("ragged rows");
    for (long c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Int> IntMatrix::column(long c) const {
  std::vector<Int> v(rows_);
  for (long r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Int> IntMatrix::row(long r) const {
  std::vector<Int> v(cols_);
  for (long c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

IntMatrix IntMatrix::without_columns(const std::vector<long>& drop) const {
  std::set<long> dropped(drop.begin(), drop.end());
  IntMatrix m(rows_, cols_ - static_cast<long>(dropped.size()));
  long out = 0;
  for (long c = 0; c < cols_; ++c) {
    if (dropped.count(c)) continue;
    for (long r = 0; r < rows_; ++r) m.at(r, out) = at(r, c);
    ++out;
  }
  return m;
}

IntMatrix IntMatrix::submatrix(long row0, long col0, long nrows, long ncols) const {
  IntMatrix m(nrows, ncols);
  for (long r = 0; r < nrows; ++r)
    for (long c = 0; c < ncols; ++c) m.at(r, c) = at(row0 + r, col0 + c);
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ParameterError("matrix shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (long r = 0; r < a.rows(); ++r)
    for (long k = 0; k < a.cols(); ++k) {
      if (a.at(r, k) == 0) continue;
      for (long c = 0; c < b.cols(); ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

std::vector<Int> IntMatrix::mul_vector(const std::vector<Int>& v) const {
  if (static_cast<long>(v.size()) != cols_) throw ParameterError("vector length mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw ParameterError("determinant of non-square matrix");
  long n = rows_;
  if (n == 0) return Int(1);
  IntMatrix m(*this);
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      long piv = -1;
      for (long r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Int(0);
      for (long c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
      sign = -sign;
    }
    for (long r = k + 1; r < n; ++r)
      for (long c = k + 1; c < n; ++c) {
        Int v = m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(r, c) = v;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (long r = 0; r < rows_; ++r) {
    for (long c = 0; c < cols_; ++c) {
      if (c) out << " ";
      out << at(r, c).get_str();
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void swap_rows(IntMatrix& m, long i, long j) {
  for (long c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, long i, long j) {
  for (long r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row_i -= q * row_j
void add_row(IntMatrix& m, long i, long j, const Int& q) {
  if (q == 0) return;
  for (long c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
}

void add_col(IntMatrix& m, long i, long j, const Int& q) {
  if (q == 0) return;
  for (long r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
}

void negate_row(IntMatrix& m, long i) {
  for (long c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  if (input.rows() == 0 || input.cols() == 0)
    throw ParameterError("smith normal form of empty matrix");
  IntMatrix s(input);
  IntMatrix left = IntMatrix::identity(s.rows());
  IntMatrix right = IntMatrix::identity(s.cols());
  long n = std::min(s.rows(), s.cols());

  for (long t = 0; t < n; ++t) {
    // Pick the smallest nonzero entry in the remaining block as pivot.
    long pr = -1, pc = -1;
    for (long r = t; r < s.rows(); ++r)
      for (long c = t; c < s.cols(); ++c) {
        if (s.at(r, c) == 0) continue;
        if (pr < 0 || mpz_cmpabs(s.at(r, c).get_mpz_t(), s.at(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    if (pr != t) {
      swap_rows(s, t, pr);
      swap_rows(left, t, pr);
    }
    if (pc != t) {
      swap_cols(s, t, pc);
      swap_cols(right, t, pc);
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (long r = t + 1; r < s.rows(); ++r) {
        if (s.at(r, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s.at(r, t).get_mpz_t(), s.at(t, t).get_mpz_t());
        add_row(s, r, t, q);
        add_row(left, r, t, q);
        if (s.at(r, t) != 0) {
          // Remainder became the smaller pivot; swap it up and restart.
          swap_rows(s, t, r);
          swap_rows(left, t, r);
          dirty = true;
        }
      }
      for (long c = t + 1; c < s.cols(); ++c) {
        if (s.at(t, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s.at(t, c).get_mpz_t(), s.at(t, t).get_mpz_t());
        add_col(s, c, t, q);
        add_col(right, c, t, q);
        if (s.at(t, c) != 0) {
          swap_cols(s, t, c);
          swap_cols(right, t, c);
          dirty = true;
        }
      }
    }

    // Enforce divisibility: fold any entry the pivot does not divide into
    // this pivot position and redo the elimination.
    bool redo = false;
    for (long r = t + 1; r < s.rows() && !redo; ++r)
      for (long c = t + 1; c < s.cols() && !redo; ++c)
        if (s.at(r, c) % s.at(t, t) != 0) {
          add_row(s, t, r, Int(-1));
          add_row(left, t, r, Int(-1));
          redo = true;
        }
    if (redo) {
      --t;
      continue;
    }
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(left, t);
    }
  }
  return {std::move(s), std::move(left), std::move(right)};
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  long n = std::min(s.rows(), s.cols());
  for (long i = 0; i < n; ++i)
    if (s.at(i, i) != 0) f.push_back(s.at(i, i));
  return f;
}

std::vector<Int> cokernel_invariant_factors(const IntMatrix& m) {
  std::vector<Int> out;
  for (const Int& d : smith_normal_form(m).invariant_factors())
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace coxres
