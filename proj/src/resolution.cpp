#include "coxres/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "coxres/errors.hpp"

namespace coxres {

HJFraction hjcf_expand(const Int& p, const Int& q) {
  if (!(q > 0 && q < p)) throw ParameterError("hjcf_expand needs 0 < q < p");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw ParameterError("hjcf_expand needs gcd(p, q) = 1");
  HJFraction f{p, q, {}};
  Int a = p, b = q;
  while (b > 0) {
    // ceil(a/b), then a/b = c - 1/(b/(c*b - a)) continues the expansion.
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    f.entries.push_back(c);
    Int next = c * b - a;
    a = b;
    b = next;
  }
  return f;
}

std::pair<Int, Int> hjcf_value(const std::vector<Int>& entries) {
  for (const Int& a : entries)
    if (a < 2) throw ParameterError("hjcf entries must be >= 2");
  // Evaluate [a_1, ..., a_k] from the right: value = a - 1/prev.
  Int num(1), den(0);  // "1/0": empty tail
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    Int new_num = *it * num - den;
    den = num;
    num = new_num;
  }
  return {num, den};
}

std::vector<Int> ResolutionInvariant::branch_entries(int i) const {
  return hjcf_expand(p[i], q[i]).entries;
}

long ResolutionInvariant::branch_length(int i) const {
  return static_cast<long>(branch_entries(i).size());
}

long ResolutionInvariant::total_curves() const {
  return 1 + branch_length(0) + branch_length(1) + branch_length(2);
}

std::string ResolutionInvariant::to_string() const {
  std::ostringstream out;
  out << "<" << d.get_str();
  for (int i = 0; i < 3; ++i) out << "; " << p[i].get_str() << "," << q[i].get_str();
  out << ">";
  return out.str();
}

bool ResolutionInvariant::operator==(const ResolutionInvariant& o) const {
  if (d != o.d) return false;
  for (int i = 0; i < 3; ++i)
    if (p[i] != o.p[i] || q[i] != o.q[i]) return false;
  return true;
}

ExceptionalGraph build_graph(const ResolutionInvariant& inv) {
  ExceptionalGraph g;
  g.d = inv.d;
  for (int i = 0; i < 3; ++i) g.branches[i] = inv.branch_entries(i);
  return g;
}

long ExtendedMatrix::column_of_y(int branch, long j) const {
  long col = 1;
  for (int i = 0; i < branch; ++i) col += branch_len[i] + 1;
  return col + (j - 1);
}

long ExtendedMatrix::column_of_x(int branch) const {
  return column_of_y(branch, branch_len[branch] + 1);
}

long ExtendedMatrix::row_of_curve(int branch, long j) const {
  long row = 1;
  for (int i = 0; i < branch; ++i) row += branch_len[i];
  return row + (j - 1);
}

IntMatrix ExtendedMatrix::u0() const {
  long n = curve_count();
  IntMatrix m(n, n);
  std::vector<long> keep;
  for (int i = 0; i < 3; ++i)
    for (long j = 1; j <= branch_len[i]; ++j) keep.push_back(column_of_y(i, j));
  for (long r = 0; r < n; ++r) {
    m.at(r, 0) = u.at(r, 0);
    for (size_t k = 0; k < keep.size(); ++k) m.at(r, k + 1) = u.at(r, keep[k]);
  }
  return m;
}

std::vector<std::string> ExtendedMatrix::column_labels() const {
  std::vector<std::string> labels = {"y0"};
  for (int i = 0; i < 3; ++i) {
    for (long j = 1; j <= branch_len[i]; ++j)
      labels.push_back("y" + std::to_string(i + 1) + "," + std::to_string(j));
    labels.push_back("x" + std::to_string(i + 1));
  }
  return labels;
}

ExtendedMatrix build_U(const ExceptionalGraph& graph) {
  ExtendedMatrix ext;
  for (int i = 0; i < 3; ++i) ext.branch_len[i] = static_cast<long>(graph.branches[i].size());
  long n = graph.curve_count();
  ext.u = IntMatrix(n, n + 3);
  ext.u.at(0, 0) = -graph.d;
  for (int i = 0; i < 3; ++i) {
    long len = ext.branch_len[i];
    // E0 meets the first curve of every branch.
    ext.u.at(0, ext.column_of_y(i, 1)) = 1;
    ext.u.at(ext.row_of_curve(i, 1), 0) = 1;
    for (long j = 1; j <= len; ++j) {
      long row = ext.row_of_curve(i, j);
      ext.u.at(row, ext.column_of_y(i, j)) = -graph.branches[i][j - 1];
      if (j > 1) ext.u.at(row, ext.column_of_y(i, j - 1)) = 1;
      if (j < len) ext.u.at(row, ext.column_of_y(i, j + 1)) = 1;
    }
    // Unit column for x_i next to the last curve of the branch.
    ext.u.at(ext.row_of_curve(i, len), ext.column_of_x(i)) = 1;
  }
  return ext;
}

bool satisfies_remark_constraints(const ResolutionInvariant& inv) {
  if (!(inv.p[0] == 2 && inv.q[0] == 1)) return false;
  auto small_chain = [](const std::vector<Int>& entries) {
    if (entries.size() == 1) return entries[0] == 2 || entries[0] == 3;
    if (entries.size() == 2) return entries[0] == 2 && entries[1] == 2;
    return false;
  };
  return small_chain(inv.branch_entries(1)) || small_chain(inv.branch_entries(2));
}

ResolutionInvariant du_val_invariant(const GroupSpec& spec) {
  spec.check_admissible();
  if (spec.m != 1) throw ParameterError("du_val_invariant needs m = 1");
  ResolutionInvariant inv;
  inv.d = 2;
  switch (spec.family) {
    case GroupFamily::BD:
      inv.p[0] = 2, inv.q[0] = 1;
      inv.p[1] = 2, inv.q[1] = 1;
      inv.p[2] = spec.n, inv.q[2] = spec.n - 1;
      break;
    case GroupFamily::BT:
      inv.p[0] = 2, inv.q[0] = 1;
      inv.p[1] = 3, inv.q[1] = 2;
      inv.p[2] = 3, inv.q[2] = 2;
      break;
    case GroupFamily::BO:
      inv.p[0] = 2, inv.q[0] = 1;
      inv.p[1] = 3, inv.q[1] = 2;
      inv.p[2] = 4, inv.q[2] = 3;
      break;
    case GroupFamily::BI:
      inv.p[0] = 2, inv.q[0] = 1;
      inv.p[1] = 3, inv.q[1] = 2;
      inv.p[2] = 5, inv.q[2] = 4;
      break;
    default:
      throw ParameterError("du_val_invariant: not a binary polyhedral family");
  }
  return inv;
}

ResolutionInvariant bd_invariant(long n, long m) {
  GroupSpec::bd(n, m).check_admissible();
  long q3 = (n - m % n) % n;
  if (q3 == 0) throw InconsistencyError("BD rule gave q3 = 0");
  ResolutionInvariant inv;
  inv.d = Int(1 + (m + q3) / n);
  inv.p[0] = 2, inv.q[0] = 1;
  inv.p[1] = 2, inv.q[1] = 1;
  inv.p[2] = n, inv.q[2] = q3;
  return inv;
}

}  // namespace coxres
