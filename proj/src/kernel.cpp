#include "coxres/kernel.hpp"

#include "coxres/errors.hpp"

namespace coxres {

namespace {

// A vector in ker A'' is determined by its first two entries through the
// recurrence xs_{j+1} = a_j*xs_j - xs_{j-1}, the sign convention of the
// printed kernel matrices.
std::vector<Int> kernel_vector(const std::vector<Int>& branch, Int first, Int second) {
  std::vector<Int> xs;
  xs.push_back(std::move(first));
  xs.push_back(std::move(second));
  while (xs.size() < branch.size() + 2) {
    size_t j = xs.size();
    xs.push_back(branch[j - 2] * xs[j - 1] - xs[j - 2]);
  }
  return xs;
}

}  // namespace

std::vector<Int> alpha_vector(const std::vector<Int>& branch) {
  for (const Int& a : branch)
    if (a < 2) throw ParameterError("branch entries must be >= 2");
  // alpha = (1, z1, ..., z_n), z_k = a_k z_{k-1} - z_{k-2}, z_0 = 1, z_{-1} = 0.
  std::vector<Int> alpha;
  alpha.push_back(Int(1));
  for (size_t k = 0; k < branch.size(); ++k) {
    Int prev2 = k >= 1 ? alpha[k - 1] : Int(0);
    alpha.push_back(branch[k] * alpha[k] - prev2);
  }
  return alpha;
}

std::pair<std::vector<Int>, std::vector<Int>> beta_gamma_vectors(const std::vector<Int>& branch,
                                                                 const Int& d) {
  for (const Int& a : branch)
    if (a < 2) throw ParameterError("branch entries must be >= 2");
  if (d < 2) throw ParameterError("central self-intersection needs d >= 2");
  std::vector<Int> beta = kernel_vector(branch, Int(1), Int(0));
  std::vector<Int> gamma = kernel_vector(branch, Int(1), d);
  return {beta, gamma};
}

BranchVectors branch_vectors(const std::vector<Int>& branch, const Int& d) {
  BranchVectors v;
  v.alpha = alpha_vector(branch);
  auto [beta, gamma] = beta_gamma_vectors(branch, d);
  v.beta = std::move(beta);
  v.gamma = std::move(gamma);
  return v;
}

long KernelMatrix::column_of(int branch, long j) const {
  if (j == 0) return 0;
  long col = 1;
  for (int i = 0; i < branch; ++i) col += branch_len[i] + 1;
  return col + (j - 1);
}

KernelMatrix build_K(const ExtendedMatrix& ext, const ResolutionInvariant& inv) {
  ExceptionalGraph graph = build_graph(inv);
  BranchVectors b1 = branch_vectors(graph.branches[0], inv.d);
  BranchVectors b2 = branch_vectors(graph.branches[1], inv.d);
  BranchVectors b3 = branch_vectors(graph.branches[2], inv.d);

  long cols = ext.u.cols();
  IntMatrix k(3, cols);
  // v1 = (1 | beta1 bar | beta2 bar | gamma3 bar)
  k.at(0, 0) = 1;
  auto put = [&](long row, int branch, const std::vector<Int>& tail) {
    for (size_t j = 0; j < tail.size(); ++j)
      k.at(row, ext.column_of_y(branch, static_cast<long>(j) + 1)) = tail[j];
  };
  put(0, 0, std::vector<Int>(b1.beta.begin() + 1, b1.beta.end()));
  put(0, 1, std::vector<Int>(b2.beta.begin() + 1, b2.beta.end()));
  put(0, 2, std::vector<Int>(b3.gamma.begin() + 1, b3.gamma.end()));
  // v2 = (0 | alpha1 | 0 | -alpha3), v3 = (0 | 0 | alpha2 | -alpha3)
  put(1, 0, b1.alpha);
  put(2, 1, b2.alpha);
  std::vector<Int> neg3(b3.alpha);
  for (Int& v : neg3) v = -v;
  put(1, 2, neg3);
  put(2, 2, neg3);

  KernelMatrix result;
  result.k = std::move(k);
  for (int i = 0; i < 3; ++i) result.branch_len[i] = ext.branch_len[i];
  // Kernel correctness is asserted, not assumed.
  if (!(ext.u * result.k.transposed()).is_zero())
    throw InconsistencyError("U * K^t != 0");
  return result;
}

std::vector<std::pair<int, long>> adjacent_column_pairs(const ExtendedMatrix& ext) {
  std::vector<std::pair<int, long>> pairs;
  for (int i = 0; i < 3; ++i)
    for (long j = 0; j <= ext.branch_len[i]; ++j) pairs.emplace_back(i, j);
  return pairs;
}

bool spanning_check(const ExtendedMatrix& ext, int branch, long j) {
  if (branch < 0 || branch > 2) throw ParameterError("branch index out of range");
  if (j < 0 || j > ext.branch_len[branch])
    throw ParameterError("columns are not an adjacent pair on one branch");
  long c1 = j == 0 ? ext.column_of_y0() : ext.column_of_y(branch, j);
  long c2 = ext.column_of_y(branch, j + 1);  // j+1 = n_i+1 is the x column
  IntMatrix rest = ext.u.without_columns({c1, c2});
  for (const Int& f : smith_normal_form(rest).invariant_factors())
    if (f != 1) return false;
  return true;
}

}  // namespace coxres
