#pragma once

#include <vector>

#include "coxres/int_matrix.hpp"
#include "coxres/resolution.hpp"

namespace coxres {

// The three kernel vectors attached to one branch: alpha is orthogonal to
// the branch (A_i' * alpha = 0, first entry 1); beta and gamma lie in
// ker A_i'' and start (1,0,...) and (1,d,...); gamma = beta + d*alpha'.
struct BranchVectors {
  std::vector<Int> alpha;  // length n_i + 1, ends with p_i
  std::vector<Int> beta;   // length n_i + 2, ends with -q_i
  std::vector<Int> gamma;  // length n_i + 2, ends with d*p_i - q_i
};

std::vector<Int> alpha_vector(const std::vector<Int>& branch);
std::pair<std::vector<Int>, std::vector<Int>> beta_gamma_vectors(const std::vector<Int>& branch,
                                                                 const Int& d);
BranchVectors branch_vectors(const std::vector<Int>& branch, const Int& d);

// 3 x (n+3) integer kernel of U with rows
//   v1 = (1, beta1~, beta2~, gamma3~), v2 = (0, a1, 0, -a3), v3 = (0, 0, a2, -a3).
struct KernelMatrix {
  IntMatrix k;
  long branch_len[3] = {0, 0, 0};

  long column_of(int branch, long j) const;  // j = 0 central, n_i+1 outer
};

KernelMatrix build_K(const ExtendedMatrix& ext, const ResolutionInvariant& inv);

// True iff removing the two adjacent columns leaves columns spanning Z^n
// (all Smith invariant factors 1). The pair is (branch i, positions j, j+1)
// with j = 0 meaning the central column paired with the branch's first.
bool spanning_check(const ExtendedMatrix& ext, int branch, long j);

// All admissible adjacent pairs (branch, j) for spanning_check.
std::vector<std::pair<int, long>> adjacent_column_pairs(const ExtendedMatrix& ext);

}  // namespace coxres
