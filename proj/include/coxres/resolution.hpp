#pragma once

#include <string>
#include <vector>

#include "coxres/group.hpp"
#include "coxres/int_matrix.hpp"

namespace coxres {

// Hirzebruch-Jung continued fraction p/q = a1 - 1/(a2 - 1/(...)), all ai >= 2.
struct HJFraction {
  Int p, q;
  std::vector<Int> entries;
};

HJFraction hjcf_expand(const Int& p, const Int& q);
std::pair<Int, Int> hjcf_value(const std::vector<Int>& entries);

// <d; p1,q1; p2,q2; p3,q3>. Branches are ordered by increasing length of the
// Hirzebruch-Jung expansion (ties by (p, q)); the first branch is always
// (2, 1), a single (-2)-curve.
struct ResolutionInvariant {
  Int d;
  Int p[3], q[3];

  std::vector<Int> branch_entries(int i) const;  // HJ expansion of p_i/q_i
  long branch_length(int i) const;
  long total_curves() const;  // n = n1+n2+n3+1
  std::string to_string() const;

  bool operator==(const ResolutionInvariant& o) const;
};

// Dual graph data: central self-intersection -d and the three chains.
struct ExceptionalGraph {
  Int d;
  std::vector<Int> branches[3];

  long curve_count() const {
    return 1 + static_cast<long>(branches[0].size() + branches[1].size() +
                                 branches[2].size());
  }
};

// n x (n+3) extended intersection matrix with the three unit columns.
struct ExtendedMatrix {
  IntMatrix u;
  long branch_len[3];

  long curve_count() const { return u.rows(); }
  // Column layout: y0; y_{1,1}..y_{1,n1}, x1; y_{2,*}, x2; y_{3,*}, x3.
  long column_of_y0() const { return 0; }
  long column_of_y(int branch, long j) const;  // j = 1..n_i
  long column_of_x(int branch) const;
  // Row layout: E0; branch 1 curves; branch 2; branch 3.
  long row_of_center() const { return 0; }
  long row_of_curve(int branch, long j) const;

  IntMatrix u0() const;  // left n x n block
  std::vector<std::string> column_labels() const;
};

ExceptionalGraph build_graph(const ResolutionInvariant& inv);
ExtendedMatrix build_U(const ExceptionalGraph& graph);

// Structural restrictions on the invariant: n1 = 1 and at least one of the
// second and third branches is (-2), (-2,-2) or (-3).
bool satisfies_remark_constraints(const ResolutionInvariant& inv);

// Du Val dictionary for the m = 1 subgroups of SL(2,C).
ResolutionInvariant du_val_invariant(const GroupSpec& spec);

// Closed-form BD rule: q3 = -m mod n, d = 1 + (m + q3)/n.
ResolutionInvariant bd_invariant(long n, long m);

// Resolution data for a non-cyclic admissible spec. BD uses the closed-form
// rule; BT/BO/BI run a candidate search over d and q_i, filtered by
// r = |Ab(G)|, the cokernel invariant factors, and action-weight matching.
// Throws AmbiguityError when more than one candidate survives.
ResolutionInvariant resolution_invariant(const GroupSpec& spec);

// The raw search, exposed for tests. Filters may be disabled to exercise
// the ambiguity path synthetically.
struct SearchFilters {
  bool match_r = true;
  bool match_cokernel = true;
  bool match_action = true;
  long max_d = -1;  // default m + 3
};
std::vector<ResolutionInvariant> search_resolution_candidates(const GroupSpec& spec,
                                                              const SearchFilters& filters);

}  // namespace coxres
