#include "coxres/errors.hpp"
#include "coxres/kernel.hpp"
#include "coxres/resolution.hpp"
#include "doctest.h"

using namespace coxres;

namespace {

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

ResolutionInvariant make_inv(long d, std::vector<std::pair<long, long>> pq) {
  ResolutionInvariant inv;
  inv.d = d;
  for (int i = 0; i < 3; ++i) {
    inv.p[i] = pq[i].first;
    inv.q[i] = pq[i].second;
  }
  return inv;
}

// Golden matrices as printed.
const std::vector<std::vector<Int>> kUBI = {
    ints({-2, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0}), ints({1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0}),
    ints({1, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0}), ints({0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0}),
    ints({1, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0}), ints({0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0}),
    ints({0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0}), ints({0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1})};

const std::vector<std::vector<Int>> kKBI = {
    ints({1, 0, -1, 0, -1, -2, 2, 3, 4, 5, 6}),
    ints({0, 1, 2, 0, 0, 0, -1, -2, -3, -4, -5}),
    ints({0, 0, 0, 1, 2, 3, -1, -2, -3, -4, -5})};

const std::vector<std::vector<Int>> kUBD2339 = {
    ints({-3, 1, 0, 1, 0, 1, 0, 0, 0, 0}), ints({1, -2, 1, 0, 0, 0, 0, 0, 0, 0}),
    ints({1, 0, 0, -2, 1, 0, 0, 0, 0, 0}), ints({1, 0, 0, 0, 0, -4, 1, 0, 0, 0}),
    ints({0, 0, 0, 0, 0, 1, -2, 1, 0, 0}), ints({0, 0, 0, 0, 0, 0, 1, -2, 1, 0}),
    ints({0, 0, 0, 0, 0, 0, 0, 1, -3, 1})};

const std::vector<std::vector<Int>> kKBD2339 = {
    ints({1, 0, -1, 0, -1, 3, 11, 19, 27, 62}),
    ints({0, 1, 2, 0, 0, -1, -4, -7, -10, -23}),
    ints({0, 0, 0, 1, 2, -1, -4, -7, -10, -23})};

}  // namespace

TEST_CASE("hjcf expansion") {
  CHECK(hjcf_expand(Int(23), Int(7)).entries == ints({4, 2, 2, 3}));
  CHECK(hjcf_expand(Int(2), Int(1)).entries == ints({2}));
  CHECK(hjcf_expand(Int(5), Int(4)).entries == ints({2, 2, 2, 2}));
  CHECK_THROWS_AS(hjcf_expand(Int(6), Int(2)), ParameterError);
  CHECK_THROWS_AS(hjcf_expand(Int(3), Int(4)), ParameterError);
}

TEST_CASE("hjcf value") {
  CHECK(hjcf_value(ints({4, 2, 2, 3})) == std::pair<Int, Int>(Int(23), Int(7)));
  CHECK(hjcf_value(ints({2})) == std::pair<Int, Int>(Int(2), Int(1)));
  // 3 - 1/2 = 5/2 by direct evaluation
  CHECK(hjcf_value(ints({3, 2})) == std::pair<Int, Int>(Int(5), Int(2)));
  CHECK_THROWS_AS(hjcf_value(ints({2, 1})), ParameterError);
}

TEST_CASE("hjcf round trip for all coprime pairs p <= 200") {
  for (long p = 2; p <= 200; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd_long(p, q) != 1) continue;
      HJFraction f = hjcf_expand(Int(p), Int(q));
      for (const Int& a : f.entries) REQUIRE(a >= 2);
      auto [pp, qq] = hjcf_value(f.entries);
      REQUIRE(pp == p);
      REQUIRE(qq == q);
    }
}

TEST_CASE("reversal duality: expansion of p/q' is the reverse of p/q") {
  for (long p = 2; p <= 60; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd_long(p, q) != 1) continue;
      long qp = 0;
      for (long t = 1; t < p; ++t)
        if ((t * q) % p == 1) qp = t;
      auto fwd = hjcf_expand(Int(p), Int(q)).entries;
      auto rev = hjcf_expand(Int(p), Int(qp)).entries;
      std::reverse(rev.begin(), rev.end());
      REQUIRE(fwd == rev);
    }
}

TEST_CASE("closed-form BD invariants") {
  CHECK(bd_invariant(23, 39) == make_inv(3, {{2, 1}, {2, 1}, {23, 7}}));
  CHECK(bd_invariant(2, 7) == make_inv(5, {{2, 1}, {2, 1}, {2, 1}}));
  CHECK(bd_invariant(2, 1) == make_inv(2, {{2, 1}, {2, 1}, {2, 1}}));
  // m = 1 reduces to the Du Val dictionary entry D_{n+2}
  CHECK(bd_invariant(5, 1) == du_val_invariant(GroupSpec::bd(5, 1)));
}

TEST_CASE("du val dictionary") {
  CHECK(du_val_invariant(GroupSpec::bi(1)) == make_inv(2, {{2, 1}, {3, 2}, {5, 4}}));
  CHECK(du_val_invariant(GroupSpec::bo(1)) == make_inv(2, {{2, 1}, {3, 2}, {4, 3}}));
  CHECK(du_val_invariant(GroupSpec::bt(1)) == make_inv(2, {{2, 1}, {3, 2}, {3, 2}}));
  // all self-intersections are -2
  for (GroupSpec spec : {GroupSpec::bt(1), GroupSpec::bo(1), GroupSpec::bi(1)}) {
    ResolutionInvariant inv = du_val_invariant(spec);
    CHECK(inv.d == 2);
    for (int i = 0; i < 3; ++i)
      for (const Int& a : inv.branch_entries(i)) CHECK(a == 2);
  }
}

TEST_CASE("build_graph") {
  ResolutionInvariant inv = make_inv(3, {{2, 1}, {2, 1}, {23, 7}});
  ExceptionalGraph g = build_graph(inv);
  CHECK(g.branches[0] == ints({2}));
  CHECK(g.branches[1] == ints({2}));
  CHECK(g.branches[2] == ints({4, 2, 2, 3}));
  CHECK(g.curve_count() == 7);

  ExceptionalGraph d4 = build_graph(make_inv(2, {{2, 1}, {2, 1}, {2, 1}}));
  CHECK(d4.curve_count() == 4);

  ExceptionalGraph e8 = build_graph(make_inv(2, {{2, 1}, {3, 2}, {5, 4}}));
  CHECK(e8.curve_count() == 8);
}

TEST_CASE("build_U golden matrices") {
  ExtendedMatrix ubi = build_U(build_graph(make_inv(2, {{2, 1}, {3, 2}, {5, 4}})));
  CHECK(ubi.u == IntMatrix::from_rows(kUBI));

  ExtendedMatrix ubd = build_U(build_graph(make_inv(3, {{2, 1}, {2, 1}, {23, 7}})));
  CHECK(ubd.u == IntMatrix::from_rows(kUBD2339));

  ExtendedMatrix ud4 = build_U(build_graph(make_inv(2, {{2, 1}, {2, 1}, {2, 1}})));
  CHECK(ud4.u.rows() == 4);
  CHECK(ud4.u.cols() == 7);
  CHECK(ud4.u.row(0) == ints({-2, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("U0 is symmetric negative definite with |det| = |Ab|") {
  for (auto [inv, ab] : std::vector<std::pair<ResolutionInvariant, long>>{
           {make_inv(2, {{2, 1}, {3, 2}, {5, 4}}), 1},
           {make_inv(3, {{2, 1}, {2, 1}, {23, 7}}), 156},
           {make_inv(2, {{2, 1}, {2, 1}, {2, 1}}), 4}}) {
    ExtendedMatrix ext = build_U(build_graph(inv));
    IntMatrix u0 = ext.u0();
    CHECK(u0 == u0.transposed());
    // negative definiteness via alternating leading principal minors
    for (long k = 1; k <= u0.rows(); ++k) {
      Int minor = u0.submatrix(0, 0, k, k).determinant();
      CHECK((k % 2 == 0 ? minor > 0 : minor < 0));
    }
    Int det = u0.determinant();
    if (det < 0) det = -det;
    CHECK(det == ab);
  }
}

TEST_CASE("alpha vectors") {
  CHECK(alpha_vector(ints({4, 2, 2, 3})) == ints({1, 4, 7, 10, 23}));
  CHECK(alpha_vector(ints({2})) == ints({1, 2}));
  CHECK(alpha_vector(ints({2, 2, 2, 2})) == ints({1, 2, 3, 4, 5}));
}

TEST_CASE("beta and gamma vectors") {
  auto [b1, g1] = beta_gamma_vectors(ints({4, 2, 2, 3}), Int(3));
  CHECK(b1 == ints({1, 0, -1, -2, -3, -7}));
  CHECK(g1 == ints({1, 3, 11, 19, 27, 62}));

  auto [b2, g2] = beta_gamma_vectors(ints({2}), Int(2));
  CHECK(b2 == ints({1, 0, -1}));
  CHECK(g2 == ints({1, 2, 3}));

  auto [b3, g3] = beta_gamma_vectors(ints({2, 2}), Int(2));
  CHECK(b3 == ints({1, 0, -1, -2}));
  CHECK(g3 == ints({1, 2, 3, 4}));
}

TEST_CASE("branch vector invariants") {
  for (auto [branch, d] : std::vector<std::pair<std::vector<Int>, long>>{
           {ints({4, 2, 2, 3}), 3}, {ints({2}), 2}, {ints({3, 2}), 4}, {ints({2, 2, 2, 2}), 2}}) {
    BranchVectors v = branch_vectors(branch, Int(d));
    auto [p, q] = hjcf_value(branch);
    CHECK(v.alpha.front() == 1);
    for (size_t i = 1; i < v.alpha.size(); ++i) CHECK(v.alpha[i] > v.alpha[i - 1]);
    CHECK(v.alpha.back() == p);
    CHECK(v.beta[0] == 1);
    CHECK(v.beta[1] == 0);
    for (size_t i = 1; i + 1 < v.beta.size(); ++i) CHECK(v.beta[i + 1] <= v.beta[i]);
    CHECK(v.beta.back() == -q);
    CHECK(v.gamma[0] == 1);
    CHECK(v.gamma[1] == d);
    for (size_t i = 1; i + 1 < v.gamma.size(); ++i) CHECK(v.gamma[i + 1] > v.gamma[i]);
    CHECK(v.gamma.back() == Int(d) * p - q);
    // gamma = beta + d * (0, alpha)
    for (size_t i = 1; i < v.gamma.size(); ++i)
      CHECK(v.gamma[i] == v.beta[i] + Int(d) * v.alpha[i - 1]);
  }
}

TEST_CASE("build_K golden matrices") {
  ResolutionInvariant bi = make_inv(2, {{2, 1}, {3, 2}, {5, 4}});
  ExtendedMatrix ubi = build_U(build_graph(bi));
  CHECK(build_K(ubi, bi).k == IntMatrix::from_rows(kKBI));

  ResolutionInvariant bd = make_inv(3, {{2, 1}, {2, 1}, {23, 7}});
  ExtendedMatrix ubd = build_U(build_graph(bd));
  CHECK(build_K(ubd, bd).k == IntMatrix::from_rows(kKBD2339));

  ResolutionInvariant d4 = make_inv(2, {{2, 1}, {2, 1}, {2, 1}});
  ExtendedMatrix ud4 = build_U(build_graph(d4));
  IntMatrix kd4 = build_K(ud4, d4).k;
  CHECK(kd4.row(0) == ints({1, 0, -1, 0, -1, 2, 3}));
  CHECK(kd4.row(1) == ints({0, 1, 2, 0, 0, -1, -2}));
  CHECK(kd4.row(2) == ints({0, 0, 0, 1, 2, -1, -2}));
}

TEST_CASE("kernel saturation: SNF of K is (1,1,1)") {
  for (ResolutionInvariant inv :
       {make_inv(2, {{2, 1}, {3, 2}, {5, 4}}), make_inv(3, {{2, 1}, {2, 1}, {23, 7}}),
        make_inv(2, {{2, 1}, {2, 1}, {2, 1}})}) {
    ExtendedMatrix ext = build_U(build_graph(inv));
    KernelMatrix k = build_K(ext, inv);
    auto f = smith_normal_form(k.k).invariant_factors();
    REQUIRE(f.size() == 3);
    for (const Int& v : f) CHECK(v == 1);
  }
}

TEST_CASE("three-term ray recurrence ties K columns together") {
  ResolutionInvariant inv = make_inv(3, {{2, 1}, {2, 1}, {23, 7}});
  ExtendedMatrix ext = build_U(build_graph(inv));
  IntMatrix k = build_K(ext, inv).k;
  ExceptionalGraph g = build_graph(inv);
  for (int i = 0; i < 3; ++i) {
    long len = ext.branch_len[i];
    for (long j = 1; j <= len; ++j) {
      std::vector<Int> prev =
          j == 1 ? k.column(0) : k.column(ext.column_of_y(i, j - 1));
      std::vector<Int> cur = k.column(ext.column_of_y(i, j));
      std::vector<Int> next = k.column(ext.column_of_y(i, j + 1));
      for (int r = 0; r < 3; ++r)
        CHECK(next[r] == g.branches[i][j - 1] * cur[r] - prev[r]);
    }
  }
}

TEST_CASE("spanning checks") {
  ResolutionInvariant bi = make_inv(2, {{2, 1}, {3, 2}, {5, 4}});
  ExtendedMatrix ubi = build_U(build_graph(bi));
  // remove y_{3,1}, y_{3,2}
  CHECK(spanning_check(ubi, 2, 1));

  ResolutionInvariant bd = make_inv(3, {{2, 1}, {2, 1}, {23, 7}});
  ExtendedMatrix ubd = build_U(build_graph(bd));
  // remove y0 and y_{1,1}
  CHECK(spanning_check(ubd, 0, 0));

  // non-adjacent pair: the two x columns are not on one branch
  CHECK_THROWS_AS(spanning_check(ubi, 0, 5), ParameterError);

  for (auto [i, j] : adjacent_column_pairs(ubi)) CHECK(spanning_check(ubi, i, j));
  for (auto [i, j] : adjacent_column_pairs(ubd)) CHECK(spanning_check(ubd, i, j));
}

TEST_CASE("remark constraints hold for known invariants") {
  CHECK(satisfies_remark_constraints(make_inv(2, {{2, 1}, {3, 2}, {5, 4}})));
  CHECK(satisfies_remark_constraints(make_inv(3, {{2, 1}, {2, 1}, {23, 7}})));
  CHECK(!satisfies_remark_constraints(make_inv(2, {{3, 1}, {3, 1}, {5, 4}})));
  CHECK(!satisfies_remark_constraints(make_inv(2, {{2, 1}, {5, 4}, {5, 4}})));
}
