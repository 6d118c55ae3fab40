#include <random>

#include "coxres/cyclotomic.hpp"
#include "coxres/errors.hpp"
#include "coxres/int_matrix.hpp"
#include "coxres/multipoly.hpp"
#include "doctest.h"

using namespace coxres;

namespace {

MultiPoly upoly(std::vector<std::pair<int, long>> coeffs) {
  MultiPoly p({"x"});
  for (auto [e, c] : coeffs) p.add_term({e}, Cyclotomic(Rational(c)));
  return p;
}

Cyclotomic random_cyclotomic(long order, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Cyclotomic v = Cyclotomic::zero(order);
  long deg = CyclotomicField::of(order).degree();
  for (long i = 0; i < deg; ++i) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    v = v + Cyclotomic(c, order) * Cyclotomic::root_of_unity(order, i);
  }
  return v;
}

IntMatrix random_matrix(long rows, long cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-6, 6);
  IntMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(r, c) = entry(rng);
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  Int d = m.determinant();
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  SmithResult res = smith_normal_form(IntMatrix::identity(3));
  CHECK(res.s == IntMatrix::identity(3));
  std::vector<Int> expect = {Int(1), Int(1), Int(1)};
  CHECK(res.invariant_factors() == expect);
}

TEST_CASE("smith normal form: diag(2,3) reduces to diag(1,6)") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  SmithResult res = smith_normal_form(m);
  std::vector<Int> expect = {Int(1), Int(6)};
  CHECK(res.invariant_factors() == expect);
  CHECK(res.left * m * res.right == res.s);
  CHECK(is_unimodular(res.left));
  CHECK(is_unimodular(res.right));
}

TEST_CASE("smith normal form: random transform identities") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    long rows = 1 + trial % 5, cols = 1 + (trial / 2) % 6;
    IntMatrix m = random_matrix(rows, cols, rng);
    SmithResult res = smith_normal_form(m);
    CHECK(res.left * m * res.right == res.s);
    CHECK(is_unimodular(res.left));
    CHECK(is_unimodular(res.right));
    // Diagonal with the divisibility chain.
    for (long r = 0; r < res.s.rows(); ++r)
      for (long c = 0; c < res.s.cols(); ++c)
        if (r != c) CHECK(res.s.at(r, c) == 0);
    auto f = res.invariant_factors();
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == upoly({{1, 1}, {0, -1}}));
  // Phi_12 from dividing x^12-1 by Phi_1 Phi_2 Phi_3 Phi_4 Phi_6.
  CHECK(cyclotomic_polynomial(12) == upoly({{4, 1}, {2, -1}, {0, 1}}));
  CHECK(cyclotomic_polynomial(8) == upoly({{4, 1}, {0, 1}}));
}

TEST_CASE("roots of unity in Q(zeta_12)") {
  Cyclotomic z = Cyclotomic::root_of_unity(12, 1);
  Cyclotomic i = z.pow(3);
  CHECK(i * i == Cyclotomic(Rational(-1), 12));
  Cyclotomic sqrt3 = z + z.pow(11);
  CHECK(sqrt3 * sqrt3 == Cyclotomic(Rational(3), 12));
}

TEST_CASE("cyclotomic arithmetic laws") {
  std::mt19937 rng(7);
  for (long order : {12L, 8L, 24L}) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyclotomic a = random_cyclotomic(order, rng);
      Cyclotomic b = random_cyclotomic(order, rng);
      Cyclotomic c = random_cyclotomic(order, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(Rational(1), order));
    }
  }
}

TEST_CASE("cross-order lifting") {
  Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic i12 = Cyclotomic::root_of_unity(12, 3);
  CHECK(i4 == i12);
  CHECK(i4 * Cyclotomic::root_of_unity(3, 1) ==
        Cyclotomic::root_of_unity(12, 3) * Cyclotomic::root_of_unity(12, 4));
  CHECK(root_of_unity_log(Cyclotomic::root_of_unity(8, 5), 8) == 5);
  CHECK(root_of_unity_log(Cyclotomic(Rational(2)), 8) == -1);
}

TEST_CASE("polynomial ring laws") {
  std::vector<std::string> vars = {"x", "y"};
  MultiPoly x = MultiPoly::variable(vars, "x");
  MultiPoly y = MultiPoly::variable(vars, "y");
  MultiPoly p = x * x + y.scaled(Cyclotomic(Rational(2))) -
                MultiPoly::constant(vars, Cyclotomic(Rational(1)));
  MultiPoly q = x * y - y;
  MultiPoly r = x + y;
  CHECK(p * (q + r) == p * q + p * r);
  CHECK(p - p == MultiPoly(vars));
  CHECK((p + q) - q == p);
}

TEST_CASE("substitution: identity and torus scalings") {
  std::vector<std::string> vars = {"x", "y"};
  MultiPoly x = MultiPoly::variable(vars, "x");
  MultiPoly y = MultiPoly::variable(vars, "y");
  MultiPoly w1 = x.pow(5) * y - x * y.pow(5);

  std::map<std::string, MultiPoly> ident = {{"x", x}, {"y", y}};
  CHECK(poly_substitute(w1, ident) == w1);

  // diag(e8, e8^-1) sends x^5 y - x y^5 to its negative.
  Cyclotomic e8 = Cyclotomic::root_of_unity(8, 1);
  std::map<std::string, MultiPoly> act = {{"x", x.scaled(e8)}, {"y", y.scaled(e8.inverse())}};
  CHECK(poly_substitute(w1, act) == -w1);

  // determinant-one scaling fixes xy
  Cyclotomic e7 = Cyclotomic::root_of_unity(7, 1);
  std::map<std::string, MultiPoly> act7 = {{"x", x.scaled(e7)}, {"y", y.scaled(e7.inverse())}};
  CHECK(poly_substitute(x * y, act7) == x * y);
}

TEST_CASE("substitution over incompatible orders lifts to lcm") {
  std::vector<std::string> vars = {"x"};
  MultiPoly x = MultiPoly::variable(vars, "x");
  MultiPoly p = x.scaled(Cyclotomic::root_of_unity(4, 1));
  std::map<std::string, MultiPoly> act = {{"x", x.scaled(Cyclotomic::root_of_unity(3, 1))}};
  MultiPoly q = poly_substitute(p, act);
  CHECK(q == x.scaled(Cyclotomic::root_of_unity(12, 7)));
}

TEST_CASE("laurent monomials invert through substitution") {
  std::vector<std::string> vars = {"t0", "t1"};
  MultiPoly chi = MultiPoly::monomial(vars, {1, -2}, Cyclotomic(Rational(1)));
  std::map<std::string, MultiPoly> act = {
      {"t0", MultiPoly::monomial(vars, {0, 1}, Cyclotomic(Rational(1)))},
      {"t1", MultiPoly::monomial(vars, {1, 0}, Cyclotomic(Rational(1)))}};
  CHECK(poly_substitute(chi, act) == MultiPoly::monomial(vars, {-2, 1}, Cyclotomic(Rational(1))));
}
