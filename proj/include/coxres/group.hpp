#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxres/cyclotomic.hpp"
#include "coxres/int_matrix.hpp"

namespace coxres {

enum class GroupFamily { Cyclic, BD, BT, BO, BI };

std::string family_name(GroupFamily f);

// A finite small subgroup of GL(2,C) given by family and parameters.
struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  long n = 0;  // Cyclic(n,q) and BD(n,m)
  long q = 0;  // Cyclic(n,q)
  long m = 1;  // scalar twist of the fibre-product families

  static GroupSpec cyclic(long n, long q);
  static GroupSpec bd(long n, long m);
  static GroupSpec bt(long m);
  static GroupSpec bo(long m);
  static GroupSpec bi(long m);

  // CLI syntax: BD:n,m  BT:m  BO:m  BI:m  C:n,q
  static GroupSpec parse(const std::string& text);

  bool is_cyclic() const { return family == GroupFamily::Cyclic; }
  std::string name() const;

  void check_admissible() const;  // throws AdmissibilityError
  long order_formula() const;     // n, 4nm, 24m, 48m, 120m
  long field_order() const;       // lcm of the root orders in the generators

  bool operator==(const GroupSpec& o) const {
    return family == o.family && n == o.n && q == o.q && m == o.m;
  }
};

// 2x2 invertible matrix over a cyclotomic field, entries kept in canonical
// coefficient form so equality and ordering are syntactic.
struct Mat2 {
  Cyclotomic a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(long order = 1);
  static Mat2 diag(const Cyclotomic& x, const Cyclotomic& y);

  Mat2 operator*(const Mat2& o) const;
  Mat2 scaled(const Cyclotomic& s) const;
  Mat2 lifted_to(long order) const;

  Cyclotomic det() const { return a * d - b * c; }
  bool is_identity() const;
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  uint64_t hash() const;
  std::string key() const;
  std::string to_string() const;
};

int mat2_compare(const Mat2& x, const Mat2& y);

// Complete multiplication table of a finite matrix group. Elements are
// sorted lexicographically on canonical coefficients; immutable once built.
struct GroupTable {
  std::vector<Mat2> elements;
  std::vector<std::vector<uint32_t>> product;  // product[i][j] = index of e_i*e_j
  long identity = -1;
  std::vector<uint32_t> inverse;

  long order() const { return static_cast<long>(elements.size()); }
  long product_of(long i, long j) const { return product[i][j]; }
  long index_of(const Mat2& m) const;

  // Subgroup closure of the given element indices, as indices into this table.
  std::vector<long> closure(std::vector<long> seed) const;
  GroupTable subgroup_from_indices(const std::vector<long>& idx) const;
};

std::vector<Mat2> standard_generators(const GroupSpec& spec);

inline constexpr long kDefaultEnumerationCap = 10000;
GroupTable enumerate_group(const GroupSpec& spec, long cap = kDefaultEnumerationCap);
GroupTable enumerate_from_generators(const std::vector<Mat2>& gens, long cap);

GroupTable commutator_subgroup(const GroupTable& g);

// Invariant factors d_1 | d_2 | ... (all > 1) of G/[G,G], via Smith normal
// form of the relation lattice of the quotient's multiplication table.
std::vector<Int> abelianization(const GroupTable& g);

struct SmallnessResult {
  bool small = true;
  long witness = -1;  // index of an offending pseudo-reflection
};
SmallnessResult is_small(const GroupTable& g);

// |H1|*|N2| / (2*|[G,G]|) for the fibre-product families.
Int abelianization_order_formula(const GroupSpec& spec);

// Representatives of generating classes of Ab(G), together with the order of
// each class in Ab(G). Empty for trivial abelianization.
struct AbGenerator {
  Mat2 rep;
  long class_order;
};
std::vector<AbGenerator> abelianization_generators(const GroupSpec& spec);

}  // namespace coxres
