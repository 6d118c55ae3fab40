#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxres/cyclotomic.hpp"

namespace coxres {

// Sparse multivariate polynomial over cyclotomic coefficients, keyed by a
// fixed ordered variable list. Negative exponents are allowed (Laurent
// terms) and are used for torus characters; substitution into a negative
// power requires the image to be a single invertible term.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Cyclotomic& c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> vars, std::vector<int> exps,
                            const Cyclotomic& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<std::vector<int>, Cyclotomic>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long term_count() const { return static_cast<long>(terms_.size()); }
  long var_index(const std::string& name) const;  // -1 if absent

  void add_term(const std::vector<int>& exps, const Cyclotomic& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Cyclotomic& c) const;
  MultiPoly pow(long e) const;  // e >= 0

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  // Every variable of this polynomial must be assigned. All images must
  // share one variable list, which becomes the result's list.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;

  long total_degree() const;  // max over terms of exponent sum; 0 for zero
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Cyclotomic> terms_;
};

// Phi_N as a univariate polynomial in x.
MultiPoly cyclotomic_polynomial(long n);

// Exact substitution realizing group actions and the generator embedding.
MultiPoly poly_substitute(const MultiPoly& p,
                          const std::map<std::string, MultiPoly>& assignment);

}  // namespace coxres
