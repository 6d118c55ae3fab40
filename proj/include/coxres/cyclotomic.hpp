#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxres/numbers.hpp"

namespace coxres {

// Integer coefficients of the N-th cyclotomic polynomial, low degree first,
// monic of degree phi(N). Computed by dividing x^N - 1 by Phi_d for all
// proper divisors d of N.
std::vector<Int> cyclotomic_coeffs(long n);

namespace detail {
// Immutable canonical coefficient data: sorted basis indices, no zeros.
// Shared between values; the hash and root-exponent caches are filled
// lazily (the library is single-threaded by design).
struct CycData {
  std::vector<std::pair<int, Rational>> terms;
  mutable uint64_t hash = 0;
  mutable long root_exp = -2;  // -2 unknown, -1 not a root of unity
};
using CycPtr = std::shared_ptr<const CycData>;
}  // namespace detail

// Shared per-order data: the modulus Phi_N, reduction rows x^k mod Phi_N,
// and a cache of the N reduced roots of unity.
class CyclotomicField {
 public:
  static const CyclotomicField& of(long order);

  long order() const { return order_; }
  long degree() const { return degree_; }
  const std::vector<Int>& modulus() const { return modulus_; }

  // x^k mod Phi_N as a sparse (basis index, integer coefficient) list.
  const std::vector<std::pair<int, Int>>& power_row(long k) const;

  // Reduced zeta_N^k, shared storage.
  detail::CycPtr root(long k) const;

  // Exponent k with data == zeta_N^k, or -1. Memoized in data.
  long root_log(const detail::CycData& data) const;

 private:
  explicit CyclotomicField(long order);
  void build_root_index() const;

  long order_;
  long degree_;
  std::vector<Int> modulus_;
  mutable std::vector<std::vector<std::pair<int, Int>>> rows_;
  mutable std::vector<detail::CycPtr> roots_;
  mutable std::unordered_map<uint64_t, std::vector<long>> root_index_;
};

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
// always reduced mod Phi_N so equality is coefficient-wise. Values are
// immutable; copies share storage. Cross-order arithmetic lifts both
// operands to the lcm order.
class Cyclotomic {
 public:
  Cyclotomic();
  explicit Cyclotomic(const Rational& value, long order = 1);
  explicit Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

  static Cyclotomic root_of_unity(long order, long power);
  static Cyclotomic zero(long order);
  static Cyclotomic from_dense(long order, const std::vector<Rational>& coeffs);

  long order() const { return order_; }
  const std::vector<std::pair<int, Rational>>& terms() const { return data_->terms; }
  std::vector<Rational> dense_coeffs() const;  // length phi(order)

  bool is_zero() const { return data_->terms.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic lifted_to(long target_order) const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;  // throws ParameterError on zero

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  // Total order; lifts to a common order first. For deterministic sorting.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic pow(long e) const;

  // Exponent k in [0, order) if this value equals zeta_order^k, else -1.
  long as_root_exponent() const;

  uint64_t hash() const;
  std::string key() const;        // exact canonical form, usable as a map key
  std::string to_string() const;  // human-readable, z<N> for zeta_N

 private:
  Cyclotomic(long order, detail::CycPtr data) : order_(order), data_(std::move(data)) {}
  static Cyclotomic make(long order, std::vector<std::pair<int, Rational>> terms);

  long order_;
  detail::CycPtr data_;
};

// Exponent e in [0, r) with value == zeta_r^e, if value is such a root of
// unity; -1 otherwise.
long root_of_unity_log(const Cyclotomic& value, long r);

}  // namespace coxres
