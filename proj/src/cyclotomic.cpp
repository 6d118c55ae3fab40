#include "coxres/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "coxres/errors.hpp"

namespace coxres {

namespace {

// Quotient of integer polynomials, divisor monic; remainder must vanish.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (long k = dn - dd; k >= 0; --k) {
    Int c = num[k + dd];
    if (c == 0) continue;
    quot[k] = c;
    for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw InconsistencyError("cyclotomic division not exact");
  return quot;
}

uint64_t hash_mix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

uint64_t hash_int(uint64_t h, const mpz_class& z) {
  h = hash_mix(h, static_cast<uint64_t>(mpz_sgn(z.get_mpz_t())));
  size_t limbs = mpz_size(z.get_mpz_t());
  for (size_t i = 0; i < limbs; ++i)
    h = hash_mix(h, mpz_getlimbn(z.get_mpz_t(), i));
  return h;
}

uint64_t hash_terms(const std::vector<std::pair<int, Rational>>& terms) {
  uint64_t h = 1469598103934665603ull;
  for (const auto& [i, c] : terms) {
    h = hash_mix(h, static_cast<uint64_t>(i));
    h = hash_int(h, c.get_num());
    h = hash_int(h, c.get_den());
  }
  return h == 0 ? 1 : h;
}

detail::CycPtr make_data(std::vector<std::pair<int, Rational>> terms) {
  auto data = std::make_shared<detail::CycData>();
  data->terms = std::move(terms);
  return data;
}

const detail::CycPtr& zero_data() {
  static detail::CycPtr z = make_data({});
  return z;
}

}  // namespace

std::vector<Int> cyclotomic_coeffs(long n) {
  if (n < 1) throw ParameterError("cyclotomic order must be positive");
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors_of(n)) {
    if (d == n) continue;
    num = exact_div(std::move(num), cyclotomic_coeffs(d));
  }
  return num;
}

const CyclotomicField& CyclotomicField::of(long order) {
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) {
    it = cache.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  }
  return *it->second;
}

CyclotomicField::CyclotomicField(long order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_coeffs(order)) {}

const std::vector<std::pair<int, Int>>& CyclotomicField::power_row(long k) const {
  if (k < 0) throw ParameterError("negative power of zeta");
  if (static_cast<long>(rows_.size()) > k) return rows_[k];
  if (rows_.empty()) {
    rows_.reserve(2 * degree_);
    for (long i = 0; i < degree_; ++i)
      rows_.push_back({{static_cast<int>(i), Int(1)}});
  }
  // row(k+1) = x*row(k), replacing x^degree by -(low part of Phi_N).
  while (static_cast<long>(rows_.size()) <= k) {
    const auto prev = rows_.back();
    std::vector<Int> dense(degree_, Int(0));
    Int overflow(0);
    for (const auto& [idx, c] : prev) {
      if (idx + 1 == degree_)
        overflow = c;
      else
        dense[idx + 1] = c;
    }
    if (overflow != 0)
      for (long i = 0; i < degree_; ++i) dense[i] -= overflow * modulus_[i];
    std::vector<std::pair<int, Int>> row;
    for (long i = 0; i < degree_; ++i)
      if (dense[i] != 0) row.emplace_back(static_cast<int>(i), dense[i]);
    rows_.push_back(std::move(row));
  }
  return rows_[k];
}

detail::CycPtr CyclotomicField::root(long k) const {
  k %= order_;
  if (k < 0) k += order_;
  if (roots_.empty()) roots_.assign(order_, nullptr);
  if (!roots_[k]) {
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& [idx, c] : power_row(k)) terms.emplace_back(idx, Rational(c));
    auto data = make_data(std::move(terms));
    data->root_exp = k;
    roots_[k] = std::move(data);
  }
  return roots_[k];
}

void CyclotomicField::build_root_index() const {
  if (!root_index_.empty()) return;
  for (long k = 0; k < order_; ++k) {
    const detail::CycPtr& r = root(k);
    if (r->hash == 0) r->hash = hash_terms(r->terms);
    root_index_[r->hash].push_back(k);
  }
}

long CyclotomicField::root_log(const detail::CycData& data) const {
  if (data.root_exp != -2) return data.root_exp;
  build_root_index();
  if (data.hash == 0) data.hash = hash_terms(data.terms);
  data.root_exp = -1;
  auto it = root_index_.find(data.hash);
  if (it != root_index_.end()) {
    for (long k : it->second) {
      if (root(k)->terms == data.terms) {
        data.root_exp = k;
        break;
      }
    }
  }
  return data.root_exp;
}

Cyclotomic::Cyclotomic() : order_(1), data_(zero_data()) {}

Cyclotomic::Cyclotomic(const Rational& value, long order) : order_(order) {
  if (value == 0)
    data_ = zero_data();
  else
    data_ = make_data({{0, value}});
}

Cyclotomic Cyclotomic::make(long order, std::vector<std::pair<int, Rational>> terms) {
  if (terms.empty()) return Cyclotomic(order, zero_data());
  return Cyclotomic(order, make_data(std::move(terms)));
}

Cyclotomic Cyclotomic::zero(long order) { return Cyclotomic(order, zero_data()); }

Cyclotomic Cyclotomic::from_dense(long order, const std::vector<Rational>& coeffs) {
  const auto& field = CyclotomicField::of(order);
  if (static_cast<long>(coeffs.size()) != field.degree())
    throw ParameterError("coefficient vector has wrong length");
  std::vector<std::pair<int, Rational>> terms;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(static_cast<int>(i), coeffs[i]);
  return make(order, std::move(terms));
}

Cyclotomic Cyclotomic::root_of_unity(long order, long power) {
  if (order < 1) throw ParameterError("root of unity needs positive order");
  return Cyclotomic(order, CyclotomicField::of(order).root(power));
}

std::vector<Rational> Cyclotomic::dense_coeffs() const {
  std::vector<Rational> out(CyclotomicField::of(order_).degree(), Rational(0));
  for (const auto& [i, c] : data_->terms) out[i] = c;
  return out;
}

bool Cyclotomic::is_rational() const {
  return data_->terms.empty() || (data_->terms.size() == 1 && data_->terms[0].first == 0);
}

Rational Cyclotomic::rational_value() const {
  if (data_->terms.empty()) return Rational(0);
  if (!is_rational()) throw ParameterError("value is not rational");
  return data_->terms[0].second;
}

Cyclotomic Cyclotomic::lifted_to(long target_order) const {
  if (target_order == order_) return *this;
  if (target_order % order_ != 0)
    throw ParameterError("cannot lift: order does not divide target");
  const auto& field = CyclotomicField::of(target_order);
  long step = target_order / order_;
  std::map<int, Rational> acc;
  for (const auto& [i, c] : data_->terms)
    for (const auto& [idx, m] : field.power_row(static_cast<long>(i) * step)) {
      Rational v = c * Rational(m);
      auto [it, fresh] = acc.emplace(idx, v);
      if (!fresh) it->second += v;
    }
  std::vector<std::pair<int, Rational>> terms;
  for (auto& [i, c] : acc)
    if (c != 0) terms.emplace_back(i, c);
  return make(target_order, std::move(terms));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<std::pair<int, Rational>> terms(data_->terms);
  for (auto& [i, c] : terms) c = -c;
  return make(order_, std::move(terms));
}

namespace {

std::pair<Cyclotomic, Cyclotomic> to_common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return {a, b};
  long target = lcm_long(a.order(), b.order());
  return {a.lifted_to(target), b.lifted_to(target)};
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = to_common_order(a, b);
  std::vector<std::pair<int, Rational>> terms;
  terms.reserve(x.terms().size() + y.terms().size());
  auto it = x.terms().begin(), jt = y.terms().begin();
  while (it != x.terms().end() || jt != y.terms().end()) {
    if (jt == y.terms().end() || (it != x.terms().end() && it->first < jt->first)) {
      terms.push_back(*it++);
    } else if (it == x.terms().end() || jt->first < it->first) {
      terms.push_back(*jt++);
    } else {
      Rational c = it->second + jt->second;
      if (c != 0) terms.emplace_back(it->first, c);
      ++it;
      ++jt;
    }
  }
  return Cyclotomic::make(x.order(), std::move(terms));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero()) return Cyclotomic::zero(lcm_long(a.order(), b.order()));
  if (b.is_zero()) return Cyclotomic::zero(lcm_long(a.order(), b.order()));
  // Rational scaling needs no reduction.
  if (a.is_rational() || b.is_rational()) {
    const Cyclotomic& scalar = a.is_rational() ? a : b;
    const Cyclotomic& other = a.is_rational() ? b : a;
    Rational s = scalar.rational_value();
    std::vector<std::pair<int, Rational>> terms(other.terms());
    for (auto& [i, c] : terms) c *= s;
    long ord = lcm_long(a.order(), b.order());
    return Cyclotomic::make(other.order(), std::move(terms)).lifted_to(ord);
  }
  auto [x, y] = to_common_order(a, b);
  const auto& field = CyclotomicField::of(x.order());
  // Roots of unity multiply by adding exponents.
  long kx = field.root_log(*x.data_);
  if (kx >= 0) {
    long ky = field.root_log(*y.data_);
    if (ky >= 0) return Cyclotomic(x.order(), field.root(kx + ky));
  }
  long deg = field.degree();
  std::map<int, Rational> acc;
  for (const auto& [i, ca] : x.terms())
    for (const auto& [j, cb] : y.terms()) {
      Rational v = ca * cb;
      auto [it, fresh] = acc.emplace(i + j, v);
      if (!fresh) it->second += v;
    }
  // Fold exponents >= deg back into the basis.
  while (!acc.empty()) {
    auto last = std::prev(acc.end());
    if (last->first < deg) break;
    Rational c = last->second;
    long k = last->first;
    acc.erase(last);
    if (c == 0) continue;
    for (const auto& [idx, m] : field.power_row(k)) {
      Rational v = c * Rational(m);
      auto [it, fresh] = acc.emplace(idx, v);
      if (!fresh) it->second += v;
    }
  }
  std::vector<std::pair<int, Rational>> terms;
  for (auto& [i, c] : acc)
    if (c != 0) terms.emplace_back(i, c);
  return Cyclotomic::make(x.order(), std::move(terms));
}

namespace {

// Polynomial helpers over Q for the inverse via extended Euclid.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return {q, a};
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ParameterError("inverse of zero");
  const auto& field = CyclotomicField::of(order_);
  if (is_rational()) return Cyclotomic(Rational(1) / rational_value(), order_);
  long k = field.root_log(*data_);
  if (k >= 0) return Cyclotomic(order_, field.root(order_ - k));

  QPoly r0;
  for (const Int& c : field.modulus()) r0.push_back(Rational(c));
  QPoly r1(field.degree(), Rational(0));
  for (const auto& [i, c] : data_->terms) r1[i] = c;
  trim(r1);
  // Extended Euclid: maintain r_i = s_i*Phi + t_i*value; the gcd is a
  // nonzero constant since Phi_N is irreducible over Q.
  QPoly t0, t1 = {Rational(1)};
  while (true) {
    auto [q, r2] = poly_divmod(r0, r1);
    if (r2.empty()) break;
    QPoly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.size() != 1) throw InconsistencyError("cyclotomic modulus not irreducible?");
  Rational scale = Rational(1) / r1[0];
  std::vector<std::pair<int, Rational>> terms;
  for (size_t i = 0; i < t1.size(); ++i)
    if (t1[i] != 0) terms.emplace_back(static_cast<int>(i), t1[i] * scale);
  return make(order_, std::move(terms));
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  if (order_ == other.order_)
    return data_ == other.data_ || data_->terms == other.data_->terms;
  auto [x, y] = to_common_order(*this, other);
  return x.data_->terms == y.data_->terms;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = to_common_order(a, b);
  if (x.data_ == y.data_) return 0;
  auto it = x.terms().begin(), jt = y.terms().begin();
  // Merge-walk over sparse terms; missing coefficients are zero.
  while (it != x.terms().end() || jt != y.terms().end()) {
    int ii = it != x.terms().end() ? it->first : INT32_MAX;
    int jj = jt != y.terms().end() ? jt->first : INT32_MAX;
    if (ii < jj) {
      int c = mpq_sgn(it->second.get_mpq_t());
      if (c != 0) return c;
      ++it;
    } else if (jj < ii) {
      int c = -mpq_sgn(jt->second.get_mpq_t());
      if (c != 0) return c;
      ++jt;
    } else {
      int c = mpq_cmp(it->second.get_mpq_t(), jt->second.get_mpq_t());
      if (c != 0) return c < 0 ? -1 : 1;
      ++it;
      ++jt;
    }
  }
  return 0;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto& field = CyclotomicField::of(order_);
  if (!is_zero() && !is_rational()) {
    long k = field.root_log(*data_);
    if (k >= 0) return Cyclotomic(order_, field.root(k * (e % order_)));
  }
  Cyclotomic result(Rational(1), order_);
  Cyclotomic base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

uint64_t Cyclotomic::hash() const {
  if (data_->hash == 0) data_->hash = hash_terms(data_->terms);
  return data_->hash;
}

long Cyclotomic::as_root_exponent() const {
  if (is_zero()) return -1;
  return CyclotomicField::of(order_).root_log(*data_);
}

std::string Cyclotomic::key() const {
  std::ostringstream out;
  out << order_;
  for (const auto& [i, c] : data_->terms) out << "," << i << ":" << rational_to_string(c);
  return out.str();
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : data_->terms) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = abs == 1;
    if (i == 0 || !unit) out << rational_to_string(abs);
    if (i > 0) {
      if (!unit) out << "*";
      out << "z" << order_;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

long root_of_unity_log(const Cyclotomic& value, long r) {
  long target = lcm_long(value.order(), r);
  Cyclotomic lifted = value.lifted_to(target);
  long k = lifted.as_root_exponent();
  if (k < 0) return -1;
  long step = target / r;
  if (k % step != 0) return -1;
  return k / step;
}

}  // namespace coxres
