#include "coxres/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "coxres/errors.hpp"

namespace coxres {

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::Cyclic: return "C";
    case GroupFamily::BD: return "BD";
    case GroupFamily::BT: return "BT";
    case GroupFamily::BO: return "BO";
    case GroupFamily::BI: return "BI";
  }
  return "?";
}

GroupSpec GroupSpec::cyclic(long n, long q) { return {GroupFamily::Cyclic, n, q, 1}; }
GroupSpec GroupSpec::bd(long n, long m) { return {GroupFamily::BD, n, 0, m}; }
GroupSpec GroupSpec::bt(long m) { return {GroupFamily::BT, 0, 0, m}; }
GroupSpec GroupSpec::bo(long m) { return {GroupFamily::BO, 0, 0, m}; }
GroupSpec GroupSpec::bi(long m) { return {GroupFamily::BI, 0, 0, m}; }

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParameterError("expected FAMILY:params, got " + text);
  std::string fam = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  std::vector<long> params;
  std::istringstream in(rest);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      params.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("bad integer parameter '" + piece + "' in " + text);
    }
  }
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw ParameterError(fam + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (fam == "C") {
    want(2);
    return cyclic(params[0], params[1]);
  }
  if (fam == "BD") {
    want(2);
    return bd(params[0], params[1]);
  }
  if (fam == "BT") {
    want(1);
    return bt(params[0]);
  }
  if (fam == "BO") {
    want(1);
    return bo(params[0]);
  }
  if (fam == "BI") {
    want(1);
    return bi(params[0]);
  }
  throw ParameterError("unknown group family " + fam);
}

std::string GroupSpec::name() const {
  std::ostringstream out;
  out << family_name(family) << "(";
  switch (family) {
    case GroupFamily::Cyclic: out << n << "," << q; break;
    case GroupFamily::BD: out << n << "," << m; break;
    default: out << m; break;
  }
  out << ")";
  return out.str();
}

void GroupSpec::check_admissible() const {
  switch (family) {
    case GroupFamily::Cyclic:
      if (n < 1 || q < 1 || q >= n)
        throw AdmissibilityError("1 <= q < n", name() + ": need 1 <= q < n");
      if (gcd_long(n, q) != 1)
        throw AdmissibilityError("gcd(n,q) = 1", name() + ": gcd(n,q) != 1");
      break;
    case GroupFamily::BD:
      if (n < 2) throw AdmissibilityError("n >= 2", name() + ": need n >= 2");
      if (m < 1) throw AdmissibilityError("m >= 1", name() + ": need m >= 1");
      if (gcd_long(n, m) != 1)
        throw AdmissibilityError("gcd(n,m) = 1", name() + ": gcd(n,m) != 1");
      break;
    case GroupFamily::BT: {
      if (m < 1) throw AdmissibilityError("m >= 1", name() + ": need m >= 1");
      long g = gcd_long(m, 6);
      if (g != 1 && g != 3)
        throw AdmissibilityError("gcd(m,6) in {1,3}", name() + ": gcd(m,6) not in {1,3}");
      break;
    }
    case GroupFamily::BO:
      if (m < 1) throw AdmissibilityError("m >= 1", name() + ": need m >= 1");
      if (gcd_long(m, 6) != 1)
        throw AdmissibilityError("gcd(m,6) = 1", name() + ": gcd(m,6) != 1");
      break;
    case GroupFamily::BI:
      if (m < 1) throw AdmissibilityError("m >= 1", name() + ": need m >= 1");
      if (gcd_long(m, 30) != 1)
        throw AdmissibilityError("gcd(m,30) = 1", name() + ": gcd(m,30) != 1");
      break;
  }
}

long GroupSpec::order_formula() const {
  switch (family) {
    case GroupFamily::Cyclic: return n;
    case GroupFamily::BD: return 4 * n * m;
    case GroupFamily::BT: return 24 * m;
    case GroupFamily::BO: return 48 * m;
    case GroupFamily::BI: return 120 * m;
  }
  return 0;
}

long GroupSpec::field_order() const {
  switch (family) {
    case GroupFamily::Cyclic: return n;
    case GroupFamily::BD:
      return (m % 2 == 0) ? lcm_long(2 * n, 4 * m) : lcm_long(2 * n, 2 * m);
    case GroupFamily::BT:
      return (gcd_long(m, 6) == 3) ? lcm_long(4, 6 * m) : lcm_long(4, 2 * m);
    case GroupFamily::BO: return lcm_long(8, 2 * m);
    case GroupFamily::BI: return lcm_long(5, 2 * m);
  }
  return 1;
}

Mat2 Mat2::identity(long order) {
  Cyclotomic one(Rational(1), order), zero = Cyclotomic::zero(order);
  return {one, zero, zero, one};
}

Mat2 Mat2::diag(const Cyclotomic& x, const Cyclotomic& y) {
  long ord = lcm_long(x.order(), y.order());
  return {x.lifted_to(ord), Cyclotomic::zero(ord), Cyclotomic::zero(ord), y.lifted_to(ord)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::scaled(const Cyclotomic& s) const { return {a * s, b * s, c * s, d * s}; }

Mat2 Mat2::lifted_to(long order) const {
  return {a.lifted_to(order), b.lifted_to(order), c.lifted_to(order), d.lifted_to(order)};
}

bool Mat2::is_identity() const {
  return b.is_zero() && c.is_zero() && a.is_rational() && d.is_rational() &&
         a.rational_value() == 1 && d.rational_value() == 1;
}

uint64_t Mat2::hash() const {
  uint64_t h = a.hash();
  h = h * 1099511628211ull ^ b.hash();
  h = h * 1099511628211ull ^ c.hash();
  h = h * 1099511628211ull ^ d.hash();
  return h;
}

std::string Mat2::key() const {
  return a.key() + "|" + b.key() + "|" + c.key() + "|" + d.key();
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() +
         ", " + d.to_string() + "]]";
}

int mat2_compare(const Mat2& x, const Mat2& y) {
  int c0 = Cyclotomic::compare(x.a, y.a);
  if (c0) return c0;
  c0 = Cyclotomic::compare(x.b, y.b);
  if (c0) return c0;
  c0 = Cyclotomic::compare(x.c, y.c);
  if (c0) return c0;
  return Cyclotomic::compare(x.d, y.d);
}

long GroupTable::index_of(const Mat2& m) const {
  long lo = 0, hi = order();
  while (lo < hi) {
    long mid = (lo + hi) / 2;
    int c = mat2_compare(elements[mid], m);
    if (c == 0) return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

std::vector<long> GroupTable::closure(std::vector<long> seed) const {
  std::set<long> have(seed.begin(), seed.end());
  have.insert(identity);
  std::vector<long> work(have.begin(), have.end());
  std::vector<long> gens(have.begin(), have.end());
  while (!work.empty()) {
    long x = work.back();
    work.pop_back();
    for (long g : gens) {
      long y = product_of(x, g);
      if (have.insert(y).second) work.push_back(y);
      y = product_of(g, x);
      if (have.insert(y).second) work.push_back(y);
    }
    // New elements act as generators too: the seed need not generate quickly
    // through right multiplication alone.
    if (static_cast<long>(have.size()) > static_cast<long>(gens.size())) {
      gens.assign(have.begin(), have.end());
    }
  }
  return std::vector<long>(have.begin(), have.end());
}

GroupTable GroupTable::subgroup_from_indices(const std::vector<long>& idx) const {
  std::vector<long> sorted(idx);
  std::sort(sorted.begin(), sorted.end());
  std::vector<long> back(order(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) back[sorted[i]] = static_cast<long>(i);
  GroupTable sub;
  sub.elements.reserve(sorted.size());
  for (long i : sorted) sub.elements.push_back(elements[i]);
  sub.product.assign(sorted.size(), std::vector<uint32_t>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = 0; j < sorted.size(); ++j) {
      long p = back[product_of(sorted[i], sorted[j])];
      if (p < 0) throw InconsistencyError("index set is not closed under product");
      sub.product[i][j] = static_cast<uint32_t>(p);
    }
  sub.identity = back[identity];
  if (sub.identity < 0) throw InconsistencyError("subgroup misses the identity");
  sub.inverse.assign(sorted.size(), 0);
  for (size_t i = 0; i < sorted.size(); ++i) {
    bool found = false;
    for (size_t j = 0; j < sorted.size(); ++j)
      if (sub.product[i][j] == static_cast<uint32_t>(sub.identity)) {
        sub.inverse[i] = static_cast<uint32_t>(j);
        found = true;
        break;
      }
    if (!found) throw InconsistencyError("subgroup misses an inverse");
  }
  return sub;
}

std::vector<Mat2> standard_generators(const GroupSpec& spec) {
  spec.check_admissible();
  long field = spec.field_order();
  auto zeta = [&](long order, long power) {
    return Cyclotomic::root_of_unity(field, (field / order) * power);
  };
  Mat2 matB{Cyclotomic::zero(field), Cyclotomic(Rational(1), field),
            Cyclotomic(Rational(-1), field), Cyclotomic::zero(field)};

  switch (spec.family) {
    case GroupFamily::Cyclic:
      return {Mat2::diag(zeta(spec.n, 1), zeta(spec.n, spec.q))};
    case GroupFamily::BD: {
      Mat2 diag = Mat2::diag(zeta(2 * spec.n, 1), zeta(2 * spec.n, 2 * spec.n - 1));
      if (spec.m == 1) return {diag, matB};
      if (spec.m % 2 == 1) return {diag, matB, matB.scaled(zeta(2 * spec.m, 1))};
      return {diag, matB.scaled(zeta(4 * spec.m, 1))};
    }
    case GroupFamily::BT: {
      Mat2 diagI = Mat2::diag(zeta(4, 1), zeta(4, 3));
      Cyclotomic i4 = zeta(4, 1);
      Cyclotomic half(Rational(1, 2), field);
      Cyclotomic one(Rational(1), field);
      Mat2 matC{(one + i4) * half, (i4 - one) * half, (one + i4) * half, (one - i4) * half};
      if (spec.m == 1) return {diagI, matB, matC};
      if (gcd_long(spec.m, 6) == 3) return {diagI, matB, matC.scaled(zeta(6 * spec.m, 1))};
      return {diagI, matB, matC, matC.scaled(zeta(2 * spec.m, 1))};
    }
    case GroupFamily::BO: {
      GroupSpec bt1 = GroupSpec::bt(1);
      std::vector<Mat2> gens;
      for (const Mat2& g : standard_generators(bt1)) gens.push_back(g.lifted_to(field));
      Mat2 diag8 = Mat2::diag(zeta(8, 1), zeta(8, 7));
      gens.push_back(diag8);
      if (spec.m > 1) gens.push_back(diag8.scaled(zeta(2 * spec.m, 1)));
      return gens;
    }
    case GroupFamily::BI: {
      // Klein's pair for the binary icosahedral group, over Q(zeta_5):
      // diag(e5^3, e5^2) and (1/sqrt5) [[-(e5-e5^4), e5^2-e5^3],
      //                                 [e5^2-e5^3,  e5-e5^4]].
      Cyclotomic e1 = zeta(5, 1), e2 = zeta(5, 2), e3 = zeta(5, 3), e4 = zeta(5, 4);
      Cyclotomic sqrt5 = Cyclotomic(Rational(1), field) + e1 + e1 + e4 + e4;
      Cyclotomic inv_sqrt5 = sqrt5 * Cyclotomic(Rational(1, 5), field);
      Mat2 t1 = Mat2::diag(e3, e2);
      Mat2 t2{(-(e1 - e4)) * inv_sqrt5, (e2 - e3) * inv_sqrt5,
              (e2 - e3) * inv_sqrt5, (e1 - e4) * inv_sqrt5};
      std::vector<Mat2> gens = {t1, t2};
      if (spec.m > 1) gens.push_back(Mat2::identity(field).scaled(zeta(2 * spec.m, 1)));
      return gens;
    }
  }
  throw ParameterError("unhandled family");
}

GroupTable enumerate_from_generators(const std::vector<Mat2>& gens_in, long cap) {
  if (gens_in.empty()) throw ParameterError("no generators");
  long field = 1;
  for (const Mat2& g : gens_in) field = lcm_long(field, g.a.order());
  std::vector<Mat2> gens;
  for (const Mat2& g : gens_in) gens.push_back(g.lifted_to(field));

  std::vector<Mat2> elems;
  std::unordered_map<uint64_t, std::vector<long>> index;
  std::vector<std::pair<long, long>> word;  // (parent, generator) per element
  auto intern = [&](const Mat2& m, long parent, long gen) {
    std::vector<long>& bucket = index[m.hash()];
    for (long i : bucket)
      if (elems[i] == m) return i;
    long fresh = static_cast<long>(elems.size());
    bucket.push_back(fresh);
    elems.push_back(m);
    word.emplace_back(parent, gen);
    if (static_cast<long>(elems.size()) > cap)
      throw SizeError("group enumeration exceeded cap of " + std::to_string(cap));
    return fresh;
  };

  intern(Mat2::identity(field), -1, -1);
  // rmul[g][i] = index of elems[i] * gens[g]
  std::vector<std::vector<uint32_t>> rmul(gens.size());
  size_t done = 0;
  while (done < elems.size()) {
    Mat2 cur = elems[done];
    for (size_t g = 0; g < gens.size(); ++g) {
      long j = intern(cur * gens[g], static_cast<long>(done), static_cast<long>(g));
      rmul[g].resize(elems.size());
      rmul[g][done] = static_cast<uint32_t>(j);
    }
    ++done;
  }
  long n = static_cast<long>(elems.size());
  for (auto& col : rmul) col.resize(n);

  // Right multiplication by any element as a permutation, composed from the
  // generator permutations along the element's defining word.
  std::vector<std::vector<uint32_t>> perm(n);
  perm[0].resize(n);
  std::iota(perm[0].begin(), perm[0].end(), 0);
  for (long j = 1; j < n; ++j) {
    auto [parent, g] = word[j];
    perm[j].resize(n);
    for (long i = 0; i < n; ++i) perm[j][i] = rmul[g][perm[parent][i]];
  }

  // Canonical element order.
  std::vector<long> by_value(n);
  std::iota(by_value.begin(), by_value.end(), 0);
  std::sort(by_value.begin(), by_value.end(),
            [&](long x, long y) { return mat2_compare(elems[x], elems[y]) < 0; });
  std::vector<long> pos(n);
  for (long i = 0; i < n; ++i) pos[by_value[i]] = i;

  GroupTable table;
  table.elements.reserve(n);
  for (long i = 0; i < n; ++i) table.elements.push_back(elems[by_value[i]]);
  table.product.assign(n, std::vector<uint32_t>(n));
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < n; ++i)
      table.product[pos[i]][pos[j]] = static_cast<uint32_t>(pos[perm[j][i]]);
  table.identity = pos[0];
  table.inverse.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    bool found = false;
    for (long j = 0; j < n; ++j)
      if (table.product[i][j] == static_cast<uint32_t>(table.identity)) {
        table.inverse[i] = static_cast<uint32_t>(j);
        found = true;
        break;
      }
    if (!found) throw InconsistencyError("element without inverse");
  }
  return table;
}

GroupTable enumerate_group(const GroupSpec& spec, long cap) {
  return enumerate_from_generators(standard_generators(spec), cap);
}

GroupTable commutator_subgroup(const GroupTable& g) {
  long n = g.order();
  std::set<long> comms;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long x = g.product_of(i, j);
      x = g.product_of(x, g.inverse[i]);
      x = g.product_of(x, g.inverse[j]);
      comms.insert(x);
    }
  std::vector<long> closed = g.closure(std::vector<long>(comms.begin(), comms.end()));
  return g.subgroup_from_indices(closed);
}

namespace {

// Coset decomposition of g modulo the (normal) subgroup with given indices.
struct Cosets {
  std::vector<long> coset_of;   // element index -> coset id
  std::vector<long> rep;        // coset id -> representative element index
  long count = 0;
};

Cosets cosets_mod(const GroupTable& g, const std::vector<long>& sub) {
  Cosets cs;
  cs.coset_of.assign(g.order(), -1);
  for (long i = 0; i < g.order(); ++i) {
    if (cs.coset_of[i] >= 0) continue;
    long id = cs.count++;
    cs.rep.push_back(i);
    for (long h : sub) cs.coset_of[g.product_of(i, h)] = id;
    if (cs.coset_of[i] != id) throw InconsistencyError("coset decomposition failed");
  }
  return cs;
}

}  // namespace

std::vector<Int> abelianization(const GroupTable& g) {
  GroupTable comm = commutator_subgroup(g);
  std::vector<long> sub;
  sub.reserve(comm.order());
  for (const Mat2& m : comm.elements) sub.push_back(g.index_of(m));
  Cosets cs = cosets_mod(g, sub);
  long s = cs.count;
  if (s == 1) return {};

  // Relation lattice of the quotient: e_i + e_j - e_{ij} over all pairs.
  std::set<std::vector<Int>> rows;
  for (long i = 0; i < s; ++i)
    for (long j = 0; j < s; ++j) {
      long ij = cs.coset_of[g.product_of(cs.rep[i], cs.rep[j])];
      std::vector<Int> row(s, Int(0));
      row[i] += 1;
      row[j] += 1;
      row[ij] -= 1;
      if (std::any_of(row.begin(), row.end(), [](const Int& v) { return v != 0; }))
        rows.insert(row);
    }
  IntMatrix rel = IntMatrix::from_rows({rows.begin(), rows.end()});
  std::vector<Int> factors = cokernel_invariant_factors(rel);
  Int got(1);
  for (const Int& f : factors) got *= f;
  if (got != s) throw InconsistencyError("abelianization size mismatch");
  return factors;
}

SmallnessResult is_small(const GroupTable& g) {
  Cyclotomic one(Rational(1));
  for (long i = 0; i < g.order(); ++i) {
    const Mat2& m = g.elements[i];
    if (m.is_identity()) continue;
    // Pseudo-reflection iff 1 is an eigenvalue of multiplicity exactly one,
    // i.e. det(m - I) = 0 while m != I.
    Cyclotomic dm1 = (m.a - one) * (m.d - one) - m.b * m.c;
    if (dm1.is_zero()) return {false, i};
  }
  return {true, -1};
}

Int abelianization_order_formula(const GroupSpec& spec) {
  spec.check_admissible();
  long h1 = 0, n2 = 0, comm = 0;
  switch (spec.family) {
    case GroupFamily::Cyclic:
      throw ParameterError("abelianization_order_formula: cyclic groups are not fibre products");
    case GroupFamily::BD:
      if (spec.m % 2 == 0) {
        h1 = 4 * spec.m;
        n2 = 2 * spec.n;
      } else {
        h1 = 2 * spec.m;
        n2 = 4 * spec.n;
      }
      comm = spec.n;
      break;
    case GroupFamily::BT:
      if (gcd_long(spec.m, 6) == 3) {
        h1 = 6 * spec.m;
        n2 = 8;
      } else {
        h1 = 2 * spec.m;
        n2 = 24;
      }
      comm = 8;
      break;
    case GroupFamily::BO:
      h1 = 2 * spec.m;
      n2 = 48;
      comm = 24;
      break;
    case GroupFamily::BI:
      h1 = 2 * spec.m;
      n2 = 120;
      comm = 120;
      break;
  }
  return Int(h1) * Int(n2) / (Int(2) * Int(comm));
}

std::vector<AbGenerator> abelianization_generators(const GroupSpec& spec) {
  spec.check_admissible();
  long field = spec.field_order();
  auto zeta = [&](long order, long power) {
    return Cyclotomic::root_of_unity(field, (field / order) * power);
  };
  Mat2 matB{Cyclotomic::zero(field), Cyclotomic(Rational(1), field),
            Cyclotomic(Rational(-1), field), Cyclotomic::zero(field)};
  switch (spec.family) {
    case GroupFamily::Cyclic:
      throw ParameterError("abelianization_generators: use the cyclic group itself");
    case GroupFamily::BD:
      if (spec.n % 2 == 0) {
        Mat2 diag = Mat2::diag(zeta(2 * spec.n, 1), zeta(2 * spec.n, 2 * spec.n - 1));
        return {{matB.scaled(zeta(2 * spec.m, 1)), 2 * spec.m}, {diag, 2}};
      }
      if (spec.m % 2 == 0) return {{matB.scaled(zeta(4 * spec.m, 1)), 4 * spec.m}};
      return {{matB.scaled(zeta(2 * spec.m, 1)), 4 * spec.m}};
    case GroupFamily::BT: {
      Cyclotomic i4 = zeta(4, 1);
      Cyclotomic half(Rational(1, 2), field);
      Cyclotomic one(Rational(1), field);
      Mat2 matC{(one + i4) * half, (i4 - one) * half, (one + i4) * half, (one - i4) * half};
      long tw = gcd_long(spec.m, 6) == 3 ? 6 * spec.m : 2 * spec.m;
      return {{matC.scaled(zeta(tw, 1)), 3 * spec.m}};
    }
    case GroupFamily::BO: {
      Mat2 diag8 = Mat2::diag(zeta(8, 1), zeta(8, 7));
      return {{diag8.scaled(zeta(2 * spec.m, 1)), 2 * spec.m}};
    }
    case GroupFamily::BI: {
      if (spec.m == 1) return {};
      Mat2 s = Mat2::identity(field).scaled(zeta(spec.m, 1));
      return {{s, spec.m}};
    }
  }
  throw ParameterError("unhandled family");
}

}  // namespace coxres
