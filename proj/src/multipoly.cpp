#include "coxres/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "coxres/errors.hpp"

namespace coxres {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Cyclotomic& c) {
  MultiPoly p(std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  long idx = p.var_index(name);
  if (idx < 0) throw ParameterError("unknown variable " + name);
  std::vector<int> exps(p.vars_.size(), 0);
  exps[idx] = 1;
  p.add_term(exps, Cyclotomic(Rational(1)));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, std::vector<int> exps,
                              const Cyclotomic& c) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.vars_.size()) throw ParameterError("exponent vector length mismatch");
  p.add_term(exps, c);
  return p;
}

long MultiPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return -1;
  return it - vars_.begin();
}

void MultiPoly::add_term(const std::vector<int>& exps, const Cyclotomic& c) {
  if (exps.size() != vars_.size()) throw ParameterError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(vars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

namespace {

void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables())
    throw ParameterError("polynomials over different variable lists");
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  MultiPoly p(a);
  for (const auto& [e, c] : b.terms()) p.add_term(e, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  MultiPoly p(a.variables());
  std::vector<int> exps(a.variables().size());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      p.add_term(exps, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
  MultiPoly p(vars_);
  if (c.is_zero()) return p;
  for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
  return p;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) throw ParameterError("negative polynomial power");
  MultiPoly result = MultiPoly::constant(vars_, Cyclotomic(Rational(1)));
  MultiPoly base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (vars_ != other.vars_ || terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
  if (vars_.empty()) return *this;
  std::vector<const MultiPoly*> images(vars_.size(), nullptr);
  const std::vector<std::string>* out_vars = nullptr;
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) throw ParameterError("unassigned variable " + vars_[i]);
    images[i] = &it->second;
    if (!out_vars)
      out_vars = &it->second.variables();
    else if (*out_vars != it->second.variables())
      throw ParameterError("substitution images over different variable lists");
  }
  MultiPoly result(*out_vars);
  for (const auto& [exps, coeff] : terms_) {
    MultiPoly term = MultiPoly::constant(*out_vars, coeff);
    for (size_t i = 0; i < vars_.size(); ++i) {
      int e = exps[i];
      if (e == 0) continue;
      if (e > 0) {
        term = term * images[i]->pow(e);
      } else {
        // Negative exponents need an invertible (single-term) image.
        if (images[i]->term_count() != 1)
          throw ParameterError("negative power of non-monomial image for " + vars_[i]);
        const auto& [ie, ic] = *images[i]->terms().begin();
        std::vector<int> inv(ie.size());
        for (size_t k = 0; k < ie.size(); ++k) inv[k] = ie[k] * e;
        term = term * MultiPoly::monomial(*out_vars, inv, ic.inverse().pow(-e));
      }
    }
    result = result + term;
  }
  return result;
}

long MultiPoly::total_degree() const {
  long best = 0;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_homogeneous() const {
  bool first = true;
  long deg = 0;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (int x : e) d += x;
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.to_string();
    bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    bool unit = cs == "1";
    if (!unit || !has_vars) {
      if (cs.find(' ') != std::string::npos)
        out << "(" << cs << ")";
      else
        out << cs;
      if (has_vars) out << "*";
    }
    bool firstv = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!firstv) out << "*";
      firstv = false;
      out << vars_[i];
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

MultiPoly cyclotomic_polynomial(long n) {
  MultiPoly p({"x"});
  std::vector<Int> coeffs = cyclotomic_coeffs(n);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      p.add_term({static_cast<int>(i)}, Cyclotomic(Rational(coeffs[i])));
  return p;
}

MultiPoly poly_substitute(const MultiPoly& p,
                          const std::map<std::string, MultiPoly>& assignment) {
  return p.substitute(assignment);
}

}  // namespace coxres
