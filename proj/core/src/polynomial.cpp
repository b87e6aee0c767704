#include "monotop/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace monotop {

Exponents exponents_of(Monomial m, std::size_t num_vars) {
  Exponents e(num_vars, 0);
  for (std::size_t i : m.support()) {
    if (i >= num_vars) throw UniverseMismatch("exponents_of: variable outside universe");
    e[i] = 1;
  }
  return e;
}

Exponents square_of(std::size_t i, std::size_t num_vars) {
  Exponents e(num_vars, 0);
  e.at(i) = 2;
  return e;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw UniverseMismatch("lcm: exponent vectors differ in length");
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents product(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw UniverseMismatch("product: exponent vectors differ in length");
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned s = unsigned{a[i]} + unsigned{b[i]};
    if (s > 255) throw BudgetExceeded("exponent exceeds 255");
    out[i] = static_cast<std::uint8_t>(s);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw UniverseMismatch("divides: exponent vectors differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::size_t total_degree(const Exponents& e) {
  std::size_t d = 0;
  for (auto x : e) d += x;
  return d;
}

MultigradedPolynomial MultigradedPolynomial::constant(std::size_t num_vars, const BigInt& c) {
  MultigradedPolynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultigradedPolynomial MultigradedPolynomial::monomial(const Exponents& e, const BigInt& c) {
  MultigradedPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void MultigradedPolynomial::check_arity(std::size_t n) const {
  if (n != num_vars_) throw UniverseMismatch("polynomial arity mismatch");
}

BigInt MultigradedPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt{0} : it->second;
}

void MultigradedPolynomial::add_term(const Exponents& e, const BigInt& c) {
  check_arity(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultigradedPolynomial& MultigradedPolynomial::operator+=(const MultigradedPolynomial& o) {
  check_arity(o.num_vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultigradedPolynomial& MultigradedPolynomial::operator-=(const MultigradedPolynomial& o) {
  check_arity(o.num_vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultigradedPolynomial operator*(const MultigradedPolynomial& a, const MultigradedPolynomial& b) {
  a.check_arity(b.num_vars_);
  MultigradedPolynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(product(ea, eb), ca * cb);
  }
  return out;
}

MultigradedPolynomial MultigradedPolynomial::times(const Exponents& e, const BigInt& c) const {
  check_arity(e.size());
  MultigradedPolynomial out(num_vars_);
  if (c == 0) return out;
  for (const auto& [ex, cx] : terms_) out.terms_.emplace(product(ex, e), cx * c);
  return out;
}

std::string MultigradedPolynomial::to_string(const VariableUniverse* names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt{-c} : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names && i < names->size() ? names->name(i) : "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
  }
  return os.str();
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UnivariatePolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt{0};
}

void UnivariatePolynomial::add_to(std::size_t k, const BigInt& c) {
  if (coeffs_.size() <= k) coeffs_.resize(k + 1, 0);
  coeffs_[k] += c;
  trim();
}

BigInt UnivariatePolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt{-c} : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UnivariatePolynomial diagonal(const MultigradedPolynomial& p) {
  UnivariatePolynomial out;
  for (const auto& [e, c] : p.terms()) out.add_to(total_degree(e), c);
  return out;
}

}  // namespace monotop
