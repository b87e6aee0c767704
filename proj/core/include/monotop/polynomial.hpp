#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monotop/bigint.hpp"
#include "monotop/ideal.hpp"

namespace monotop {

/// Exponent vector of a (not necessarily square-free) monomial. Exponents
/// above 1 appear for the implicit squares and in polynomial products.
using Exponents = std::vector<std::uint8_t>;

Exponents exponents_of(Monomial m, std::size_t num_vars);
/// Square x_i^2 as an exponent vector.
Exponents square_of(std::size_t i, std::size_t num_vars);
/// Componentwise max.
Exponents lcm(const Exponents& a, const Exponents& b);
/// Componentwise sum; throws BudgetExceeded when an exponent passes 255.
Exponents product(const Exponents& a, const Exponents& b);
bool divides(const Exponents& a, const Exponents& b);
std::size_t total_degree(const Exponents& e);

/// Integer polynomial in n variables with arbitrary-precision coefficients.
/// Zero coefficients are never stored.
class MultigradedPolynomial {
 public:
  explicit MultigradedPolynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static MultigradedPolynomial constant(std::size_t num_vars, const BigInt& c);
  static MultigradedPolynomial monomial(const Exponents& e, const BigInt& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& c);

  MultigradedPolynomial& operator+=(const MultigradedPolynomial& o);
  MultigradedPolynomial& operator-=(const MultigradedPolynomial& o);
  friend MultigradedPolynomial operator+(MultigradedPolynomial a, const MultigradedPolynomial& b) {
    return a += b;
  }
  friend MultigradedPolynomial operator-(MultigradedPolynomial a, const MultigradedPolynomial& b) {
    return a -= b;
  }
  friend MultigradedPolynomial operator*(const MultigradedPolynomial& a,
                                         const MultigradedPolynomial& b);
  /// Multiplies by a monomial with coefficient c.
  MultigradedPolynomial times(const Exponents& e, const BigInt& c = 1) const;

  friend bool operator==(const MultigradedPolynomial&, const MultigradedPolynomial&) = default;

  std::string to_string(const VariableUniverse* names = nullptr) const;

 private:
  void check_arity(std::size_t n) const;

  std::size_t num_vars_ = 0;
  std::map<Exponents, BigInt> terms_;
};

/// Dense univariate integer polynomial; coeffs[k] multiplies t^k.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  void add_to(std::size_t k, const BigInt& c);
  BigInt evaluate(const BigInt& t) const;

  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Substitutes t for every variable.
UnivariatePolynomial diagonal(const MultigradedPolynomial& p);

}  // namespace monotop
