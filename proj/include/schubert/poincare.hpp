#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

// Dense integer polynomial in t; coefficient k multiplies t^k. Trailing zeros are trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial monomial(std::int64_t c, int degree);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t evaluate(std::int64_t t) const;
  // t -> t^step
  IntPolynomial substitute_power(int step) const;
  bool is_palindromic() const;

  // "1+2t+2t^2+t^3"
  std::string str() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ != b.c_; }

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

// Quotient of a / b; throws IntegrityError when the remainder is nonzero.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// 1 + t + ... + t^(m-1)
IntPolynomial t_integer(int m);
IntPolynomial t_factorial(int m);
// (sum parts)_t! / prod (part)_t!, then t -> t^step.
IntPolynomial t_multinomial(const std::vector<int>& parts, int step = 1);

int big_L(const ThetaSet& th);
IntPolynomial mod2_poincare(const ThetaSet& th);
IntPolynomial free_poincare(const ThetaSet& th);
IntPolynomial torsion_poincare(const ThetaSet& th);

}  // namespace schubert
