#pragma once

#include <string>
#include <vector>

#include "polytopal/rational.hpp"

namespace polytopal {

/// Integer-coefficient polynomial. coeffs()[i] is the coefficient of x^i and
/// no trailing zeros are stored; the zero polynomial has an empty coefficient
/// list and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);
  static IntPolynomial constant(const Int& c);
  static IntPolynomial monomial(const Int& c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored degree.
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Int& c) const;
  bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// (x + c)^k, expanded exactly.
IntPolynomial binomial_power(long c, unsigned long k);

/// Truncation: keeps the coefficients of x^0..x^r. r = -1 gives zero.
IntPolynomial truncate(const IntPolynomial& q, long r);

/// (1 + x + ... + x^(p-1))^r.
IntPolynomial cyclotomic_power(long p, unsigned long r);

/// Palindromy of the coefficient sequence a_0..a_n (absent entries read 0).
bool is_symmetric(const IntPolynomial& q, int n);

/// Coefficients a_0..a_n weakly increase then weakly decrease.
bool is_unimodal(const IntPolynomial& q, int n);

bool divisible_by(const IntPolynomial& q, const Int& m);

}  // namespace polytopal
