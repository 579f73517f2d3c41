#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace permudiag {

/// Dense univariate polynomial with exact integer coefficients,
/// stored constant term first and normalized (no trailing zeros).
/// The zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(int degree, long long coeff = 1);
  /// t(t-1)(t-2)...(t-i+1); the empty product for i = 0.
  static IntPolynomial falling_factorial(int i);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long at(int k) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  long long eval(long long x) const;
  /// q^shift * P(1/q) as a polynomial; requires shift >= degree().
  IntPolynomial reversed(int shift) const;
  /// P is palindromic iff P(t) = t^deg * P(1/t).
  bool is_palindromic() const;
  bool is_unimodal() const;
  /// Multiplication by t^k.
  IntPolynomial shifted(int k) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(long long s) const;
  bool operator==(const IntPolynomial& o) const = default;

  std::string to_string(const std::string& var = "t") const;
  /// JSON: {"coeffs": [c0, c1, ...]} ascending degree.
  std::string to_json() const;
  static IntPolynomial from_json(const std::string& text);

 private:
  void normalize();
  std::vector<long long> coeffs_;
};

}  // namespace permudiag
