#include "permudiag/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace permudiag {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, long long coeff) {
  if (coeff == 0) return zero();
  std::vector<long long> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::falling_factorial(int i) {
  IntPolynomial p = one();
  for (int k = 0; k < i; ++k) {
    p = p * IntPolynomial({-k, 1});
  }
  return p;
}

long long IntPolynomial::at(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

long long IntPolynomial::eval(long long x) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::reversed(int shift) const {
  if (shift < degree()) {
    throw std::invalid_argument("reversed: shift below degree");
  }
  std::vector<long long> c(shift + 1, 0);
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
    c[shift - k] = coeffs_[k];
  }
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::is_palindromic() const {
  if (is_zero()) return true;
  return *this == reversed(degree());
}

bool IntPolynomial::is_unimodal() const {
  // Coefficients first weakly increase, then weakly decrease.
  int i = 0;
  int m = static_cast<int>(coeffs_.size());
  while (i + 1 < m && coeffs_[i] <= coeffs_[i + 1]) ++i;
  while (i + 1 < m && coeffs_[i] >= coeffs_[i + 1]) ++i;
  return i + 1 >= m;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return zero();
  std::vector<long long> c(coeffs_.size() + k, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<long long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<long long> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(long long s) const {
  std::vector<long long> c = coeffs_;
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      c = std::llabs(c);
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (k == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += var;
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string IntPolynomial::to_json() const {
  nlohmann::json j;
  j["coeffs"] = coeffs_;
  return j.dump();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return IntPolynomial(j.at("coeffs").get<std::vector<long long>>());
}

}  // namespace permudiag
