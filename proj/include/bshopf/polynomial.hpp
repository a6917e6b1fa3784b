#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bshopf {

/// Univariate polynomial with 64-bit integer coefficients, ascending degree.
/// Trailing zero coefficients are never stored; the zero polynomial is {}.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial monomial(unsigned degree, std::int64_t coeff = 1);
  static IntPolynomial constant(std::int64_t c) { return monomial(0, c); }

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::int64_t operator()(std::int64_t x) const;
  std::string to_string(const std::string& var = "m") const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Falling factorial m(m-1)...(m-k+1) in the standard basis.
IntPolynomial falling_factorial(unsigned k);

/// Sparse bivariate integer polynomial in x and y.
class BivariatePolynomial {
 public:
  using Terms = std::map<std::pair<int, int>, std::int64_t>;  // (deg x, deg y)

  void add(int dx, int dy, std::int64_t coeff);
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(int dx, int dy) const;
  std::int64_t operator()(std::int64_t x, std::int64_t y) const;
  std::string to_string() const;
  bool operator==(const BivariatePolynomial&) const = default;

 private:
  Terms terms_;
};

}  // namespace bshopf
