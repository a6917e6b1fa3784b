#include "bshopf/polynomial.hpp"

#include <algorithm>

#include "bshopf/checked.hpp"

namespace bshopf {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(unsigned degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::operator()(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = checked::add(checked::mul(r, x), *it);
  return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::add(a.coefficient(i), b.coefficient(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::sub(a.coefficient(i), b.coefficient(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = checked::add(c[i + j], checked::mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPolynomial(std::move(c));
}

IntPolynomial falling_factorial(unsigned k) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) p = p * IntPolynomial({-static_cast<std::int64_t>(i), 1});
  return p;
}

void BivariatePolynomial::add(int dx, int dy, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({dx, dy}, 0);
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t BivariatePolynomial::coefficient(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t BivariatePolynomial::operator()(std::int64_t x, std::int64_t y) const {
  std::int64_t r = 0;
  for (const auto& [deg, c] : terms_)
    r = checked::add(r, checked::mul(c, checked::mul(checked::pow(x, deg.first), checked::pow(y, deg.second))));
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [dx, dy] = it->first;
    const std::int64_t c = it->second;
    const std::int64_t a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1 || (dx == 0 && dy == 0)) s += std::to_string(a);
    if (dx >= 1) s += "x" + (dx >= 2 ? "^" + std::to_string(dx) : std::string());
    if (dy >= 1) s += "y" + (dy >= 2 ? "^" + std::to_string(dy) : std::string());
  }
  return s;
}

}  // namespace bshopf
