#pragma once

#include <cstdint>

#include "bshopf/errors.hpp"

namespace bshopf::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t pow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

/// (-1)^k
constexpr std::int64_t sign(unsigned long long k) { return (k & 1U) ? -1 : 1; }

/// Generalized binomial coefficient (m choose k) = m(m-1)...(m-k+1)/k!, any integer m.
std::int64_t binomial(std::int64_t m, unsigned k);

/// n! / (parts[0]! parts[1]! ...)
template <typename Range>
std::int64_t multinomial(const Range& parts) {
  std::int64_t r = 1;
  std::int64_t total = 0;
  for (auto p : parts) {
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(p); ++i) {
      total = add(total, 1);
      r = mul(r, total) / i;
    }
  }
  return r;
}

std::int64_t factorial(unsigned n);

}  // namespace bshopf::checked
