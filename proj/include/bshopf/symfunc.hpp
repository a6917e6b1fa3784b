#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bshopf/bits.hpp"

namespace bshopf {

/// A multiset of positive integers, stored in decreasing order.
class Partition {
 public:
  Partition() = default;
  /// Sorts; throws InputError on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// Union of the two multisets.
  Partition operator+(const Partition& other) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// An ordered sequence of positive integers. Compositions of n correspond to
/// subsets S(alpha) of {1, ..., n-1} (partial sums); Mask bit i-1 stands for i.
class Composition {
 public:
  Composition() = default;
  /// Throws InputError on a nonpositive part.
  explicit Composition(std::vector<int> parts);
  static Composition from_descents(int n, Mask descents);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Mask descents() const;
  /// The composition whose descent set is the complement of this one's.
  Composition opposite() const;
  /// Underlying partition s(alpha).
  Partition shape() const;
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// beta refines-below alpha: S(beta) is a subset of S(alpha). Same weight required.
bool precedes(const Composition& beta, const Composition& alpha);

/// All 2^(n-1) compositions of n (one, the empty composition, for n = 0),
/// ordered by descent mask.
std::vector<Composition> compositions(int n);
/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);

/// Sparse integer combination of monomial quasi-symmetric functions M_alpha.
class QSymElement {
 public:
  using Terms = std::map<Composition, std::int64_t>;

  QSymElement() = default;
  static QSymElement monomial(const Composition& alpha, std::int64_t coeff = 1);

  void add(const Composition& alpha, std::int64_t coeff);
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const Composition& alpha) const;
  bool is_zero() const { return terms_.empty(); }
  /// Coefficients are constant on every class {alpha : shape(alpha) = lambda}.
  bool is_symmetric() const;

  QSymElement& operator+=(const QSymElement& other);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b);
  bool operator==(const QSymElement&) const = default;

 private:
  Terms terms_;
};

/// Sparse integer combination of power sums p_lambda.
class PSymElement {
 public:
  using Terms = std::map<Partition, std::int64_t>;

  PSymElement() = default;
  static PSymElement power_sum(const Partition& lambda, std::int64_t coeff = 1);

  void add(const Partition& lambda, std::int64_t coeff);
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const Partition& lambda) const;
  bool is_zero() const { return terms_.empty(); }

  PSymElement& operator+=(const PSymElement& other);
  friend PSymElement operator+(PSymElement a, const PSymElement& b) { return a += b; }
  friend PSymElement operator-(PSymElement a, const PSymElement& b);
  friend PSymElement operator*(const PSymElement& a, const PSymElement& b);
  bool operator==(const PSymElement&) const = default;

 private:
  Terms terms_;
};

/// Product in QSym: bilinear extension of the quasi-shuffle of compositions.
QSymElement quasi_shuffle(const QSymElement& x, const QSymElement& y);

/// Monomial expansion, with p_n = M_(n) and products taken by quasi_shuffle.
QSymElement powersum_to_monomial(const PSymElement& p);

/// Principal specialization at 1^m: M_alpha -> (m choose length(alpha)).
/// Any integer m is accepted (binomials extend polynomially).
std::int64_t specialize(const QSymElement& x, std::int64_t m);
/// p_lambda -> m^(number of parts of lambda).
std::int64_t specialize(const PSymElement& p, std::int64_t m);

/// The inverse of the universal character: M_alpha -> (-1)^length(alpha).
std::int64_t zeta_q_inverse_eval(const QSymElement& x);

}  // namespace bshopf
