#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bshopf/core.hpp"
#include "bshopf/symfunc.hpp"

namespace bshopf {

/// Integer combination of words in noncommuting letters. Used with the
/// alphabet {a, b} for ab-indices and {c, d} for cd-indices.
class WordPolynomial {
 public:
  using Terms = std::map<std::string, std::int64_t>;

  WordPolynomial() = default;
  static WordPolynomial word(const std::string& w, std::int64_t coeff = 1);

  void add(const std::string& w, std::int64_t coeff);
  const Terms& terms() const { return terms_; }
  std::int64_t coefficient(const std::string& w) const;
  bool is_zero() const { return terms_.empty(); }
  /// Applies f to every letter of every word (f maps a letter to a letter).
  template <typename F>
  WordPolynomial map_letters(F&& f) const {
    WordPolynomial out;
    for (const auto& [w, c] : terms_) {
      std::string v = w;
      for (char& ch : v) ch = f(ch);
      out.add(v, c);
    }
    return out;
  }
  std::string to_string() const;

  WordPolynomial& operator+=(const WordPolynomial& other);
  friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
  friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b);
  /// Concatenation product.
  friend WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b);
  friend WordPolynomial operator*(std::int64_t k, const WordPolynomial& a);
  bool operator==(const WordPolynomial&) const = default;

 private:
  Terms terms_;
};

/// Words over {a, b}.
using NCPolynomial = WordPolynomial;
/// Words over {c, d}; c has degree 1 and d degree 2.
using CDPolynomial = WordPolynomial;

/// Degree of a cd-word.
int cd_degree(const std::string& w);

struct FlagVector {
  int n = 0;
  std::map<Composition, std::int64_t> f;  // zeta_alpha
  std::map<Composition, std::int64_t> h;  // eta_alpha
};

/// eta_alpha = sum over beta refining-below alpha of (-1)^{k(alpha)-k(beta)} zeta_beta.
/// Guarded at rank 12.
FlagVector flag_vectors(const BuildingSet& b);

/// Recovers f from h: zeta_alpha = sum over beta below alpha of eta_beta.
std::map<Composition, std::int64_t> f_from_h(const std::map<Composition, std::int64_t>& h);

/// sum over alpha of eta_alpha u_alpha, where u_alpha has length n-1 and the
/// letter b exactly at the positions in S(alpha). Requires rank >= 1; guarded at 12.
NCPolynomial ab_index(const BuildingSet& b);

/// Substitutes c = a + b, d = ab + ba.
NCPolynomial expand_cd(const CDPolynomial& p);

/// The cd-index of an eulerian building set, computed by the recursion over
/// discrete first blocks and by the closed sum over compositions; both must
/// agree and expand to ab_index(b). Throws InputError on non-eulerian input
/// or rank 0. Guarded at rank 12.
CDPolynomial cd_index(const BuildingSet& b);

/// The two routes separately (no eulerian check, no cross-check).
CDPolynomial cd_index_recursive(const BuildingSet& b);
CDPolynomial cd_index_closed_form(const BuildingSet& b);

/// The cd-index of the discrete building set of rank n, from the recursion
/// in n alone. 1 <= n <= 12.
CDPolynomial andre_phi(int n);

/// Whether some cd-polynomial with rational coefficients expands to `ab`
/// (which must be homogeneous). Decided by exact Gaussian elimination.
bool cd_rewritable(const NCPolynomial& ab);

}  // namespace bshopf
