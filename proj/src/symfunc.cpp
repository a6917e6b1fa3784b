#include "bshopf/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bshopf/checked.hpp"
#include "bshopf/errors.hpp"

namespace bshopf {

namespace {

void require_positive(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw InputError("parts must be positive");
}

std::string join_parts(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

template <typename Map, typename Key>
void add_term(Map& terms, const Key& key, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, 0);
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms.erase(it);
}

using Word = std::vector<int>;
using WordSum = std::map<Word, std::int64_t>;

// Quasi-shuffle of two compositions as raw part lists.
WordSum shuffle_words(const Word& a, std::size_t i, const Word& b, std::size_t j) {
  WordSum out;
  if (i == a.size() || j == b.size()) {
    Word w(a.begin() + i, a.end());
    w.insert(w.end(), b.begin() + j, b.end());
    out[w] = 1;
    return out;
  }
  auto prepend = [&](int head, const WordSum& tail) {
    for (const auto& [w, c] : tail) {
      Word x{head};
      x.insert(x.end(), w.begin(), w.end());
      add_term(out, x, c);
    }
  };
  prepend(a[i], shuffle_words(a, i + 1, b, j));
  prepend(b[j], shuffle_words(a, i, b, j + 1));
  prepend(a[i] + b[j], shuffle_words(a, i + 1, b, j + 1));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::operator+(const Partition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(p));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
}

Composition Composition::from_descents(int n, Mask descents) {
  if (n < 0 || n > kMaxGround) throw InputError("composition weight out of range");
  if (n == 0) return {};
  if (!subset_of(descents, full_mask(n - 1))) throw InputError("descent outside [n-1]");
  std::vector<int> parts;
  int last = 0;
  for (int i = 1; i < n; ++i) {
    if (descents & bit(i - 1)) {
      parts.push_back(i - last);
      last = i;
    }
  }
  parts.push_back(n - last);
  return Composition(std::move(parts));
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Mask Composition::descents() const {
  Mask s = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    s |= bit(sum - 1);
  }
  return s;
}

Composition Composition::opposite() const {
  const int n = weight();
  if (n == 0) return {};
  return from_descents(n, full_mask(n - 1) & ~descents());
}

Partition Composition::shape() const { return Partition(parts_); }

std::string Composition::to_string() const { return join_parts(parts_); }

bool precedes(const Composition& beta, const Composition& alpha) {
  if (beta.weight() != alpha.weight()) throw InputError("compositions of different weight");
  return subset_of(beta.descents(), alpha.descents());
}

std::vector<Composition> compositions(int n) {
  require_at_most("composition weight", n, 24);
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (Mask s = 0; s <= full_mask(n - 1); ++s) out.push_back(Composition::from_descents(n, s));
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------

QSymElement QSymElement::monomial(const Composition& alpha, std::int64_t coeff) {
  QSymElement x;
  x.add(alpha, coeff);
  return x;
}

void QSymElement::add(const Composition& alpha, std::int64_t coeff) { add_term(terms_, alpha, coeff); }

std::int64_t QSymElement::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? 0 : it->second;
}

bool QSymElement::is_symmetric() const {
  // every rearrangement of a present composition must carry the same coefficient
  for (const auto& [alpha, c] : terms_) {
    std::vector<int> p = alpha.parts();
    std::sort(p.begin(), p.end());
    do {
      if (coefficient(Composition(p)) != c) return false;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return true;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  for (const auto& [a, c] : other.terms_) add(a, c);
  return *this;
}

QSymElement operator-(QSymElement a, const QSymElement& b) {
  for (const auto& [k, c] : b.terms_) a.add(k, checked::neg(c));
  return a;
}

PSymElement PSymElement::power_sum(const Partition& lambda, std::int64_t coeff) {
  PSymElement p;
  p.add(lambda, coeff);
  return p;
}

void PSymElement::add(const Partition& lambda, std::int64_t coeff) { add_term(terms_, lambda, coeff); }

std::int64_t PSymElement::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

PSymElement& PSymElement::operator+=(const PSymElement& other) {
  for (const auto& [l, c] : other.terms_) add(l, c);
  return *this;
}

PSymElement operator-(PSymElement a, const PSymElement& b) {
  for (const auto& [k, c] : b.terms_) a.add(k, checked::neg(c));
  return a;
}

PSymElement operator*(const PSymElement& a, const PSymElement& b) {
  PSymElement out;
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) out.add(la + lb, checked::mul(ca, cb));
  return out;
}

// ---------------------------------------------------------------------------

QSymElement quasi_shuffle(const QSymElement& x, const QSymElement& y) {
  QSymElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const std::int64_t c = checked::mul(ca, cb);
      for (const auto& [w, k] : shuffle_words(a.parts(), 0, b.parts(), 0))
        out.add(Composition(w), checked::mul(c, k));
    }
  }
  return out;
}

QSymElement powersum_to_monomial(const PSymElement& p) {
  QSymElement out;
  for (const auto& [lambda, c] : p.terms()) {
    QSymElement term = QSymElement::monomial(Composition{}, c);
    for (int part : lambda.parts())
      term = quasi_shuffle(term, QSymElement::monomial(Composition({part})));
    out += term;
  }
  return out;
}

std::int64_t specialize(const QSymElement& x, std::int64_t m) {
  std::int64_t total = 0;
  for (const auto& [alpha, c] : x.terms())
    total = checked::add(total, checked::mul(c, checked::binomial(m, alpha.length())));
  return total;
}

std::int64_t specialize(const PSymElement& p, std::int64_t m) {
  std::int64_t total = 0;
  for (const auto& [lambda, c] : p.terms())
    total = checked::add(total, checked::mul(c, checked::pow(m, lambda.length())));
  return total;
}

std::int64_t zeta_q_inverse_eval(const QSymElement& x) {
  std::int64_t total = 0;
  for (const auto& [alpha, c] : x.terms())
    total = checked::add(total, checked::sign(alpha.length()) * c);
  return total;
}

}  // namespace bshopf
