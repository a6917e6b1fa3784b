#include "bshopf/cdindex.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "bshopf/checked.hpp"
#include "bshopf/chromatic.hpp"
#include "bshopf/errors.hpp"
#include "bshopf/eulerian.hpp"

namespace bshopf {

namespace {

// The recursion carries factors 1/2. Everything below works with
// Phi'(R) = 2^{|R|-1} Phi(R), which keeps the arithmetic integral:
// 2^j omega(j) = 2^{j-1} W_j with
//   W_j = (c^2 - 2d)^{(j-1)/2} c   for odd j,
//   W_j = -(c^2 - 2d)^{j/2}        for even j.

CDPolynomial c2_minus_2d_power(int e) {
  const CDPolynomial base = CDPolynomial::word("cc") - 2 * CDPolynomial::word("d");
  CDPolynomial p = CDPolynomial::word("");
  for (int i = 0; i < e; ++i) p = p * base;
  return p;
}

// 2^j omega(j)
CDPolynomial scaled_omega(int j) {
  const std::int64_t scale = checked::pow(2, j - 1);
  if (j % 2 == 1) return scale * (c2_minus_2d_power((j - 1) / 2) * CDPolynomial::word("c"));
  return checked::neg(scale) * c2_minus_2d_power(j / 2);
}

// 2^{j-1} delta_j
CDPolynomial scaled_delta(int j) {
  if (j % 2 == 0) return {};
  return checked::pow(2, j - 1) * c2_minus_2d_power((j - 1) / 2);
}

CDPolynomial unscale(const CDPolynomial& p, int n) {
  const std::int64_t scale = checked::pow(2, n - 1);
  CDPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    if (c % scale != 0) throw CrossCheckError("cd-index coefficient of " + w + " is not an integer");
    out.add(w, c / scale);
  }
  return out;
}

void require_cd_rank(const BuildingSet& b) {
  if (b.rank() < 1) throw InputError("cd-index needs rank >= 1");
  require_at_most("cd-index rank", b.rank(), 12);
}

}  // namespace

// ---------------------------------------------------------------------------

WordPolynomial WordPolynomial::word(const std::string& w, std::int64_t coeff) {
  WordPolynomial p;
  p.add(w, coeff);
  return p;
}

void WordPolynomial::add(const std::string& w, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, 0);
  it->second = checked::add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t WordPolynomial::coefficient(const std::string& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::string WordPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    const std::int64_t a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1 || w.empty()) s += std::to_string(a);
    s += w;
  }
  return s;
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, checked::neg(c));
  return a;
}

WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b) {
  WordPolynomial out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, checked::mul(ca, cb));
  return out;
}

WordPolynomial operator*(std::int64_t k, const WordPolynomial& a) {
  WordPolynomial out;
  for (const auto& [w, c] : a.terms_) out.add(w, checked::mul(k, c));
  return out;
}

int cd_degree(const std::string& w) {
  int d = 0;
  for (char ch : w) d += ch == 'd' ? 2 : 1;
  return d;
}

// ---------------------------------------------------------------------------

FlagVector flag_vectors(const BuildingSet& b) {
  const std::vector<std::int64_t> f = flag_f_values(b);
  FlagVector out;
  out.n = b.rank();
  if (out.n == 0) {
    out.f[Composition{}] = 1;
    out.h[Composition{}] = 1;
    return out;
  }
  for (Mask s = 0; s < f.size(); ++s) {
    const Composition alpha = Composition::from_descents(out.n, s);
    out.f[alpha] = f[s];
    std::int64_t eta = 0;
    for_each_subset(s, [&](Mask t) {
      eta = checked::add(eta, checked::sign(popcount(s) - popcount(t)) * f[t]);
    });
    out.h[alpha] = eta;
  }
  return out;
}

std::map<Composition, std::int64_t> f_from_h(const std::map<Composition, std::int64_t>& h) {
  std::map<Composition, std::int64_t> f;
  for (const auto& [alpha, unused] : h) {
    std::int64_t total = 0;
    const int n = alpha.weight();
    for_each_subset(alpha.descents(), [&](Mask t) {
      auto it = h.find(Composition::from_descents(n, t));
      if (it != h.end()) total = checked::add(total, it->second);
    });
    f[alpha] = total;
  }
  return f;
}

NCPolynomial ab_index(const BuildingSet& b) {
  const int n = b.rank();
  if (n < 1) throw InputError("ab-index needs rank >= 1");
  NCPolynomial out;
  for (const auto& [alpha, eta] : flag_vectors(b).h) {
    std::string u(n - 1, 'a');
    for (int i = 0; i < n - 1; ++i)
      if (alpha.descents() & bit(i)) u[i] = 'b';
    out.add(u, eta);
  }
  return out;
}

NCPolynomial expand_cd(const CDPolynomial& p) {
  const NCPolynomial c = NCPolynomial::word("a") + NCPolynomial::word("b");
  const NCPolynomial d = NCPolynomial::word("ab") + NCPolynomial::word("ba");
  NCPolynomial out;
  for (const auto& [w, coeff] : p.terms()) {
    NCPolynomial term = NCPolynomial::word("", coeff);
    for (char ch : w) {
      if (ch != 'c' && ch != 'd') throw InputError("cd-word contains a letter other than c, d");
      term = term * (ch == 'c' ? c : d);
    }
    out += term;
  }
  return out;
}

CDPolynomial cd_index_recursive(const BuildingSet& b) {
  require_cd_rank(b);
  const int n = b.rank();
  const DiscreteTable discrete(b);
  std::vector<CDPolynomial> omega(n + 1), delta(n + 1);
  for (int j = 1; j <= n; ++j) {
    omega[j] = scaled_omega(j);
    delta[j] = scaled_delta(j);
  }
  // phi[R] = sum over proper discrete I of omega(|I|) phi[R \ I]
  //          + [b|_R discrete] delta_{|R|}        (scaled)
  std::vector<CDPolynomial> phi(std::size_t{1} << n);
  for (Mask r = 1; r <= b.ground(); ++r) {
    const int size = popcount(r);
    std::vector<CDPolynomial> by_size(size);
    for_each_nonempty_subset(r, [&](Mask i) {
      if (i != r && discrete(i)) by_size[popcount(i)] += phi[r & ~i];
    });
    CDPolynomial p;
    for (int j = 1; j < size; ++j)
      if (!by_size[j].is_zero()) p += omega[j] * by_size[j];
    if (discrete(r)) p += delta[size];
    phi[r] = std::move(p);
  }
  return unscale(phi[b.ground()], n);
}

CDPolynomial cd_index_closed_form(const BuildingSet& b) {
  require_cd_rank(b);
  const int n = b.rank();
  const std::vector<std::int64_t> f = flag_f_values(b);
  CDPolynomial total;
  for (Mask s = 0; s < f.size(); ++s) {
    if (f[s] == 0) continue;
    const std::vector<int> parts = Composition::from_descents(n, s).parts();
    CDPolynomial term = CDPolynomial::word("", f[s]);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) term = term * scaled_omega(parts[i]);
    total += term * scaled_delta(parts.back());
  }
  return unscale(total, n);
}

CDPolynomial cd_index(const BuildingSet& b) {
  require_cd_rank(b);
  if (!is_eulerian(b)) throw InputError("building set is not eulerian");
  const CDPolynomial phi = cd_index_recursive(b);
  if (phi != cd_index_closed_form(b))
    throw CrossCheckError("cd-index: recursive and closed-form routes disagree");
  if (expand_cd(phi) != ab_index(b)) throw CrossCheckError("cd-index does not expand to the ab-index");
  return phi;
}

CDPolynomial andre_phi(int n) {
  if (n < 1 || n > 12) throw InputError("andre_phi needs 1 <= n <= 12");
  std::vector<CDPolynomial> phi(n + 1);  // scaled by 2^{m-1}
  for (int m = 1; m <= n; ++m) {
    CDPolynomial p = scaled_delta(m);
    for (int k = 1; k < m; ++k) p += checked::binomial(m, k) * (scaled_omega(k) * phi[m - k]);
    phi[m] = std::move(p);
  }
  return unscale(phi[n], n);
}

bool cd_rewritable(const NCPolynomial& ab) {
  using boost::multiprecision::cpp_rational;
  if (ab.is_zero()) return true;
  const auto degree = static_cast<int>(ab.terms().begin()->first.size());
  for (const auto& [w, c] : ab.terms())
    if (static_cast<int>(w.size()) != degree) throw InputError("ab-polynomial is not homogeneous");
  require_at_most("cd rewritability degree", degree, 10);

  std::vector<std::string> cd_words;
  std::function<void(std::string, int)> gen = [&](std::string w, int left) {
    if (left == 0) {
      cd_words.push_back(w);
      return;
    }
    gen(w + "c", left - 1);
    if (left >= 2) gen(w + "d", left - 2);
  };
  gen("", degree);

  // rows: ab-words; columns: expansions of the cd-words, then the target
  const std::size_t rows = std::size_t{1} << degree, cols = cd_words.size();
  auto row_of = [&](const std::string& w) {
    std::size_t r = 0;
    for (char ch : w) r = 2 * r + (ch == 'b');
    return r;
  };
  std::vector<std::vector<cpp_rational>> m(rows, std::vector<cpp_rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    const NCPolynomial e = expand_cd(CDPolynomial::word(cd_words[j]));
    for (const auto& [w, c] : e.terms()) m[row_of(w)][j] = c;
  }
  for (const auto& [w, c] : ab.terms()) m[row_of(w)][cols] = c;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const cpp_rational factor = m[r][col] / m[pivot_row][col];
      for (std::size_t k = col; k <= cols; ++k) m[r][k] -= factor * m[pivot_row][k];
    }
    ++pivot_row;
  }
  // consistent iff no remaining row reads 0 = nonzero
  for (std::size_t r = pivot_row; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  return true;
}

}  // namespace bshopf
