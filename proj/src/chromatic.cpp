#include "bshopf/chromatic.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "bshopf/checked.hpp"
#include "bshopf/errors.hpp"

namespace bshopf {

namespace {

// Descent mask of the composition (j, beta) where beta has weight `rest`.
Mask prepend_part(int j, Mask beta, int rest) { return rest == 0 ? 0 : bit(j - 1) | (beta << j); }

template <typename F>
void for_each_subset_of_c_min(const SetFamily& c_min, F&& f) {
  require_at_most("minimal generator count", static_cast<long long>(c_min.size()), 20);
  const auto sets = c_min.sets();
  const std::size_t k = sets.size();
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << k); ++pick) {
    Components comp(c_min.ground_size());
    for (std::size_t i = 0; i < k; ++i)
      if (pick & (std::uint32_t{1} << i)) comp.join(sets[i]);
    f(std::popcount(pick), comp);
  }
}

}  // namespace

std::int64_t zeta_alpha(const BuildingSet& b, const Composition& alpha) {
  const int n = b.rank();
  if (alpha.weight() != n) throw InputError("composition weight differs from the rank");
  const DiscreteTable discrete(b);
  const auto& parts = alpha.parts();
  std::vector<int> part_at(n + 1, -1);  // part index starting after `consumed` elements
  for (int i = 0, consumed = 0; i < alpha.length(); consumed += parts[i], ++i) part_at[consumed] = i;

  std::unordered_map<Mask, std::int64_t> memo;
  std::function<std::int64_t(Mask)> count = [&](Mask r) -> std::int64_t {
    if (r == 0) return 1;
    if (auto it = memo.find(r); it != memo.end()) return it->second;
    const int a = parts[part_at[n - popcount(r)]];
    std::int64_t total = 0;
    for_each_nonempty_subset(r, [&](Mask j) {
      if (popcount(j) == a && discrete(j)) total = checked::add(total, count(r & ~j));
    });
    memo.emplace(r, total);
    return total;
  };
  return count(b.ground());
}

std::vector<std::int64_t> flag_f_values(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("flag vector rank", n, 12);
  const DiscreteTable discrete(b);
  // f[R][beta] counts ordered discrete decompositions of R of shape beta.
  std::vector<std::vector<std::int64_t>> f(std::size_t{1} << n);
  f[0] = {1};
  for (Mask r = 1; r <= b.ground(); ++r) {
    const int size = popcount(r);
    auto& fr = f[r];
    fr.assign(std::size_t{1} << (size - 1), 0);
    for_each_nonempty_subset(r, [&](Mask j) {
      if (!discrete(j)) return;
      const int a = popcount(j);
      const auto& tail = f[r & ~j];
      for (Mask beta = 0; beta < tail.size(); ++beta) {
        if (tail[beta] == 0) continue;
        auto& slot = fr[prepend_part(a, beta, size - a)];
        slot = checked::add(slot, tail[beta]);
      }
    });
  }
  return f[b.ground()];
}

QSymElement psi_monomial(const BuildingSet& b) {
  const std::vector<std::int64_t> f = flag_f_values(b);
  if (b.rank() == 0) return QSymElement::monomial(Composition{});
  QSymElement out;
  for (Mask s = 0; s < f.size(); ++s) out.add(Composition::from_descents(b.rank(), s), f[s]);
  return out;
}

std::vector<std::vector<std::int64_t>> discrete_partition_counts(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("discrete partition table rank", n, 16);
  const DiscreteTable discrete(b);
  std::vector<std::vector<std::int64_t>> a(std::size_t{1} << n);
  a[0] = {1};
  for (Mask r = 1; r <= b.ground(); ++r) {
    auto& ar = a[r];
    ar.assign(popcount(r) + 1, 0);
    const Mask low = r & (~r + 1);
    for_each_subset(r & ~low, [&](Mask s) {
      const Mask j = low | s;
      if (!discrete(j)) return;
      const auto& rest = a[r & ~j];
      for (std::size_t k = 0; k < rest.size(); ++k) ar[k + 1] = checked::add(ar[k + 1], rest[k]);
    });
  }
  return a;
}

ChromaticPolynomial chromatic_polynomial(const BuildingSet& b) {
  // Summing zeta_alpha over the k! orderings of a partition into k discrete
  // blocks and using k! (m choose k) = (m)_k gives chi = sum_k a_k (m)_k.
  const auto a = discrete_partition_counts(b);
  ChromaticPolynomial chi;
  const auto& top = a[b.ground()];
  for (std::size_t k = 0; k < top.size(); ++k)
    if (top[k] != 0) chi = chi + IntPolynomial::constant(top[k]) * falling_factorial(k);
  return chi;
}

std::int64_t minus_one_subset_formula(const BuildingSet& b) {
  std::int64_t total = 0;
  for_each_subset_of_c_min(minimal_generators(b).minimal, [&](int k, const Components& comp) {
    total = checked::add(total, checked::sign(k + comp.count()));
  });
  return total;
}

std::int64_t minus_one_invariant(const BuildingSet& b) {
  const std::int64_t by_polynomial = chromatic_polynomial(b)(-1);
  const std::int64_t by_subsets = minus_one_subset_formula(b);
  if (by_polynomial != by_subsets)
    throw CrossCheckError("(-1)-invariant: polynomial gives " + std::to_string(by_polynomial) +
                          ", subset formula gives " + std::to_string(by_subsets));
  return by_polynomial;
}

PSymElement psi_powersum_subsets(const BuildingSet& b) {
  PSymElement out;
  for_each_subset_of_c_min(minimal_generators(b).minimal, [&](int k, const Components& comp) {
    std::vector<int> parts;
    for (Mask c : comp.masks()) parts.push_back(popcount(c));
    out.add(Partition(std::move(parts)), checked::sign(k));
  });
  return out;
}

// ---------------------------------------------------------------------------

ConnectedPartitionLattice::ConnectedPartitionLattice(const BuildingSet& b) {
  const int n = b.rank();
  require_at_most("connected partition lattice rank", n, 9);
  const BuildingSet bmin = minimalization(b);
  const std::size_t full = std::size_t{1} << n;

  // The interval [0, pi] is the product of the lattices of the blocks, so
  // mu(0, pi) is a product of block values mu(A) = mu(0_A, 1_A). p[R] sums
  // mu over all connected partitions of R; it vanishes on members of size >= 2.
  std::vector<std::int64_t> mu(full, 0), p(full, 0);
  p[0] = 1;
  for (Mask r = 1; r < full; ++r) {
    const Mask low = r & (~r + 1);
    auto sum_over_first_block = [&](bool proper) {
      std::int64_t total = 0;
      for_each_subset(r & ~low, [&](Mask s) {
        const Mask blk = low | s;
        if ((proper && blk == r) || !bmin.contains(blk)) return;
        total = checked::add(total, checked::mul(mu[blk], p[r & ~blk]));
      });
      return total;
    };
    if (bmin.contains(r)) mu[r] = popcount(r) == 1 ? 1 : checked::neg(sum_over_first_block(true));
    p[r] = sum_over_first_block(false);
  }

  std::vector<Mask> cur;
  std::function<void(Mask)> rec = [&](Mask left) {
    if (left == 0) {
      std::vector<Mask> sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      std::int64_t m = 1;
      for (Mask blk : sorted) m = checked::mul(m, mu[blk]);
      blocks_.push_back(std::move(sorted));
      moebius_.push_back(m);
      return;
    }
    const Mask low = left & (~left + 1);
    for_each_subset(left & ~low, [&](Mask s) {
      if (!bmin.contains(low | s)) return;
      cur.push_back(low | s);
      rec(left & ~(low | s));
      cur.pop_back();
    });
  };
  rec(b.ground());
  // singletons first: the all-singletons partition is the bottom element
  auto bottom = std::find_if(blocks_.begin(), blocks_.end(),
                             [n](const auto& bl) { return static_cast<int>(bl.size()) == n; });
  const auto idx = bottom - blocks_.begin();
  std::swap(blocks_[0], blocks_[idx]);
  std::swap(moebius_[0], moebius_[idx]);
}

Partition ConnectedPartitionLattice::type(std::size_t i) const {
  std::vector<int> parts;
  for (Mask blk : blocks_[i]) parts.push_back(popcount(blk));
  return Partition(std::move(parts));
}

bool ConnectedPartitionLattice::leq(std::size_t i, std::size_t j) const {
  return std::all_of(blocks_[i].begin(), blocks_[i].end(), [&](Mask x) {
    return std::any_of(blocks_[j].begin(), blocks_[j].end(), [x](Mask y) { return subset_of(x, y); });
  });
}

PSymElement psi_powersum_moebius(const BuildingSet& b) {
  const ConnectedPartitionLattice lattice(b);
  PSymElement out;
  for (std::size_t i = 0; i < lattice.size(); ++i) out.add(lattice.type(i), lattice.moebius(i));
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t count_proper_colorings(const SetFamily& c_min, std::int64_t m) {
  if (m < 0) throw InputError("number of colors must be nonnegative");
  const int n = c_min.ground_size();
  long double work = 1;
  for (int i = 0; i < n; ++i) work *= static_cast<long double>(m);
  if (work > 1e7L) throw GuardError("coloring enumeration: m^n exceeds limit 10000000");

  std::vector<std::vector<Mask>> closing_at(n);  // sets checked once their top element is colored
  for (Mask s : c_min.sets())
    if (popcount(s) >= 2) closing_at[63 - std::countl_zero(s)].push_back(s);

  std::vector<std::int64_t> color(n, 0);
  std::int64_t count = 0;
  std::function<void(int)> rec = [&](int e) {
    if (e == n) {
      ++count;
      return;
    }
    for (std::int64_t c = 0; c < m; ++c) {
      color[e] = c;
      const bool ok = std::none_of(closing_at[e].begin(), closing_at[e].end(), [&](Mask s) {
        for (int x : elements(s))
          if (color[x] != c) return false;
        return true;
      });
      if (ok) rec(e + 1);
    }
  };
  rec(0);
  return count;
}

FreeSetReduction free_set_reduce(const BuildingSet& b) {
  FreeSetReduction out{{}, b.with_labels({})};
  while (true) {
    const SetFamily gens = minimal_generators(out.residual).minimal;
    const auto sets = gens.sets();
    std::size_t pick = sets.size();
    Mask shared = 0;
    for (std::size_t i = 0; i < sets.size() && pick == sets.size(); ++i) {
      Mask others = 0;
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (j != i) others |= sets[j];
      if (popcount(sets[i] & others) <= 1) {
        pick = i;
        shared = sets[i] & others;
      }
    }
    if (pick == sets.size()) break;

    const Mask s = sets[pick];
    const auto size = static_cast<unsigned>(popcount(s));
    if (shared == 0)
      out.factors.push_back(IntPolynomial::monomial(size) - IntPolynomial::monomial(1));
    else
      out.factors.push_back(IntPolynomial::monomial(size - 1) - IntPolynomial::constant(1));

    const Mask kept = out.residual.ground() & ~(s & ~shared);
    std::vector<Mask> rest;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (j != pick) rest.push_back(pack(sets[j], kept));
    out.residual = closure(SetFamily(popcount(kept), std::move(rest)));
  }

  if (b.rank() <= 16) {
    ChromaticPolynomial prod = chromatic_polynomial(out.residual);
    for (const auto& f : out.factors) prod = prod * f;
    if (prod != chromatic_polynomial(b))
      throw CrossCheckError("free set reduction does not reproduce the chromatic polynomial");
  }
  return out;
}

}  // namespace bshopf
