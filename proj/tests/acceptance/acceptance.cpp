// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bshopf/cdindex.hpp"
#include "bshopf/checked.hpp"
#include "bshopf/chromatic.hpp"
#include "bshopf/eulerian.hpp"
#include "bshopf/formal_sum.hpp"
#include "bshopf/graphs.hpp"
#include "bshopf/symfunc.hpp"
#include "../oracles.hpp"

using namespace bshopf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Exhaustive antichains on 5 elements, then 1000 fixed-seed random antichains
// on 2..8 elements (half of them biased towards odd sizes).
const std::vector<BuildingSet>& sweep() {
  static const std::vector<BuildingSet> cases = [] {
    std::vector<BuildingSet> out;
    for (const auto& l : oracle::all_antichains(5)) out.push_back(closure(SetFamily(5, l)));
    std::mt19937_64 rng(20240607);
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const int tries = 1 + static_cast<int>(rng() % 5);
      out.push_back(closure(SetFamily(n, oracle::random_antichain(rng, n, tries, trial % 2 == 1))));
    }
    return out;
  }();
  return cases;
}

const std::vector<BuildingSet>& eulerian_sweep() {
  static const std::vector<BuildingSet> cases = [] {
    std::vector<BuildingSet> out;
    for (const BuildingSet& b : sweep())
      if (is_eulerian(b)) out.push_back(b);
    return out;
  }();
  return cases;
}

CDPolynomial cd(std::map<std::string, std::int64_t> terms) {
  CDPolynomial p;
  for (const auto& [w, c] : terms) p.add(w, c);
  return p;
}

Outcome printed_cd_indices() {
  const std::vector<CDPolynomial> printed = {
      cd({{"c", 1}}),
      cd({{"cc", 1}, {"d", 1}}),
      cd({{"ccc", 1}, {"cd", 2}, {"dc", 2}}),
      cd({{"cccc", 1}, {"ccd", 3}, {"dcc", 3}, {"cdc", 5}, {"dd", 4}}),
  };
  for (int n = 2; n <= 5; ++n)
    if (cd_index(BuildingSet::discrete(n)) != printed[n - 2])
      return fail("cd_index(D_" + std::to_string(n) + ") = " + cd_index(BuildingSet::discrete(n)).to_string());
  for (int n = 1; n <= 10; ++n) {
    const CDPolynomial phi = cd_index(BuildingSet::discrete(n));
    if (phi.coefficient(std::string(n - 1, 'c')) != 1) return fail("[c^{n-1}] != 1 at n = " + std::to_string(n));
  }
  return {true, "Phi_2..Phi_5 match, [c^{n-1}] = 1 for n <= 10"};
}

Outcome zeta_inverse_fixtures() {
  for (int n = 0; n <= 10; ++n) {
    const std::int64_t d = zeta_inverse(BuildingSet::discrete(n)).zeta_inv;
    if (d != checked::sign(n)) return fail("zeta^-1(D_" + std::to_string(n) + ") = " + std::to_string(d));
    if (n < 1) continue;
    const std::int64_t dbar = zeta_inverse(BuildingSet::discrete_connected(n)).zeta_inv;
    const std::int64_t want = n == 1 ? -1 : checked::sign(n) + 1;
    if (dbar != want) return fail("zeta^-1(connected D_" + std::to_string(n) + ") = " + std::to_string(dbar));
  }
  for (int n = 3; n <= 6; ++n) {
    const SimpleGraph c = SimpleGraph::cycle(n);
    if (!is_odd_collection(beta_generators(c, 3))) return fail("cycle collection is not odd");
    const std::int64_t z = zeta_inverse(beta_n(c, 3)).zeta_inv;
    if (z != 2 * checked::sign(n - 1)) return fail("cycle nerve n = " + std::to_string(n) + " gives " + std::to_string(z));
  }
  return {true, "D_n and connected D_n for n <= 10, cycle nerves n = 3..6"};
}

std::string describe(const BuildingSet& b) {
  std::string s;
  const Generators g = minimal_generators(b);
  for (Mask m : g.minimal.sets()) {
    s += s.empty() ? "{" : " {";
    for (int e : elements(m)) s += std::to_string(e);
    s += "}";
  }
  return s;
}

Outcome detector_agreement() {
  int disagreements = 0, eulerian = 0;
  std::string first;
  for (const BuildingSet& b : sweep()) {
    const bool a = is_eulerian(b);
    const bool g = is_eulerian_geometric(b);
    const bool d = dehn_sommerville_check(b);
    eulerian += a;
    if (a == g && g == d) continue;
    if (++disagreements == 1)
      first = "; first: rank " + std::to_string(b.rank()) + " generators " + describe(b) + " algebraic=" +
              std::to_string(a) + " geometric=" + std::to_string(g) + " dehn_sommerville=" + std::to_string(d);
  }
  const std::string detail = std::to_string(sweep().size()) + " instances, " + std::to_string(eulerian) +
                             " eulerian, " + std::to_string(disagreements) + " disagreements" + first;
  return {disagreements == 0, detail};
}

Outcome bayer_billera() {
  for (const BuildingSet& b : eulerian_sweep())
    if (b.rank() <= 10 && !bayer_billera_check(b).empty()) return fail("eulerian instance violates a relation");
  const auto v = bayer_billera_check(graphical(SimpleGraph::complete(2)));
  const bool has_minus_two = std::any_of(v.begin(), v.end(), [](const auto& x) { return x.value == -2; });
  if (!has_minus_two) return fail("K_2 has no relation with value -2");
  return {true, std::to_string(eulerian_sweep().size()) + " eulerian instances clean, K_2 violation -2"};
}

Outcome coloring_oracle() {
  int checked_cases = 0, generators = 0;
  for (const BuildingSet& b : sweep()) {
    if (b.rank() > 6) continue;
    ++checked_cases;
    const QSymElement psi = psi_monomial(b);
    const std::vector<Mask> members(b.members().begin(), b.members().end());
    for (int m = 0; m <= 7; ++m)
      if (specialize(psi, m) != oracle::colorings(b.rank(), members, m)) return fail("coloring count differs");
    const ChromaticPolynomial chi = chromatic_polynomial(b);
    const Generators g = minimal_generators(b);
    for (Mask s : g.minimal.sets()) {
      ++generators;
      if (chi != chromatic_polynomial(deletion(b, s)) - chromatic_polynomial(contraction(b, s).set))
        return fail("deletion-contraction fails");
    }
  }
  return {true, std::to_string(checked_cases) + " instances, " + std::to_string(generators) + " generators"};
}

Outcome basis_consistency() {
  int count = 0;
  for (const BuildingSet& b : sweep()) {
    if (b.rank() > 7) continue;
    ++count;
    const PSymElement p = psi_powersum_subsets(b);
    if (powersum_to_monomial(p) != psi_monomial(b)) return fail("power-sum expansion differs from the monomial one");
    if (p != psi_powersum_moebius(b)) return fail("subset and Moebius power sums differ");
  }
  return {true, std::to_string(count) + " instances"};
}

// Smallest sorted edge list over all relabelings.
std::vector<std::pair<int, int>> graph_form(const SimpleGraph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges()) e.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = e;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string edge_list(const SimpleGraph& g) {
  std::string s;
  for (auto [a, b] : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(a) + std::to_string(b);
  return "[" + s + "]";
}

Outcome stanley_pair() {
  PSymElement printed;
  printed.add(Partition({5, 3, 1, 1, 1}), -1);
  printed.add(Partition({6, 3, 1, 1}), 1);
  printed.add(Partition({7, 1, 1, 1, 1}), 1);
  printed.add(Partition({8, 1, 1, 1}), -2);
  printed.add(Partition({9, 1, 1}), 2);
  printed.add(Partition({10, 1}), -1);

  // one representative per isomorphism class of 5-vertex, 6-edge graphs
  std::map<std::vector<std::pair<int, int>>, SimpleGraph> classes;
  for (const SimpleGraph& g : oracle::all_graphs(5))
    if (g.edge_count() == 6) classes.try_emplace(graph_form(g), g);
  std::vector<SimpleGraph> reps;
  for (const auto& [form, g] : classes) reps.push_back(g);

  int equal_pairs = 0, matches = 0;
  std::string pinned;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const PSymElement xi = psi_powersum_subsets(beta_n(reps[i], 2));
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (xi != psi_powersum_subsets(beta_n(reps[j], 2))) continue;
      ++equal_pairs;
      const PSymElement diff = psi_powersum_subsets(beta_n(reps[i], 3)) - psi_powersum_subsets(beta_n(reps[j], 3));
      PSymElement negated;
      for (const auto& [l, c] : diff.terms()) negated.add(l, -c);
      if (diff == printed || negated == printed) {
        ++matches;
        pinned = edge_list(diff == printed ? reps[i] : reps[j]) + " minus " + edge_list(diff == printed ? reps[j] : reps[i]);
      }
    }
  }
  if (matches == 0)
    return fail(std::to_string(equal_pairs) + " pairs share Psi(beta_2), none has the printed beta_3 difference");
  return {true, std::to_string(reps.size()) + " classes, " + std::to_string(equal_pairs) +
                    " pair(s) with equal Psi(beta_2), printed difference matched by " + pinned};
}

Outcome tutte_bridges() {
  int graphs = 0;
  for (int v = 1; v <= 5; ++v) {
    for (const SimpleGraph& g : oracle::all_graphs(v)) {
      if (!g.is_connected()) continue;
      ++graphs;
      const OrientationCounts o = orientation_counts(g);
      const std::int64_t b2 = chromatic_polynomial(beta_n(g, 2))(-1);
      const std::int64_t b3 = chromatic_polynomial(beta_n(g, 3))(-1);
      if (b2 != checked::sign(v) * o.acyclic) return fail("beta_2 bridge fails");
      if (b3 != checked::sign(g.edge_count() + g.component_count()) * o.totally_cyclic)
        return fail("beta_3 bridge fails");
    }
  }
  return {true, std::to_string(graphs) + " labelled connected graphs"};
}

Outcome cd_round_trip() {
  int count = 0;
  for (const BuildingSet& b : eulerian_sweep()) {
    if (b.rank() > 7 || b.rank() < 1) continue;
    ++count;
    const CDPolynomial phi = cd_index(b);
    if (phi != cd_index_recursive(b) || phi != cd_index_closed_form(b)) return fail("cd routes disagree");
    if (expand_cd(phi) != ab_index(b)) return fail("cd-index does not expand to the ab-index");
    const FlagVector fv = flag_vectors(b);
    for (const auto& [alpha, eta] : fv.h)
      if (eta != fv.h.at(alpha.opposite())) return fail("flag h-vector is not symmetric");
  }
  return {true, std::to_string(count) + " eulerian instances"};
}

Outcome hopf_axioms() {
  int count = 0;
  for (int n = 0; n <= 4; ++n) {
    for (const auto& l : oracle::all_antichains(n)) {
      const BuildingSet b = closure(SetFamily(n, l));
      ++count;
      const TensorSum delta = coproduct(b);
      if (coproduct_on_leg(delta, 0) != coproduct_on_leg(delta, 1)) return fail("coassociativity fails");
      FormalSum law;
      for (const auto& [left, right] : coproduct_terms(b)) law += antipode(left) * FormalSum::of(right);
      if (law != (n == 0 ? FormalSum::unit() : FormalSum())) return fail("antipode identity fails");
    }
  }
  for (int n = 1; n <= 10; ++n)
    if (!multinomial_identity_check(n)) return fail("multinomial identity fails at n = " + std::to_string(n));
  return {true, std::to_string(count) + " building sets of rank <= 4, multinomial identity n <= 10"};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      printed_cd_indices, zeta_inverse_fixtures, detector_agreement, bayer_billera, coloring_oracle,
      basis_consistency,  stanley_pair,          tutte_bridges,      cd_round_trip, hopf_axioms,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += !o.ok;
    std::printf("%s criterion %zu: %s\n", o.ok ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
