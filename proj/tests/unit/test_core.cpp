#include <algorithm>
#include <numeric>
#include <random>

#include "bshopf/core.hpp"
#include "bshopf/errors.hpp"
#include "bshopf/formal_sum.hpp"
#include "bshopf/graphs.hpp"
#include "doctest.h"
#include "../oracles.hpp"

using namespace bshopf;

namespace {

BuildingSet gen(int n, std::vector<Mask> sets) { return closure(SetFamily(n, std::move(sets))); }

// Ground-set bijection search, the slow way.
bool brute_equivalent(const BuildingSet& a, const BuildingSet& b) {
  if (a.rank() != b.rank()) return false;
  std::vector<int> p(a.rank());
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<Mask> image;
    for (Mask s : a.members()) {
      Mask t = 0;
      for (int e : elements(s)) t |= bit(p[e]);
      image.push_back(t);
    }
    std::sort(image.begin(), image.end(), size_then_value_less);
    if (std::equal(image.begin(), image.end(), b.members().begin(), b.members().end())) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool satisfies_b1_b2(const BuildingSet& b) {
  for (int i = 0; i < b.rank(); ++i)
    if (!b.contains(bit(i))) return false;
  for (Mask x : b.members())
    for (Mask y : b.members())
      if (overlaps(x, y) && !b.contains(x | y)) return false;
  return true;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(gen(3, {0b011, 0b110}).contains(0b111));
  CHECK(gen(2, {}) == BuildingSet::discrete(2));
  const BuildingSet b = gen(4, {0b0011, 0b0110, 0b1100});
  CHECK(b.members().size() == 10);
  for (Mask s : {0b0111, 0b1110, 0b1111}) CHECK(b.contains(s));
  CHECK_THROWS_AS(gen(3, {0b001}), InputError);
  CHECK_THROWS_AS(SetFamily(2, {0b100}), InputError);
}

TEST_CASE("closure agrees with the pairwise-union oracle and is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto l = oracle::random_antichain(rng, n, 1 + static_cast<int>(rng() % 5), false);
    const BuildingSet b = closure(SetFamily(n, l));
    CHECK(b == oracle::building_set(n, l));
    CHECK(satisfies_b1_b2(b));
    std::vector<Mask> nontrivial;
    for (Mask s : b.members())
      if (popcount(s) >= 2) nontrivial.push_back(s);
    CHECK(closure(SetFamily(n, nontrivial)) == b);
  }
}

TEST_CASE("from_members validates the axioms") {
  CHECK_THROWS_AS(BuildingSet::from_members(2, {0b01}), InputError);
  CHECK_THROWS_AS(BuildingSet::from_members(3, {0b001, 0b010, 0b100, 0b011, 0b110}), InputError);
  CHECK_NOTHROW(BuildingSet::from_members(3, {0b001, 0b010, 0b100, 0b011, 0b110, 0b111}));
  CHECK_THROWS_AS(BuildingSet::from_members(1, {0b1, 0b1}), InputError);
}

TEST_CASE("restriction") {
  const BuildingSet k3 = graphical(SimpleGraph::complete(3));
  CHECK(restriction(k3, 0) == BuildingSet());
  CHECK(restriction(k3, 0b011) == graphical(SimpleGraph::complete(2)));
  CHECK(restriction(graphical(SimpleGraph::path(3)), 0b101) == BuildingSet::discrete(2));
}

TEST_CASE("restriction of graphical building sets is graphical of the induced subgraph") {
  for (int v = 1; v <= 5; ++v) {
    for (const SimpleGraph& g : oracle::all_graphs(v)) {
      const BuildingSet b = graphical(g);
      for (Mask i = 0; i <= full_mask(v); ++i) {
        std::vector<std::pair<int, int>> e;
        for (auto [x, y] : g.edges())
          if ((i & bit(x)) && (i & bit(y))) e.emplace_back(popcount(i & (bit(x) - 1)), popcount(i & (bit(y) - 1)));
        REQUIRE(restriction(b, i) == graphical(SimpleGraph(popcount(i), e)));
      }
    }
  }
}

TEST_CASE("product") {
  CHECK(product(BuildingSet::discrete(1), BuildingSet::discrete(1)) == BuildingSet::discrete(2));
  const BuildingSet k2 = graphical(SimpleGraph::complete(2));
  CHECK(product(k2, BuildingSet()) == k2);
  CHECK(product(BuildingSet(), k2) == k2);
  CHECK(product(k2, k2) == graphical(SimpleGraph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("coproduct terms") {
  const auto d1 = coproduct_terms(BuildingSet::discrete(1));
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].first == BuildingSet());
  CHECK(d1[0].second == BuildingSet::discrete(1));
  CHECK(d1[1].first == BuildingSet::discrete(1));
  CHECK(d1[1].second == BuildingSet());
  CHECK(coproduct_terms(BuildingSet::discrete(2)).size() == 4);
  const auto k2 = coproduct_terms(graphical(SimpleGraph::complete(2)));
  CHECK(k2[1].first == BuildingSet::discrete(1));
  CHECK(k2[1].second == BuildingSet::discrete(1));
}

TEST_CASE("antipode examples") {
  CHECK(antipode(BuildingSet::discrete(1)) == -1 * FormalSum::of(BuildingSet::discrete(1)));
  CHECK(antipode(BuildingSet()) == FormalSum::unit());
  CHECK(antipode(BuildingSet::discrete(2)) == FormalSum::of(BuildingSet::discrete(2)));
  CHECK_THROWS_AS(antipode(BuildingSet::discrete(9)), GuardError);
}

TEST_CASE("Hopf axioms on building sets of rank <= 4") {
  std::mt19937_64 rng(5);
  std::vector<BuildingSet> samples;
  for (int n = 0; n <= 4; ++n)
    for (const auto& l : oracle::all_antichains(n)) samples.push_back(closure(SetFamily(n, l)));
  for (const BuildingSet& b : samples) {
    const TensorSum delta = coproduct(b);
    REQUIRE(coproduct_on_leg(delta, 0) == coproduct_on_leg(delta, 1));
    FormalSum law;
    for (const auto& [left, right] : coproduct_terms(b)) law += antipode(left) * FormalSum::of(right);
    REQUIRE(law == (b.rank() == 0 ? FormalSum::unit() : FormalSum()));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const BuildingSet& x = samples[rng() % samples.size()];
    const BuildingSet& y = samples[rng() % samples.size()];
    CHECK(coproduct(product(x, y)) == multiply(coproduct(x), coproduct(y)));
  }
}

TEST_CASE("minimal generators") {
  const BuildingSet k3 = graphical(SimpleGraph::complete(3));
  const Generators g = minimal_generators(k3);
  CHECK(std::vector<Mask>(g.all.sets().begin(), g.all.sets().end()) == std::vector<Mask>{0b011, 0b101, 0b110});
  CHECK(minimal_generators(BuildingSet::discrete(4)).all.empty());
  const Generators p = minimal_generators(BuildingSet::power_set(3));
  CHECK(p.all.size() == 3);
  CHECK(p.minimal.size() == 3);
  const Generators chain = minimal_generators(gen(3, {0b011, 0b111}));
  CHECK(chain.all.size() == 2);
  CHECK(chain.minimal.size() == 1);
}

TEST_CASE("generators agree with the definition and regenerate the building set") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Mask> l;
    for (int k = 0; k < 4; ++k) {  // arbitrary, possibly nested, generators
      Mask s = rng() & full_mask(n);
      if (popcount(s) >= 2 && std::find(l.begin(), l.end(), s) == l.end()) l.push_back(s);
    }
    const BuildingSet b = closure(SetFamily(n, l));
    const Generators g = minimal_generators(b);
    CHECK(closure(g.all) == b);
    auto mins = std::vector<Mask>(g.minimal.sets().begin(), g.minimal.sets().end());
    auto want = oracle::minimal_generators(b);
    std::sort(mins.begin(), mins.end());
    std::sort(want.begin(), want.end());
    CHECK(mins == want);
    CHECK(g.minimal.is_antichain());
    const BuildingSet bmin = minimalization(b);
    for (Mask s : bmin.members()) CHECK(b.contains(s));
    const Generators again = minimal_generators(bmin);
    auto again_v = std::vector<Mask>(again.all.sets().begin(), again.all.sets().end());
    std::sort(again_v.begin(), again_v.end());
    CHECK(again_v == want);
    // dropping any generator loses the building set
    for (Mask s : g.all.sets()) CHECK(closure(g.all.without(s)) != b);
  }
}

TEST_CASE("deletion and contraction") {
  const BuildingSet k3 = graphical(SimpleGraph::complete(3));
  CHECK(deletion(k3, 0b011) == graphical(SimpleGraph(3, {{0, 2}, {2, 1}})));
  CHECK(deletion(gen(3, {0b111}), 0b111) == BuildingSet::discrete(3));
  CHECK(deletion(gen(4, {0b0011, 0b1100}), 0b0011) == gen(4, {0b1100}));
  CHECK(contraction(k3, 0b011).set == graphical(SimpleGraph::complete(2)));
  CHECK(contraction(gen(3, {0b111}), 0b111).set == BuildingSet::discrete(1));
  const Contraction c = contraction(gen(5, {0b00111, 0b11100}), 0b00111);
  CHECK(c.set == gen(3, {0b111}));
  CHECK(c.index_map == std::vector<int>{0, 0, 0, 1, 2});
  CHECK_THROWS_AS(deletion(k3, 0b111), InputError);
  CHECK_THROWS_AS(contraction(k3, 0b111), InputError);
}

TEST_CASE("contraction merges labels") {
  const BuildingSet b = gen(3, {0b011, 0b110}).with_labels({"x", "y", "z"});
  const Contraction c = contraction(b, 0b011);
  CHECK(c.set.labels() == std::vector<std::string>{"x+y", "z"});
}

TEST_CASE("connected components") {
  CHECK(connected_components(BuildingSet::discrete(3)).size() == 3);
  CHECK(connected_components(gen(3, {0b111})).size() == 1);
  const auto comps = connected_components(gen(5, {0b00011, 0b11100}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].rank() == 2);
  CHECK(comps[1].rank() == 3);
  CHECK(gen(3, {0b111}).is_connected());
  CHECK(!BuildingSet::discrete(2).is_connected());
}

TEST_CASE("equivalence") {
  CHECK(equivalent(graphical(SimpleGraph(3, {{0, 1}, {1, 2}})), graphical(SimpleGraph(3, {{1, 0}, {0, 2}}))));
  CHECK(!equivalent(BuildingSet::discrete(2), graphical(SimpleGraph::complete(2))));
  CHECK(!equivalent(graphical(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})), graphical(SimpleGraph::path(4))));
}

TEST_CASE("equivalence agrees with the all-permutations search") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const auto l = oracle::random_antichain(rng, m, 3, false);
    const BuildingSet a = closure(SetFamily(m, l));
    // a relabelled copy, and an unrelated one
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Mask> moved;
    for (Mask s : l) {
      Mask t = 0;
      for (int e : elements(s)) t |= bit(p[e]);
      moved.push_back(t);
    }
    const BuildingSet b = closure(SetFamily(m, moved));
    CHECK(equivalent(a, b));
    const BuildingSet c = closure(SetFamily(m, oracle::random_antichain(rng, m, 3, false)));
    CHECK(equivalent(a, c) == brute_equivalent(a, c));
  }
}

TEST_CASE("discrete table") {
  const BuildingSet b = graphical(SimpleGraph::path(3));
  const DiscreteTable t(b);
  CHECK(t(0));
  CHECK(t(0b101));
  CHECK(!t(0b011));
  CHECK(!t(0b111));
}
