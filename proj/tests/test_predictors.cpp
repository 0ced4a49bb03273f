#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "tpro/error.hpp"
#include "tpro/predictors.hpp"
#include "tpro/verify.hpp"

using namespace tpro;
using namespace support;

namespace {

const std::vector<int> kExampleLabels{5, 6, 4, 2, 3, 7, 1};

std::vector<char> kinds_of(const std::vector<Material>& m) {
  std::vector<char> out;
  for (Material x : m) out.push_back(x == R ? 'R' : 'T');
  return out;
}

}  // namespace

TEST_CASE("forest formula on documented graphs") {
  CHECK(forest_orbit_size(fig1(), state({1, 2, 3})) == 18);

  const BilliardsGraph star4(4, {{1, 2, R}, {1, 3, R}, {1, 4, R}});
  CHECK(forest_orbit_size(star4, state({1, 2, 3, 4})) == 12);

  const BilliardsGraph star5(5, {{1, 2, T}, {1, 3, T}, {1, 4, R}, {1, 5, R}});
  CHECK(forest_orbit_size(star5, state({1, 2, 3, 4, 5})) == 100);
  CHECK(orbit_size(star5, state({1, 2, 3, 4, 5})) == 100);

  CHECK_THROWS_AS(forest_orbit_size(BilliardsGraph::cycle(4, R), state({1, 2, 3, 4})), Error);
}

TEST_CASE("forest formula matches both oracles on random forests") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const BilliardsGraph tree = random_tree(n, rng);
    std::vector<Edge> kept;
    for (const Edge& e : tree.edges()) {
      if (rng() % 4 != 0) kept.push_back(e);
    }
    const BilliardsGraph g(n, kept);
    const State s = random_state(n, rng);
    const std::uint64_t formula = forest_orbit_size(g, s);
    CHECK(formula == ref::forest_formula(n, materials(g), to_ref(s)));
    CHECK(formula == ref::orbit_size(materials(g), to_ref(s)));
  }
}

TEST_CASE("subtree sizes count the far side of the edge") {
  const BilliardsGraph path = BilliardsGraph::path(3, R);
  CHECK(subtree_size(path, 1, 2) == 2);
  CHECK(subtree_size(path, 2, 1) == 1);
  CHECK(subtree_size(five_tree(), 1, 2) == 4);
  CHECK(subtree_size(five_tree(), 2, 1) == 1);
  CHECK(subtree_size(five_tree(), 2, 3) == 2);
  CHECK_THROWS_AS(subtree_size(path, 1, 3), Error);
  CHECK_THROWS_AS(subtree_size(BilliardsGraph::cycle(4, R), 1, 2), Error);
}

TEST_CASE("canonical cycle ordering") {
  const CycleOrdering example = canonicalize_cycle(seven_cycle(), Labeling::from_labels(kExampleLabels));
  CHECK(example.vertices == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  CHECK(example.materials == std::vector<Material>{T, R, R, T, R, T, T});

  const BilliardsGraph c4 = BilliardsGraph::cycle(4, R);
  const Labeling in_order = Labeling::identity(4);
  const CycleOrdering o4 = canonicalize_cycle(c4, in_order);
  std::vector<int> along;
  for (int v : o4.vertices) along.push_back(in_order.label(v));
  CHECK(along == std::vector<int>{2, 3, 4, 1});

  std::vector<int> labels{1, 2, 3};
  do {
    const Labeling sigma = Labeling::from_labels(labels);
    CHECK(sigma.label(canonicalize_cycle(BilliardsGraph::cycle(3, R), sigma).vertices[2]) == 1);
  } while (std::next_permutation(labels.begin(), labels.end()));

  // Idempotent: relabeling by the ordering gives an ordering that is the identity.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    const BilliardsGraph g = BilliardsGraph::cycle(n, R);
    const Labeling sigma = random_labeling(n, rng);
    const CycleOrdering o = canonicalize_cycle(g, sigma);
    const auto [g2, sigma2] = relabel_by_ordering(g, sigma, o);
    const CycleOrdering again = canonicalize_cycle(g2, sigma2);
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    CHECK(again.vertices == id);
    CHECK(again.materials == o.materials);
  }
  CHECK_THROWS_AS(canonicalize_cycle(BilliardsGraph::path(4, R), Labeling::identity(4)), Error);
}

TEST_CASE("a-sequence of the worked example and the literal replica walk") {
  const Labeling sigma = Labeling::from_labels(kExampleLabels);
  const CycleOrdering o = canonicalize_cycle(seven_cycle(), sigma);
  const auto a = cycle_a_sequence(o, sigma);
  CHECK(a == std::vector<int>{4, 1, 4, 4, 1, 4});
  CHECK(std::accumulate(a.begin(), a.end(), 0) == 18);
  CHECK(ref::replica_walk(ref::canonical_cycle(kExampleLabels), kExampleLabels) == a);

  const BilliardsGraph c4 = BilliardsGraph::cycle(4, R);
  CHECK(cycle_a_sequence(canonicalize_cycle(c4, Labeling::identity(4)), Labeling::identity(4)) ==
        std::vector<int>{1, 1, 1});

  for (int n = 3; n <= 7; ++n) {
    const BilliardsGraph g = BilliardsGraph::cycle(n, R);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    do {
      const Labeling s = Labeling::from_labels(labels);
      CHECK(cycle_a_sequence(canonicalize_cycle(g, s), s) ==
            ref::replica_walk(ref::canonical_cycle(labels), labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
}

TEST_CASE("cycle invariants") {
  const CycleInvariants inv = cycle_invariants(seven_cycle(), Labeling::from_labels(kExampleLabels));
  CHECK(inv.p == 3);
  CHECK(inv.m == 3);
  CHECK(inv.mu == 4);
  CHECK(cycle_orbit_size(7, inv) == 441);
  CHECK(cycle_orbit_size(seven_cycle(), Labeling::from_labels(kExampleLabels)) == 441);
  CHECK(orbit_size(seven_cycle(), state(kExampleLabels)) == 441);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 6;
    const Labeling sigma = random_labeling(n, rng);
    CHECK(cycle_invariants(BilliardsGraph::cycle(n, R), sigma).mu == n);
    if (n % 2 == 0 && n >= 4) CHECK(cycle_invariants(BilliardsGraph::cycle(n, T), sigma).mu == n / 2);
  }

  CHECK(cycle_orbit_size(BilliardsGraph::cycle(4, R), Labeling::identity(4)) == 4);
  CHECK(cycle_orbit_size(BilliardsGraph::cycle(4, T), Labeling::identity(4)) == 12);

  CHECK_THROWS_AS(cycle_invariants(BilliardsGraph::cycle(5, T), Labeling::identity(5)), Error);
}

TEST_CASE("cycle invariant properties and the independent formula") {
  std::mt19937_64 rng(37);
  for (int n = 4; n <= 6; ++n) {
    std::vector<Material> m(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
      for (int k = 0; k < n; ++k) m[k] = (mask >> k & 1) ? T : R;
      const BilliardsGraph g = BilliardsGraph::cycle(m);
      std::set<int> mus;
      std::vector<int> labels(n);
      std::iota(labels.begin(), labels.end(), 1);
      do {
        const Labeling sigma = Labeling::from_labels(labels);
        const CycleInvariants inv = cycle_invariants(g, sigma);
        CHECK((n - 1) % inv.p == 0);
        CHECK(inv.m >= 1);
        CHECK(std::accumulate(inv.a.begin(), inv.a.end(), 0) == inv.m * (n - 1));
        CHECK(inv.mu >= 1);
        CHECK(inv.mu <= n);
        mus.insert(inv.mu);
        CHECK(cycle_orbit_size(g, sigma) == ref::cycle_formula(kinds_of(m), labels));
      } while (std::next_permutation(labels.begin(), labels.end()));
      CHECK(mus.size() <= 2);
      if (mus.size() == 2) CHECK(*mus.begin() + *mus.rbegin() == n);
    }
  }
}

TEST_CASE("predict_orbit_size dispatch") {
  const auto forest = predict_orbit_size(fig1(), state({3, 1, 2}, 2, -1));
  REQUIRE(forest.has_value());
  CHECK(forest->kind == PredictorKind::Forest);
  CHECK(forest->size == 18);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 4;
    std::vector<Material> m(n);
    int refract = 0;
    for (auto& x : m) {
      x = rng() % 2 ? T : R;
      refract += x == T;
    }
    if (refract % 2) m[0] = m[0] == T ? R : T;
    const BilliardsGraph g = BilliardsGraph::cycle(m);
    const State s = random_state(n, rng);
    const auto p = predict_orbit_size(g, s);
    REQUIRE(p.has_value());
    CHECK(p->kind == PredictorKind::Cycle);
    CHECK(p->size == orbit_size(g, s));
  }

  CHECK_FALSE(predict_orbit_size(BilliardsGraph::cycle(5, T), state({1, 2, 3, 4, 5})).has_value());
  const BilliardsGraph k4(4, {{1, 2, R}, {1, 3, R}, {1, 4, R}, {2, 3, R}, {2, 4, R}, {3, 4, R}});
  CHECK_FALSE(predict_orbit_size(k4, state({1, 2, 3, 4})).has_value());
}
