#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "support.hpp"
#include "tpro/dynamics.hpp"
#include "tpro/error.hpp"
#include "tpro/verify.hpp"

using namespace tpro;
using namespace support;

TEST_CASE("theta on the three edge kinds") {
  const State s = state({1, 2, 3});
  CHECK(theta(BilliardsGraph::edgeless(3), s) == state({2, 1, 3}, 2, 1));
  CHECK(theta(BilliardsGraph(3, {{1, 2, R}}), s) == state({1, 2, 3}, 2, 1));
  CHECK(theta(BilliardsGraph(3, {{1, 2, T}}), s) == state({2, 1, 3}, 3, -1));
}

TEST_CASE("theta_inverse undoes the examples") {
  const State s = state({1, 2, 3});
  for (const BilliardsGraph& g :
       {BilliardsGraph::edgeless(3), BilliardsGraph(3, {{1, 2, R}}), BilliardsGraph(3, {{1, 2, T}})}) {
    CHECK(theta_inverse(g, theta(g, s)) == s);
  }
  CHECK(theta_inverse(BilliardsGraph::edgeless(3), state({2, 1, 3}, 2, 1)) == s);
}

TEST_CASE("theta agrees with the literal rule and is a bijection") {
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const BilliardsGraph g = random_graph(n, rng);
      const auto m = materials(g);
      for (const State& s : all_states(n)) {
        const State t = theta(g, s);
        CHECK(to_ref(t) == ref::theta(m, to_ref(s)));
        CHECK(theta_inverse(g, t) == s);
        CHECK(theta(g, theta_inverse(g, s)) == s);
      }
    }
  }
  for (int n = 6; n <= 8; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const BilliardsGraph g = random_graph(n, rng);
      const State s = random_state(n, rng);
      CHECK(theta_inverse(g, theta(g, s)) == s);
      CHECK(to_ref(theta(g, s)) == ref::theta(materials(g), to_ref(s)));
    }
  }
}

TEST_CASE("theta commutes with the cyclic shift") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 5; ++n) {
    const BilliardsGraph g = random_graph(n, rng);
    for (const State& s : all_states(n)) {
      CHECK(cyc_shift(theta(g, s), 1) == theta(g, cyc_shift(s, 1)));
      CHECK(cyc_shift(s, n) == s);
    }
  }
  CHECK(cyc_shift(state({1, 2, 3}), 0) == state({1, 2, 3}));
  CHECK(cyc_shift(state({1, 2, 3}), 1) == state({2, 3, 1}, 2, 1));
}

TEST_CASE("theta_power") {
  const BilliardsGraph g = fig1();
  const State s = state({2, 3, 1}, 2, -1);
  CHECK(theta_power(g, s, 0) == s);
  CHECK(theta_power(g, s, 1) == theta(g, s));
  CHECK(theta_power(g, s, -1) == theta_inverse(g, s));
  for (const State& x : all_states(3)) CHECK(theta_power(g, x, 18) == x);
  // Large exponents are reduced by the orbit length.
  CHECK(theta_power(g, s, 18 * 1000003 + 5) == theta_power(g, s, 5));
}

TEST_CASE("orbit sizes on small graphs") {
  for (const State& s : all_states(3)) {
    CHECK(orbit_size(fig1(), s) == 18);
    CHECK(orbit_size(BilliardsGraph::edgeless(3), s) == 6);
  }
  for (const State& s : all_states(4)) CHECK(orbit_size(BilliardsGraph::path(4, T), s) == 12);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const BilliardsGraph g = random_graph(n, rng);
    const State s = random_state(n, rng);
    CHECK(orbit_size(g, s) == ref::orbit_size(materials(g), to_ref(s)));
  }
}

TEST_CASE("orbit lists states in theta order and respects the cap") {
  const auto states = orbit(fig1(), state({1, 2, 3}), 64);
  REQUIRE(states.size() == 18);
  for (std::size_t t = 0; t + 1 < states.size(); ++t) CHECK(states[t + 1] == theta(fig1(), states[t]));
  try {
    orbit(fig1(), state({1, 2, 3}), 4);
    FAIL("expected OrbitTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrbitTooLarge);
  }
}

TEST_CASE("omega normalization") {
  CHECK(omega_normalize(state({3, 1, 2})) == state({3, 1, 2}));
  // The stone at 3 moving to 2 becomes the stone at 1 moving to 2.
  CHECK(omega_normalize(state({1, 2, 3}, 2, -1)) == state({3, 2, 1}));
  CHECK(omega_normalize(state({1, 2, 3}, 3, 1)) == state({2, 3, 1}));
  for (const State& s : all_states(3)) {
    CHECK(orbit_size(fig1(), omega_normalize(s)) == orbit_size(fig1(), s));
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 5;
    const BilliardsGraph g = random_graph(n, rng);
    const State s = random_state(n, rng);
    CHECK(orbit_size(g, omega_normalize(s)) == orbit_size(g, s));
  }
}

TEST_CASE("toric promotion") {
  // Path on three vertices, all reflect: every orbit has size 2.
  const BilliardsGraph path = BilliardsGraph::path(3, R);
  std::vector<int> labels{1, 2, 3};
  do {
    const Labeling sigma = Labeling::from_labels(labels);
    const Labeling once = toric_promotion(path, sigma);
    CHECK_FALSE(once == sigma);
    CHECK(toric_promotion(path, once) == sigma);
  } while (std::next_permutation(labels.begin(), labels.end()));

  // Edgeless: s_3 s_2 s_1 applied to the labels, an involution.
  const BilliardsGraph empty = BilliardsGraph::edgeless(3);
  labels = {1, 2, 3};
  do {
    const Labeling sigma = Labeling::from_labels(labels);
    Labeling expected = sigma;
    expected.swap_values(1, 2);
    expected.swap_values(2, 3);
    expected.swap_values(3, 1);
    CHECK(toric_promotion(empty, sigma) == expected);
    CHECK(toric_promotion(empty, toric_promotion(empty, sigma)) == sigma);
  } while (std::next_permutation(labels.begin(), labels.end()));

  try {
    toric_promotion(fig1(), Labeling::identity(3));
    FAIL("expected RefractionPresent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RefractionPresent);
  }
}

TEST_CASE("stone diagram and coin") {
  // Labels (3,1,2) at index 2 moving counterclockwise.
  const State s = state({3, 1, 2}, 2, -1);
  const StoneDiagram d = stone_diagram(s);
  CHECK(d.stone_at == 3);
  CHECK(d.target == 2);
  CHECK(d.direction == -1);
  CHECK(d.position == std::vector<int>{3, 1, 2});
  CHECK(coin_position(s) == 1);

  const State id = state({1, 2, 3});
  CHECK(stone_diagram(id).stone_at == 1);
  CHECK(stone_diagram(id).target == 2);
  CHECK(stone_diagram(id).direction == 1);
  CHECK(coin_position(id) == 1);

  CHECK(stone_diagram(state({1, 2, 3}, 3, 1)).target == 1);
  CHECK(stone_diagram(state({1, 2, 3}, 3, -1)).stone_at == 1);
}

TEST_CASE("coin trace on the five-vertex tree") {
  // Coin on v1 heading to v2 through the refraction edge at t = 0.
  const State s = state({2, 1, 3, 4, 5}, 1, -1);
  const auto trace = coin_trace(five_tree(), s, 40);
  CHECK(trace[0] == 1);
  CHECK(trace[1] == 2);
  int first_back = -1;
  for (int t = 1; t + 1 < static_cast<int>(trace.size()); ++t) {
    if (trace[t] == 2 && trace[t + 1] == 1) {
      first_back = t;
      break;
    }
  }
  CHECK(first_back == 16);

  // The diagram at 17 is a rotation of the swapped-and-slid diagram at 0.
  const auto states = orbit(five_tree(), s, 1000);
  State slid = s;
  slid.sigma.swap_values(s.index, wrap(s.index + 1, 5));
  slid.index = wrap(s.index + s.eps, 5);
  bool rotated = false;
  for (int k = 0; k < 5; ++k) rotated = rotated || cyc_shift(slid, k) == states[17];
  CHECK(rotated);
  // After |V_T|(n-1) = 20 steps the diagram is rotated clockwise by one.
  CHECK(states[20] == cyc_shift(s, 1));
}

TEST_CASE("coin stays in its component and never moves without edges") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    // Random forest: random tree minus a few edges.
    const BilliardsGraph tree = random_tree(n, rng);
    std::vector<Edge> kept;
    for (const Edge& e : tree.edges()) {
      if (rng() % 3 != 0) kept.push_back(e);
    }
    const BilliardsGraph g(n, kept);
    const State s = random_state(n, rng);
    const auto comp = connected_component_of(g, coin_position(s));
    for (int v : coin_trace(g, s, 300)) CHECK(std::ranges::binary_search(comp, v));
  }
  const State s = state({4, 2, 1, 3}, 3, -1);
  for (int v : coin_trace(BilliardsGraph::edgeless(4), s, 50)) CHECK(v == coin_position(s));
}

TEST_CASE("make_state validates") {
  CHECK_THROWS_AS(make_state(Labeling::identity(3), 0, 1), Error);
  CHECK_THROWS_AS(make_state(Labeling::identity(3), 4, 1), Error);
  CHECK_THROWS_AS(make_state(Labeling::identity(3), 1, 0), Error);
}
