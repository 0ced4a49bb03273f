#include "tpro/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "tpro/error.hpp"
#include "tpro/orbits.hpp"
#include "tpro/predictors.hpp"

namespace tpro {

namespace {

constexpr std::size_t kMaxExamples = 5;

void record(SuiteResult& r, bool ok, const std::function<std::string()>& describe) {
  ++r.cases;
  if (ok) return;
  ++r.mismatches;
  if (r.examples.size() < kMaxExamples) r.examples.push_back(describe());
}

std::string describe(const BilliardsGraph& g) {
  std::vector<std::string> parts;
  for (const Edge& e : g.edges()) {
    parts.push_back(fmt::format("{}-{}{}", e.u, e.v, e.material == Material::Reflect ? "R" : "T"));
  }
  return fmt::format("n={} [{}]", g.n(), fmt::join(parts, " "));
}

std::string describe(const State& s) {
  return fmt::format("({}, {}, {:+})", fmt::join(s.sigma.labels(), ""), s.index, s.eps);
}

void require_range(int n, int lo, int hi, const char* suite) {
  if (n < lo) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("{} needs n >= {}, got {}", suite, lo, n));
  }
  if (n > hi) {
    throw Error(ErrorKind::CapacityExceeded, fmt::format("{} supports n <= {}, got {}", suite, hi, n));
  }
}

// Orbit size of every state, indexed by state_rank.
std::vector<std::uint32_t> orbit_size_table(const BilliardsGraph& g) {
  const int n = g.n();
  const std::uint64_t total = state_count(n);
  std::vector<std::uint32_t> size(total, 0);
  std::vector<std::uint64_t> members;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (size[r] != 0) continue;
    members.clear();
    State s = state_unrank(n, r);
    std::uint64_t cur = r;
    do {
      members.push_back(cur);
      theta_step(g, s);
      cur = state_rank(s);
    } while (cur != r);
    for (std::uint64_t m : members) size[m] = static_cast<std::uint32_t>(members.size());
  }
  return size;
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

BilliardsGraph random_tree(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vertex(1, n);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = vertex(rng);
  std::vector<int> degree(n + 1, 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : prufer) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, x, coin(rng) ? Material::Refract : Material::Reflect});
    --degree[leaf];
    --degree[x];
  }
  std::vector<int> last;
  for (int v = 1; v <= n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.push_back({last[0], last[1], coin(rng) ? Material::Refract : Material::Reflect});
  return BilliardsGraph(n, std::move(edges));
}

BilliardsGraph random_graph(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Edge> edges;
  for (auto [u, v] : all_pairs(n)) {
    const int c = pick(rng);
    if (c != 0) edges.push_back({u, v, c == 1 ? Material::Reflect : Material::Refract});
  }
  return BilliardsGraph(n, std::move(edges));
}

Labeling random_labeling(int n, std::mt19937_64& rng) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), rng);
  return Labeling::from_labels(labels);
}

State random_state(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> index(1, n);
  std::bernoulli_distribution coin(0.5);
  Labeling sigma = random_labeling(n, rng);
  const int i = index(rng);
  return make_state(std::move(sigma), i, coin(rng) ? 1 : -1);
}

AffinePermutation random_affine(int n, std::mt19937_64& rng, int spread) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> shift(-spread, spread);
  std::vector<std::int64_t> window(n);
  std::int64_t total = 0;
  for (int r = 0; r + 1 < n; ++r) {
    const int c = shift(rng);
    total += c;
    window[r] = perm[r] + static_cast<std::int64_t>(n) * c;
  }
  window[n - 1] = perm[n - 1] - static_cast<std::int64_t>(n) * total;
  return AffinePermutation::from_window(std::move(window));
}

SuiteResult verify_forest_exhaustive(int n) {
  require_range(n, 3, kMaxExhaustiveForest, "exhaustive forest check");
  SuiteResult result{"forest", "exhaustive", n, 0, 0, {}};
  const auto pairs = all_pairs(n);
  const std::uint32_t subsets = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    if (std::popcount(mask) >= n) continue;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back({pairs[k].first, pairs[k].second, Material::Reflect});
    }
    if (!is_forest(BilliardsGraph(n, edges))) continue;
    const std::uint32_t splits = 1u << edges.size();
    for (std::uint32_t split = 0; split < splits; ++split) {
      for (std::size_t k = 0; k < edges.size(); ++k) {
        edges[k].material = (split >> k & 1) ? Material::Refract : Material::Reflect;
      }
      const BilliardsGraph g(n, edges);
      const auto sizes = orbit_size_table(g);
      // The formula only depends on the coin's component, so evaluate it once
      // per vertex and look it up for each state.
      std::vector<std::uint64_t> by_vertex(n + 1, 0);
      for (int v = 1; v <= n; ++v) {
        by_vertex[v] = forest_orbit_size(g, make_state(Labeling::identity(n), v, 1));
      }
      for (std::uint64_t r = 0; r < sizes.size(); ++r) {
        const State s = state_unrank(n, r);
        const std::uint64_t predicted = by_vertex[coin_position(s)];
        record(result, predicted == sizes[r], [&] {
          return fmt::format("{} state {}: brute {} formula {}", describe(g), describe(s), sizes[r],
                             predicted);
        });
      }
    }
  }
  return result;
}

SuiteResult verify_forest_random(int n, std::uint64_t samples, std::uint64_t seed) {
  require_range(n, 3, kMaxVertices, "random forest check");
  SuiteResult result{"forest", "random", n, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const BilliardsGraph g = random_tree(n, rng);
    const State s = random_state(n, rng);
    const std::uint64_t brute = orbit_size(g, s);
    const std::uint64_t predicted = forest_orbit_size(g, s);
    record(result, brute == predicted, [&] {
      return fmt::format("{} state {}: brute {} formula {}", describe(g), describe(s), brute,
                         predicted);
    });
  }
  return result;
}

SuiteResult verify_cycle_exhaustive(int n) {
  require_range(n, 3, kMaxExhaustiveCycle, "exhaustive cycle check");
  SuiteResult result{"cycle", "exhaustive", n, 0, 0, {}};
  std::vector<Material> materials(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    for (int k = 0; k < n; ++k) materials[k] = (mask >> k & 1) ? Material::Refract : Material::Reflect;
    const BilliardsGraph g = BilliardsGraph::cycle(materials);
    const auto sizes = orbit_size_table(g);
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    do {
      const State s = make_state(Labeling::from_labels(labels), 1, 1);
      const std::uint64_t brute = sizes[state_rank(s)];
      const std::uint64_t predicted = cycle_orbit_size(g, s.sigma);
      record(result, brute == predicted, [&] {
        return fmt::format("{} state {}: brute {} formula {}", describe(g), describe(s), brute,
                           predicted);
      });
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return result;
}

SuiteResult verify_cycle_random(int n, std::uint64_t samples, std::uint64_t seed) {
  require_range(n, 3, kMaxVertices, "random cycle check");
  SuiteResult result{"cycle", "random", n, 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Material> materials(n);
  for (std::uint64_t k = 0; k < samples; ++k) {
    int refract = 0;
    for (auto& m : materials) {
      m = coin(rng) ? Material::Refract : Material::Reflect;
      refract += m == Material::Refract;
    }
    // Flip one edge to make the refraction count even.
    if (refract % 2 != 0) {
      std::uniform_int_distribution<int> edge(0, n - 1);
      auto& m = materials[edge(rng)];
      m = m == Material::Refract ? Material::Reflect : Material::Refract;
    }
    const BilliardsGraph g = BilliardsGraph::cycle(materials);
    const State s = make_state(random_labeling(n, rng), 1, 1);
    const std::uint64_t brute = orbit_size(g, s);
    const std::uint64_t predicted = cycle_orbit_size(g, s.sigma);
    record(result, brute == predicted, [&] {
      return fmt::format("{} state {}: brute {} formula {}", describe(g), describe(s), brute,
                         predicted);
    });
  }
  return result;
}

SuiteResult verify_reflect_cycles(int n) {
  require_range(n, 3, kMaxExhaustiveCycle, "all-reflect cycle check");
  SuiteResult result{"reflect-cycle", "exhaustive", n, 0, 0, {}};
  const BilliardsGraph g = BilliardsGraph::cycle(n, Material::Reflect);
  const auto sizes = orbit_size_table(g);
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    const State s = make_state(Labeling::from_labels(labels), 1, 1);
    const CycleInvariants inv = cycle_invariants(g, s.sigma);
    const std::uint64_t predicted = static_cast<std::uint64_t>(inv.p) * inv.m * n;
    const std::uint64_t brute = sizes[state_rank(s)];
    record(result, brute == predicted, [&] {
      return fmt::format("state {}: brute {} p*m*n {}", describe(s), brute, predicted);
    });
  } while (std::next_permutation(labels.begin(), labels.end()));
  return result;
}

SuiteResult verify_lift(int n, std::uint64_t samples, std::uint64_t seed) {
  require_range(n, 3, kMaxVertices, "lift check");
  SuiteResult result{"lift", "random", n, 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, n);
  std::bernoulli_distribution coin(0.5);
  constexpr std::uint64_t kWalk = 8;
  while (result.cases < samples) {
    const BilliardsGraph g = random_graph(n, rng);
    LiftedState x{random_affine(n, rng), index(rng), coin(rng) ? 1 : -1};
    for (std::uint64_t step = 0; step < kWalk && result.cases < samples; ++step) {
      const LiftedState next = theta_tilde(g, x);
      const State expected = theta(g, project(x));
      const State got = project(next);
      record(result, got == expected, [&] {
        return fmt::format("{} window [{}] i={} eps={:+}: lifted {} direct {}", describe(g),
                           fmt::join(x.u.window(), ","), x.index, x.eps, describe(got),
                           describe(expected));
      });
      x = next;
    }
  }
  return result;
}

SuiteResult verify_lemma(int n, std::uint64_t samples, std::uint64_t seed) {
  require_range(n, 3, kMaxVertices, "lemma check");
  SuiteResult result{"lemma", "random", n, 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(3, n);
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    const int m = size_dist(rng);
    const BilliardsGraph g = random_tree(m, rng);
    const State start = random_state(m, rng);
    const std::uint64_t period = orbit_size(g, start);
    const auto span = static_cast<std::uint64_t>(m) * (m - 1);
    const std::uint64_t horizon = period + span + 2;

    std::vector<State> states;
    states.reserve(horizon + 1);
    states.push_back(start);
    for (std::uint64_t t = 0; t < horizon; ++t) states.push_back(theta(g, states.back()));
    std::vector<int> coin(states.size());
    for (std::size_t t = 0; t < states.size(); ++t) coin[t] = coin_position(states[t]);

    const std::vector<int> all = connected_component_of(g, coin[0]);
    const SignPartition parts = sign_partition(g, all, coin[0]);
    // X_1 holds the coin's vertex exactly when the stone points clockwise.
    const auto& x1 = start.eps == 1 ? parts.plus : parts.minus;
    const auto& xm1 = start.eps == 1 ? parts.minus : parts.plus;
    const long long signed_chi = static_cast<long long>(x1.size()) - static_cast<long long>(xm1.size());

    for (std::uint64_t t = 0; t < period; ++t) {
      const int a = coin[t];
      const int b = coin[t + 1];
      if (a == b) continue;
      const int eta = subtree_size(g, a, b);
      const std::uint64_t expected = t + static_cast<std::uint64_t>(eta) * (m - 1);
      std::uint64_t back = t + 1;
      while (back + 1 < coin.size() && !(coin[back] == b && coin[back + 1] == a)) ++back;
      record(result, back == expected, [&] {
        return fmt::format("{} start {}: crossing {}->{} at t={} returns at {} not {}", describe(g),
                           describe(start), a, b, t, back, expected);
      });

      // SD right after the return is a rotation of the swapped-and-slid diagram.
      State slid = states[t];
      slid.sigma.swap_values(slid.index, wrap(slid.index + 1, m));
      slid.index = wrap(slid.index + slid.eps, m);
      bool rotated = false;
      for (int k = 0; k < m && !rotated; ++k) rotated = cyc_shift(slid, k) == states[expected + 1];
      record(result, rotated, [&] {
        return fmt::format("{} start {}: diagram after return at {} is not a rotation",
                           describe(g), describe(start), expected + 1);
      });

      if (g.neighbors(a).size() != 1) continue;
      // Leaf crossing: after |V_T|(n-1) steps the diagram is cyc^delta of this one.
      const std::uint64_t later = t + static_cast<std::uint64_t>(all.size()) * (m - 1);
      int delta = -1;
      for (int k = 0; k < m && delta < 0; ++k) {
        if (cyc_shift(states[t], k) == states[later]) delta = k;
      }
      const long long want = ((-signed_chi) % m + m) % m;
      record(result, delta == want, [&] {
        return fmt::format("{} start {}: leaf crossing {}->{} at t={} has delta {} expected {}",
                           describe(g), describe(start), a, b, t, delta, want);
      });
    }
  }
  return result;
}

}  // namespace tpro
