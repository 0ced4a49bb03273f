#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tpro/affine.hpp"
#include "tpro/dynamics.hpp"

namespace tpro {

// Outcome of one brute-force vs closed-form comparison suite.
struct SuiteResult {
  std::string suite;
  std::string mode;  // "exhaustive" or "random"
  int n = 0;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches, one line each

  bool ok() const noexcept { return cases > 0 && mismatches == 0; }
};

inline constexpr int kMaxExhaustiveForest = 6;
inline constexpr int kMaxExhaustiveCycle = 8;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Uniform labeled tree on 1..n from a random Pruefer sequence, with each edge
// made Reflect or Refract by a fair coin.
BilliardsGraph random_tree(int n, std::mt19937_64& rng);
// Every vertex pair independently absent, Reflect or Refract.
BilliardsGraph random_graph(int n, std::mt19937_64& rng);
Labeling random_labeling(int n, std::mt19937_64& rng);
State random_state(int n, std::mt19937_64& rng);
// Random permutation plus a random sum-zero translation, entries within
// about n * spread of the identity window.
AffinePermutation random_affine(int n, std::mt19937_64& rng, int spread = 3);

// Every forest on n vertices, every material split, every state.
SuiteResult verify_forest_exhaustive(int n);
SuiteResult verify_forest_random(int n, std::uint64_t samples, std::uint64_t seed);

// Every even-refraction material assignment of the n-cycle and every
// labeling, starting at (sigma, 1, +1).
SuiteResult verify_cycle_exhaustive(int n);
SuiteResult verify_cycle_random(int n, std::uint64_t samples, std::uint64_t seed);
// All-reflect n-cycle: orbit of (sigma, 1, +1) has size p m n.
SuiteResult verify_reflect_cycles(int n);

// project(theta_tilde(x)) == theta(project(x)) along random walks; `samples`
// counts the steps checked.
SuiteResult verify_lift(int n, std::uint64_t samples, std::uint64_t seed);

// Coin first-return times and the rotation offset after a leaf crossing, on
// `samples` random trees with 3..n vertices.
SuiteResult verify_lemma(int n, std::uint64_t samples, std::uint64_t seed);

}  // namespace tpro
