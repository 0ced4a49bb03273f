#pragma once

#include <cstdint>
#include <vector>

#include "tpro/dynamics.hpp"

namespace tpro {

// Largest n for which the whole state space (2 n n! states) is enumerated.
inline constexpr int kMaxEnumerationVertices = 9;

struct OrbitClass {
  std::uint64_t size = 0;
  std::uint64_t count = 0;

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

// Orbit sizes with multiplicities, ascending by size.
struct OrbitReport {
  int n = 0;
  std::vector<OrbitClass> orbits;
  std::uint64_t total = 0;

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

// 2 * n * n!
std::uint64_t state_count(int n);

// Position of sigma among the n! labelings in lexicographic order of the
// label sequence (Lehmer code).
std::uint64_t lehmer_rank(const Labeling& sigma);
Labeling lehmer_unrank(int n, std::uint64_t rank);

// ((lehmer_rank * n + (i - 1)) * 2 + (eps == -1)), a bijection onto
// [0, state_count(n)).
std::uint64_t state_rank(const State& s);
State state_unrank(int n, std::uint64_t rank);

// Partitions all of the state space into Theta-orbits. With threads > 1 the
// rank space is split across workers; the report is identical for every
// thread count. Throws Error(CapacityExceeded) for n > kMaxEnumerationVertices.
OrbitReport orbit_decomposition(const BilliardsGraph& g, int threads = 1);

// Number of states fixed by Theta^k: the states on orbits whose size divides k.
std::uint64_t fixed_point_count(const OrbitReport& report, std::uint64_t k);
std::uint64_t fixed_point_count(const BilliardsGraph& g, std::uint64_t k);

// Order of Theta^k as a permutation of the state space.
std::uint64_t power_order(const OrbitReport& report, std::uint64_t k);

}  // namespace tpro
