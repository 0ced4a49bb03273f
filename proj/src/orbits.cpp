#include "tpro/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

constexpr std::uint64_t kChunk = 1 << 14;

}  // namespace

std::uint64_t state_count(int n) { return 2ull * n * factorial(n); }

std::uint64_t lehmer_rank(const Labeling& sigma) {
  const int n = sigma.n();
  std::uint32_t used = 0;
  std::uint64_t rank = 0;
  for (int v = 1; v <= n; ++v) {
    const int l = sigma.label(v);
    const std::uint32_t below = (1u << (l - 1)) - 1;
    const int smaller_unused = (l - 1) - std::popcount(used & below);
    rank = rank * static_cast<std::uint64_t>(n - v + 1) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << (l - 1);
  }
  return rank;
}

Labeling lehmer_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(n);
  for (int v = n; v >= 1; --v) {
    const auto base = static_cast<std::uint64_t>(n - v + 1);
    digits[v - 1] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) {
    labels[v] = pool[digits[v]];
    pool.erase(pool.begin() + digits[v]);
  }
  return Labeling::from_labels(labels);
}

std::uint64_t state_rank(const State& s) {
  const auto n = static_cast<std::uint64_t>(s.n());
  return ((lehmer_rank(s.sigma) * n + static_cast<std::uint64_t>(s.index - 1)) * 2) +
         (s.eps == -1 ? 1 : 0);
}

State state_unrank(int n, std::uint64_t rank) {
  const int eps = (rank & 1) ? -1 : 1;
  rank >>= 1;
  const int index = static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
  rank /= static_cast<std::uint64_t>(n);
  return State{lehmer_unrank(n, rank), index, eps};
}

// Each worker walks the forward cycle of every start rank not yet marked
// visited. Two workers may walk the same orbit concurrently; the orbit is
// counted only by the walker that first claims its minimum rank.
OrbitReport orbit_decomposition(const BilliardsGraph& g, int threads) {
  const int n = g.n();
  if (n > kMaxEnumerationVertices) {
    throw Error(ErrorKind::CapacityExceeded,
                fmt::format("orbit enumeration supports n <= {}, got {}",
                            kMaxEnumerationVertices, n));
  }
  threads = std::max(threads, 1);
  const std::uint64_t total = state_count(n);
  std::vector<std::uint8_t> visited(total, 0);
  std::vector<std::uint8_t> claimed(total, 0);
  std::atomic<std::uint64_t> next_chunk{0};
  std::map<std::uint64_t, std::uint64_t> merged;
  std::mutex merge_mutex;

  auto worker = [&] {
    std::map<std::uint64_t, std::uint64_t> local;
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t start = begin; start < end; ++start) {
        if (std::atomic_ref<std::uint8_t>(visited[start]).load(std::memory_order_relaxed)) {
          continue;
        }
        State cur = state_unrank(n, start);
        std::uint64_t rank = start;
        std::uint64_t lowest = start;
        std::uint64_t size = 0;
        do {
          std::atomic_ref<std::uint8_t>(visited[rank]).store(1, std::memory_order_relaxed);
          theta_step(g, cur);
          rank = state_rank(cur);
          lowest = std::min(lowest, rank);
          ++size;
        } while (rank != start);
        if (std::atomic_ref<std::uint8_t>(claimed[lowest]).exchange(1) == 0) ++local[size];
      }
    }
    std::lock_guard lock(merge_mutex);
    for (auto [size, count] : local) merged[size] += count;
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  OrbitReport report;
  report.n = n;
  for (auto [size, count] : merged) {
    report.orbits.push_back({size, count});
    report.total += size * count;
  }
  if (report.total != total) {
    throw Error(ErrorKind::InternalMismatch,
                fmt::format("orbits cover {} of {} states", report.total, total));
  }
  return report;
}

std::uint64_t fixed_point_count(const OrbitReport& report, std::uint64_t k) {
  std::uint64_t fixed = 0;
  for (const OrbitClass& c : report.orbits) {
    if (k % c.size == 0) fixed += c.size * c.count;
  }
  return fixed;
}

std::uint64_t fixed_point_count(const BilliardsGraph& g, std::uint64_t k) {
  return fixed_point_count(orbit_decomposition(g), k);
}

std::uint64_t power_order(const OrbitReport& report, std::uint64_t k) {
  std::uint64_t order = 1;
  for (const OrbitClass& c : report.orbits) {
    order = std::lcm(order, c.size / std::gcd(c.size, k));
  }
  return order;
}

}  // namespace tpro
