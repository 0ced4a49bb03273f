#include "tpro/predictors.hpp"

#include <numeric>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

std::uint64_t forest_orbit_size(const BilliardsGraph& g, const State& s) {
  if (!is_forest(g)) throw Error(ErrorKind::NotAForest, "graph contains a cycle");
  const auto n = static_cast<std::uint64_t>(g.n());
  const std::vector<int> component = connected_component_of(g, coin_position(s));
  const auto c = static_cast<std::uint64_t>(chi(g, component));
  return component.size() * n * (n - 1) / std::gcd(n, c);
}

int subtree_size(const BilliardsGraph& g, int from, int to) {
  if (from < 1 || from > g.n() || to < 1 || to > g.n() || !g.material(from, to)) {
    throw Error(ErrorKind::NotATreeEdge, fmt::format("{{{},{}}} is not an edge", from, to));
  }
  const std::vector<int> component = connected_component_of(g, from);
  std::vector<char> member(g.n() + 1, 0);
  for (int v : component) member[v] = 1;
  int inner_edges = 0;
  for (const Edge& e : g.edges()) inner_edges += member[e.u] && member[e.v];
  if (inner_edges != static_cast<int>(component.size()) - 1) {
    throw Error(ErrorKind::NotATreeEdge,
                fmt::format("{{{},{}}} lies in a component with a cycle", from, to));
  }
  std::vector<char> seen(g.n() + 1, 0);
  seen[from] = 1;
  seen[to] = 1;
  std::vector<int> stack{to};
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return count;
}

CycleOrdering canonicalize_cycle(const BilliardsGraph& g, const Labeling& sigma) {
  if (!is_cycle_graph(g)) throw Error(ErrorKind::NotACycle, "graph is not a single cycle");
  const int n = g.n();
  const int last = sigma.vertex_of(1);
  auto nbrs = g.neighbors(last);
  int first = nbrs[0];
  if (sigma.label(nbrs[1]) < sigma.label(first)) first = nbrs[1];

  CycleOrdering out;
  out.vertices.reserve(n);
  int prev = last;
  int cur = first;
  while (static_cast<int>(out.vertices.size()) < n - 1) {
    out.vertices.push_back(cur);
    auto around = g.neighbors(cur);
    int next = around[0] == prev ? around[1] : around[0];
    prev = cur;
    cur = next;
  }
  out.vertices.push_back(last);
  for (int k = 0; k < n; ++k) {
    out.materials.push_back(*g.material(out.vertices[k], out.vertices[(k + 1) % n]));
  }
  return out;
}

std::pair<BilliardsGraph, Labeling> relabel_by_ordering(const BilliardsGraph& g,
                                                        const Labeling& sigma,
                                                        const CycleOrdering& ordering) {
  const int n = g.n();
  std::vector<int> rename(n + 1);
  for (int k = 0; k < n; ++k) rename[ordering.vertices[k]] = k + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({rename[e.u], rename[e.v], e.material});
  std::vector<int> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = sigma.label(ordering.vertices[k]);
  return {BilliardsGraph(n, std::move(edges)), Labeling::from_labels(labels)};
}

std::vector<int> cycle_a_sequence(const CycleOrdering& ordering, const Labeling& sigma) {
  const int n = static_cast<int>(ordering.vertices.size());
  auto lab = [&](int k) { return sigma.label(ordering.vertices[k - 1]); };
  // Neither endpoint carries label 1, so label 1 is strictly inside the
  // clockwise walk x -> y exactly when the walk wraps past n.
  auto gap = [n](int x, int y) { return wrap(y - x + 1, n) - 1 - (y < x ? 1 : 0); };
  std::vector<int> a(n - 1);
  a[0] = gap(lab(n - 1), lab(1));
  for (int k = 1; k <= n - 2; ++k) a[k] = gap(lab(k), lab(k + 1));
  return a;
}

CycleInvariants cycle_invariants(const BilliardsGraph& g, const Labeling& sigma) {
  CycleInvariants inv;
  inv.ordering = canonicalize_cycle(g, sigma);
  const int n = g.n();
  if (g.refraction_count() % 2 != 0) {
    throw Error(ErrorKind::OddRefractionCycle,
                fmt::format("cycle has {} refraction edges", g.refraction_count()));
  }
  inv.a = cycle_a_sequence(inv.ordering, sigma);
  const int period_base = n - 1;
  for (int d = 1; d <= period_base; ++d) {
    if (period_base % d != 0) continue;
    bool periodic = true;
    for (int j = 0; j < period_base && periodic; ++j) {
      periodic = inv.a[(j + d) % period_base] == inv.a[j];
    }
    if (periodic) {
      inv.p = d;
      break;
    }
  }
  const int sum = std::accumulate(inv.a.begin(), inv.a.end(), 0);
  if (sum % period_base != 0 || sum == 0) {
    throw Error(ErrorKind::InternalMismatch,
                fmt::format("a-sequence sum {} is not a positive multiple of {}", sum, period_base));
  }
  inv.m = sum / period_base;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  inv.mu = static_cast<int>(sign_partition(g, all, inv.ordering.vertices.back()).plus.size());
  return inv;
}

std::uint64_t cycle_orbit_size(int n, const CycleInvariants& inv) {
  const long long nn = n;
  const long long lead = nn * inv.p / std::gcd(nn, static_cast<long long>(inv.mu));
  const long long body =
      static_cast<long long>(inv.mu) * inv.m + (nn - inv.mu) * (nn - 1 - inv.m);
  return static_cast<std::uint64_t>(lead * body);
}

std::uint64_t cycle_orbit_size(const BilliardsGraph& g, const Labeling& sigma) {
  return cycle_orbit_size(g.n(), cycle_invariants(g, sigma));
}

std::optional<Prediction> predict_orbit_size(const BilliardsGraph& g, const State& s) {
  if (is_forest(g)) return Prediction{PredictorKind::Forest, forest_orbit_size(g, s)};
  if (is_cycle_graph(g) && g.refraction_count() % 2 == 0) {
    return Prediction{PredictorKind::Cycle, cycle_orbit_size(g, omega_normalize(s).sigma)};
  }
  return std::nullopt;
}

}  // namespace tpro
