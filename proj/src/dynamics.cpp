#include "tpro/dynamics.hpp"

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

constexpr long long kDirectPowerLimit = 4096;

}  // namespace

State make_state(Labeling sigma, int index, int eps) {
  if (index < 1 || index > sigma.n()) {
    throw Error(ErrorKind::InvalidState,
                fmt::format("index {} outside 1..{}", index, sigma.n()));
  }
  if (eps != 1 && eps != -1) {
    throw Error(ErrorKind::InvalidState, fmt::format("orientation {} is not +1 or -1", eps));
  }
  return State{sigma, index, eps};
}

State theta(const BilliardsGraph& g, const State& s) {
  State out = s;
  theta_step(g, out);
  return out;
}

// Every case of theta maps (sigma, i, eps) to a state with index i + delta
// where delta is the new orientation, and leaves the pair of vertices holding
// labels i, i+1 unchanged as a set. So the preimage index is j - delta and the
// material of that pair decides which case ran.
State theta_inverse(const BilliardsGraph& g, const State& s) {
  const int n = g.n();
  State out = s;
  const int i = wrap(s.index - s.eps, n);
  const int next = i == n ? 1 : i + 1;
  const std::uint8_t tag = g.tag(s.sigma.vertex_of(i), s.sigma.vertex_of(next));
  out.index = i;
  if (tag != 1) out.sigma.swap_values(i, next);
  if (tag == 2) out.eps = -s.eps;
  return out;
}

std::uint64_t orbit_size(const BilliardsGraph& g, const State& s) {
  State cur = s;
  std::uint64_t k = 0;
  do {
    theta_step(g, cur);
    ++k;
  } while (!(cur == s));
  return k;
}

State theta_power(const BilliardsGraph& g, const State& s, long long k) {
  if (k > kDirectPowerLimit || k < -kDirectPowerLimit) {
    auto period = static_cast<long long>(orbit_size(g, s));
    k %= period;
    if (k < 0) k += period;
  }
  State cur = s;
  if (k >= 0) {
    for (long long t = 0; t < k; ++t) theta_step(g, cur);
  } else {
    for (long long t = 0; t < -k; ++t) cur = theta_inverse(g, cur);
  }
  return cur;
}

std::vector<State> orbit(const BilliardsGraph& g, const State& s, std::uint64_t cap) {
  std::vector<State> out{s};
  State cur = theta(g, s);
  while (!(cur == s)) {
    if (out.size() >= cap) {
      throw Error(ErrorKind::OrbitTooLarge,
                  fmt::format("orbit has more than {} states", cap));
    }
    out.push_back(cur);
    theta_step(g, cur);
  }
  return out;
}

State omega_normalize(const State& s) {
  const int n = s.n();
  std::vector<int> labels(n);
  const int stone = s.index + (1 - s.eps) / 2;
  for (int v = 1; v <= n; ++v) {
    labels[v - 1] = wrap(static_cast<long long>(s.eps) * (s.sigma.label(v) - stone) + 1, n);
  }
  return State{Labeling::from_labels(labels), 1, 1};
}

State cyc_shift(const State& s, long long k) {
  const int n = s.n();
  std::vector<int> labels(n);
  for (int v = 1; v <= n; ++v) labels[v - 1] = wrap(s.sigma.label(v) + k, n);
  return State{Labeling::from_labels(labels), wrap(s.index + k, n), s.eps};
}

Labeling toric_promotion(const BilliardsGraph& g, const Labeling& sigma) {
  if (g.has_refraction()) {
    throw Error(ErrorKind::RefractionPresent,
                "toric promotion needs a graph without refraction edges");
  }
  return theta_power(g, State{sigma, 1, 1}, g.n()).sigma;
}

StoneDiagram stone_diagram(const State& s) {
  const int n = s.n();
  StoneDiagram d;
  d.position = s.sigma.labels();
  d.stone_at = s.eps == 1 ? s.index : wrap(s.index + 1, n);
  d.target = s.eps == 1 ? wrap(s.index + 1, n) : s.index;
  d.direction = s.eps;
  return d;
}

std::vector<int> coin_trace(const BilliardsGraph& g, const State& s, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "steps must be nonnegative");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  State cur = s;
  out.push_back(coin_position(cur));
  for (int t = 0; t < steps; ++t) {
    theta_step(g, cur);
    out.push_back(coin_position(cur));
  }
  return out;
}

}  // namespace tpro
