#pragma once

#include <cstdint>
#include <vector>

#include "tpro/graph.hpp"

namespace tpro {

// Element (sigma, i, eps) of the state space: a labeling, an index in
// {1..n} standing for Z/nZ, and an orientation (+1 clockwise, -1
// counterclockwise).
struct State {
  Labeling sigma;
  int index = 1;
  int eps = 1;

  int n() const noexcept { return sigma.n(); }

  friend bool operator==(const State&, const State&) = default;
};

// Validating constructor; throws Error(InvalidState).
State make_state(Labeling sigma, int index, int eps);

// Representative of x in {1..n}.
constexpr int wrap(long long x, int n) noexcept {
  long long r = (x - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r) + 1;
}

// One step of toric promotion with reflections and refractions, in place.
inline void theta_step(const BilliardsGraph& g, State& s) noexcept {
  const int n = g.n();
  const int i = s.index;
  const int next = i == n ? 1 : i + 1;
  const std::uint8_t tag = g.tag(s.sigma.vertex_of(i), s.sigma.vertex_of(next));
  if (tag == 0) {
    s.sigma.swap_values(i, next);
    s.index = wrap(i + s.eps, n);
  } else if (tag == 1) {
    s.index = wrap(i + s.eps, n);
  } else {
    s.sigma.swap_values(i, next);
    s.index = wrap(i - s.eps, n);
    s.eps = -s.eps;
  }
}

State theta(const BilliardsGraph& g, const State& s);
State theta_inverse(const BilliardsGraph& g, const State& s);

// k-fold composition; negative k applies theta_inverse. Large |k| is reduced
// modulo the orbit length first.
State theta_power(const BilliardsGraph& g, const State& s, long long k);

std::uint64_t orbit_size(const BilliardsGraph& g, const State& s);

// The orbit in Theta order starting at s. Throws Error(OrbitTooLarge) when it
// has more than `cap` elements.
std::vector<State> orbit(const BilliardsGraph& g, const State& s, std::uint64_t cap);

// (omega o sigma, 1, +1), where omega is the rotation or reflection of the
// cycle taking the stone to position 1 and its direction to clockwise:
// omega(j) = eps(j - i - (1 - eps)/2) + 1.
State omega_normalize(const State& s);

// cyc^k: adds k to every label and to the index.
State cyc_shift(const State& s, long long k);

// First entry of Theta^n(sigma, 1, +1). Throws Error(RefractionPresent).
Labeling toric_promotion(const BilliardsGraph& g, const Labeling& sigma);

struct StoneDiagram {
  // position[v-1] = vertex of Cycle_n carrying the replica of v.
  std::vector<int> position;
  int stone_at = 1;
  int target = 2;
  int direction = 1;  // +1 clockwise, -1 counterclockwise

  friend bool operator==(const StoneDiagram&, const StoneDiagram&) = default;
};

StoneDiagram stone_diagram(const State& s);

// Vertex sigma^{-1}(i + (1 - eps)/2) of G that sits on the stone.
inline int coin_position(const State& s) noexcept {
  return s.sigma.vertex_of(s.eps == 1 ? s.index : wrap(s.index + 1, s.n()));
}

// Coin positions after t = 0..steps applications of Theta.
std::vector<int> coin_trace(const BilliardsGraph& g, const State& s, int steps);

}  // namespace tpro
