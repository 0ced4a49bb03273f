#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tpro/dynamics.hpp"

namespace tpro {

// Element u of the affine symmetric group in window notation
// [u(1), ..., u(n)], extended by u(x + n) = u(x) + n. The window entries have
// pairwise distinct residues mod n and sum to n(n+1)/2.
class AffinePermutation {
 public:
  // Throws Error(BadResidues) or Error(BadSum).
  static AffinePermutation from_window(std::vector<std::int64_t> window);
  static AffinePermutation identity(int n);

  int n() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<std::int64_t>& window() const noexcept { return window_; }

  std::int64_t operator()(std::int64_t x) const;
  std::int64_t inverse_at(std::int64_t y) const;
  AffinePermutation inverse() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  explicit AffinePermutation(std::vector<std::int64_t> window) : window_(std::move(window)) {}
  std::vector<std::int64_t> window_;

  friend AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);
  friend AffinePermutation left_mul_simple(int i, const AffinePermutation& u);
  friend AffinePermutation reflection(int n, std::int64_t a, std::int64_t b);
};

AffinePermutation affine_from_window(std::vector<std::int64_t> window);

// (u o v)(x) = u(v(x))
AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v);

// s~_i o u, where s~_i = r_{i,i+1} swaps the values congruent to i and i+1.
AffinePermutation left_mul_simple(int i, const AffinePermutation& u);

// r_{a,b} = prod_j (a + jn  b + jn), for a and b not congruent mod n.
AffinePermutation reflection(int n, std::int64_t a, std::int64_t b);

// Reduction of the window mod n into {1..n}.
Labeling project(const AffinePermutation& u);

struct CorootVector {
  std::vector<std::int64_t> entries;
  friend bool operator==(const CorootVector&, const CorootVector&) = default;
};

// Entry eps(1 - n) at position u-bar^{-1}(i + (1 - eps)/2), eps elsewhere.
CorootVector nu(const AffinePermutation& u, int i, int eps);

// H^k_{i,j} = {x in U : x_i - x_j = k} with i < j.
struct Hyperplane {
  int i = 1;
  int j = 2;
  std::int64_t k = 0;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// The hyperplane fixed by the reflection r_{a,b}.
Hyperplane hyperplane_of_reflection(int n, std::int64_t a, std::int64_t b);

// Wall between the alcoves of u and s~_i u; its reflection is
// u^{-1} s~_i u = r_{u^{-1}(i), u^{-1}(i+1)}.
Hyperplane separating_hyperplane(const AffinePermutation& u, int i);

// Right action of u on a point of U, on coordinates scaled by `scale`:
// (x . u)_r = x_{w(r)} - scale * c_r where u(r) = w(r) + c_r n, w(r) in 1..n.
std::vector<std::int64_t> act_on_point(std::span<const std::int64_t> x,
                                       const AffinePermutation& u, std::int64_t scale);

// An interior point of the fundamental alcove, scaled by 2n so its
// coordinates are integers: x_r = n + 1 - 2r.
std::vector<std::int64_t> fundamental_alcove_point(int n);

struct LiftedState {
  AffinePermutation u;
  int index = 1;
  int eps = 1;
  friend bool operator==(const LiftedState&, const LiftedState&) = default;
};

// Lift of Theta: the wall H^{(u,i)} is a window, mirror or metalens according
// to the material of the edge {u-bar^{-1}(i), u-bar^{-1}(i+1)} of g.
LiftedState theta_tilde(const BilliardsGraph& g, const LiftedState& s);

// u_0, ..., u_steps along the discrete billiards trajectory.
std::vector<AffinePermutation> trajectory(const BilliardsGraph& g, const LiftedState& start,
                                          int steps);

// The full lifted states, t = 0..steps.
std::vector<LiftedState> lifted_orbit(const BilliardsGraph& g, const LiftedState& start,
                                      int steps);

inline State project(const LiftedState& s) { return State{project(s.u), s.index, s.eps}; }

}  // namespace tpro
