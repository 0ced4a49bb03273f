#include "tpro/affine.hpp"

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "window entry");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "window entry");
  return r;
}

// Residue in {0..n-1}.
std::int64_t residue(std::int64_t x, int n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Representative in {1..n}.
int rep(std::int64_t x, int n) { return static_cast<int>(residue(x - 1, n)) + 1; }

}  // namespace

AffinePermutation AffinePermutation::from_window(std::vector<std::int64_t> window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "empty window");
  std::vector<char> seen(n, 0);
  std::int64_t sum = 0;
  for (std::int64_t x : window) {
    auto r = residue(x, n);
    if (seen[r]) {
      throw Error(ErrorKind::BadResidues,
                  fmt::format("two window entries are congruent to {} mod {}", r, n));
    }
    seen[r] = 1;
    sum = add(sum, x);
  }
  const std::int64_t expected = static_cast<std::int64_t>(n) * (n + 1) / 2;
  if (sum != expected) {
    throw Error(ErrorKind::BadSum, fmt::format("window sums to {}, expected {}", sum, expected));
  }
  return AffinePermutation(std::move(window));
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<std::int64_t> w(n);
  for (int r = 0; r < n; ++r) w[r] = r + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation affine_from_window(std::vector<std::int64_t> window) {
  if (window.size() < 3) throw Error(ErrorKind::InvalidArgument, "window length must be >= 3");
  return AffinePermutation::from_window(std::move(window));
}

std::int64_t AffinePermutation::operator()(std::int64_t x) const {
  const int n = this->n();
  const int r = rep(x, n);
  return add(window_[r - 1], x - r);
}

std::int64_t AffinePermutation::inverse_at(std::int64_t y) const {
  const int n = this->n();
  const std::int64_t target = residue(y, n);
  for (int r = 1; r <= n; ++r) {
    if (residue(window_[r - 1], n) == target) return add(r, y - window_[r - 1]);
  }
  throw Error(ErrorKind::InternalMismatch, "window misses a residue");
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<std::int64_t> w(n());
  for (int r = 1; r <= n(); ++r) w[r - 1] = inverse_at(r);
  return AffinePermutation(std::move(w));
}

AffinePermutation compose(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.n() != v.n()) throw Error(ErrorKind::InvalidArgument, "rank mismatch");
  std::vector<std::int64_t> w(u.n());
  for (int r = 1; r <= u.n(); ++r) w[r - 1] = u(v(r));
  return AffinePermutation(std::move(w));
}

AffinePermutation left_mul_simple(int i, const AffinePermutation& u) {
  const int n = u.n();
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidArgument, fmt::format("index {} outside 1..{}", i, n));
  const std::int64_t lo = residue(i, n);
  const std::int64_t hi = residue(i + 1, n);
  std::vector<std::int64_t> w = u.window();
  for (auto& x : w) {
    const std::int64_t r = residue(x, n);
    if (r == lo) {
      x = add(x, 1);
    } else if (r == hi) {
      x = add(x, -1);
    }
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation reflection(int n, std::int64_t a, std::int64_t b) {
  if (residue(a, n) == residue(b, n)) {
    throw Error(ErrorKind::InvalidArgument, "r_{a,b} needs a and b incongruent mod n");
  }
  const std::int64_t d = b - a;
  std::vector<std::int64_t> w(n);
  for (int x = 1; x <= n; ++x) {
    if (residue(x, n) == residue(a, n)) {
      w[x - 1] = add(x, d);
    } else if (residue(x, n) == residue(b, n)) {
      w[x - 1] = add(x, -d);
    } else {
      w[x - 1] = x;
    }
  }
  return AffinePermutation(std::move(w));
}

Labeling project(const AffinePermutation& u) {
  std::vector<int> labels(u.n());
  for (int r = 0; r < u.n(); ++r) labels[r] = rep(u.window()[r], u.n());
  return Labeling::from_labels(labels);
}

CorootVector nu(const AffinePermutation& u, int i, int eps) {
  const int n = u.n();
  const Labeling bar = project(u);
  const int pos = bar.vertex_of(rep(i + (1 - eps) / 2, n));
  CorootVector out{std::vector<std::int64_t>(n, eps)};
  out.entries[pos - 1] = static_cast<std::int64_t>(eps) * (1 - n);
  return out;
}

// r_{a,b} = r_{a', b' + (pb - pa) n} with a = a' + pa n, b = b' + pb n. With the
// right action below it reflects through x_{a'} - x_{b'} = -(pb - pa).
Hyperplane hyperplane_of_reflection(int n, std::int64_t a, std::int64_t b) {
  const int ar = rep(a, n);
  const int br = rep(b, n);
  if (ar == br) throw Error(ErrorKind::InvalidArgument, "r_{a,b} needs a and b incongruent mod n");
  const std::int64_t shift = (b - br) / n - (a - ar) / n;
  if (ar < br) return Hyperplane{ar, br, -shift};
  return Hyperplane{br, ar, shift};
}

Hyperplane separating_hyperplane(const AffinePermutation& u, int i) {
  const int n = u.n();
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidArgument, fmt::format("index {} outside 1..{}", i, n));
  return hyperplane_of_reflection(n, u.inverse_at(i), u.inverse_at(i + 1));
}

std::vector<std::int64_t> act_on_point(std::span<const std::int64_t> x,
                                       const AffinePermutation& u, std::int64_t scale) {
  const int n = u.n();
  std::vector<std::int64_t> out(n);
  for (int r = 1; r <= n; ++r) {
    const std::int64_t image = u.window()[r - 1];
    const int w = rep(image, n);
    const std::int64_t c = (image - w) / n;
    out[r - 1] = add(x[w - 1], -mul(scale, c));
  }
  return out;
}

std::vector<std::int64_t> fundamental_alcove_point(int n) {
  std::vector<std::int64_t> x(n);
  for (int r = 1; r <= n; ++r) x[r - 1] = n + 1 - 2 * r;
  return x;
}

LiftedState theta_tilde(const BilliardsGraph& g, const LiftedState& s) {
  const int n = g.n();
  if (s.u.n() != n) throw Error(ErrorKind::InvalidArgument, "rank of u differs from the graph");
  const int next = s.index == n ? 1 : s.index + 1;
  const int a = rep(s.u.inverse_at(s.index), n);
  const int b = rep(s.u.inverse_at(next), n);
  switch (g.tag(a, b)) {
    case 0:
      return {left_mul_simple(s.index, s.u), wrap(s.index + s.eps, n), s.eps};
    case 1:
      return {s.u, wrap(s.index + s.eps, n), s.eps};
    default:
      return {left_mul_simple(s.index, s.u), wrap(s.index - s.eps, n), -s.eps};
  }
}

std::vector<LiftedState> lifted_orbit(const BilliardsGraph& g, const LiftedState& start,
                                      int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "steps must be nonnegative");
  std::vector<LiftedState> out{start};
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (int t = 0; t < steps; ++t) out.push_back(theta_tilde(g, out.back()));
  return out;
}

std::vector<AffinePermutation> trajectory(const BilliardsGraph& g, const LiftedState& start,
                                          int steps) {
  std::vector<AffinePermutation> out;
  for (auto& s : lifted_orbit(g, start, steps)) out.push_back(std::move(s.u));
  return out;
}

}  // namespace tpro
