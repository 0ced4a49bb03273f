#include "tpro/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

// Position k of an m-gon, clockwise from the top.
Point on_circle(int k, int m, Point center, double radius) {
  const double angle = 2.0 * std::numbers::pi * (k - 1) / m - std::numbers::pi / 2;
  return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
}

std::string num(double v) {
  // Avoid "-0.00" so output bytes stay stable across platforms.
  if (std::abs(v) < 0.005) v = 0.0;
  return fmt::format("{:.2f}", v);
}

std::string header(int width, int height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      width, height, width, height);
}

const std::string& edge_color(const Palette& p, std::uint8_t tag) {
  if (tag == 1) return p.reflect;
  if (tag == 2) return p.refract;
  return p.window;
}

// Stone diagram drawn inside the square with top-left corner (x0, y0).
void stone_group(std::string& out, const State& s, double x0, double y0, double size,
                 const RenderOptions& opts) {
  const int n = s.n();
  const StoneDiagram d = stone_diagram(s);
  const Point c{x0 + size / 2, y0 + size / 2};
  const double radius = size * 0.36;
  const double node = std::max(3.0, size * 0.06);
  const auto& pal = opts.palette;

  out += fmt::format("<circle class=\"cycle\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" "
                     "stroke=\"{}\" stroke-width=\"1\"/>\n",
                     num(c.x), num(c.y), num(radius), pal.window);
  for (int k = 1; k <= n; ++k) {
    const Point p = on_circle(k, n, c, radius);
    out += fmt::format("<circle class=\"position\" data-position=\"{}\" cx=\"{}\" cy=\"{}\" "
                       "r=\"{}\" fill=\"white\" stroke=\"{}\"/>\n",
                       k, num(p.x), num(p.y), num(node), pal.ink);
  }

  const Point stone = on_circle(d.stone_at, n, c, radius);
  out += fmt::format("<circle class=\"stone\" data-position=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" "
                     "fill=\"{}\" fill-opacity=\"0.35\"/>\n",
                     d.stone_at, num(stone.x), num(stone.y), num(node * 1.8), pal.stone);

  // Arrow from the stone toward the target, pulled slightly outside the cycle.
  const double outer = radius + node * 2.6;
  const Point from = on_circle(d.stone_at, n, c, outer);
  const Point to = on_circle(d.target, n, c, outer);
  const double mx = from.x + 0.6 * (to.x - from.x);
  const double my = from.y + 0.6 * (to.y - from.y);
  const double dx = mx - from.x;
  const double dy = my - from.y;
  const double len = std::max(1e-9, std::hypot(dx, dy));
  const double ux = dx / len;
  const double uy = dy / len;
  const double head = node * 1.2;
  const Point left{mx - head * ux - head * 0.6 * uy, my - head * uy + head * 0.6 * ux};
  const Point right{mx - head * ux + head * 0.6 * uy, my - head * uy - head * 0.6 * ux};
  out += fmt::format(
      "<path class=\"arrow\" data-from=\"{}\" data-to=\"{}\" data-direction=\"{}\" "
      "d=\"M {} {} L {} {} M {} {} L {} {} L {} {}\" fill=\"none\" stroke=\"{}\" "
      "stroke-width=\"1.5\"/>\n",
      d.stone_at, d.target, d.direction == 1 ? "clockwise" : "counterclockwise", num(from.x),
      num(from.y), num(mx), num(my), num(left.x), num(left.y), num(mx), num(my), num(right.x),
      num(right.y), pal.ink);

  if (opts.show_labels) {
    const double font = std::max(6.0, size * 0.07);
    for (int v = 1; v <= n; ++v) {
      const int pos = d.position[v - 1];
      const Point p = on_circle(pos, n, c, radius - node * 2.8);
      out += fmt::format("<text class=\"replica\" data-vertex=\"{}\" data-position=\"{}\" "
                         "x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" "
                         "dominant-baseline=\"central\" fill=\"{}\">v{}</text>\n",
                         v, pos, num(p.x), num(p.y), num(font), pal.ink, v);
    }
  }
}

}  // namespace

void validate(const RenderOptions& opts) {
  if (opts.width <= 0 || opts.height <= 0) {
    throw Error(ErrorKind::InvalidArgument, "render dimensions must be positive");
  }
}

std::string render_stone_diagram(const State& s, const RenderOptions& opts) {
  validate(opts);
  std::string out = header(opts.width, opts.height);
  const double size = std::min(opts.width, opts.height);
  out += fmt::format("<g class=\"stone-diagram\" data-i=\"{}\" data-eps=\"{}\">\n", s.index, s.eps);
  stone_group(out, s, (opts.width - size) / 2, (opts.height - size) / 2, size, opts);
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_coin_diagram(const BilliardsGraph& g, const State& s,
                                const RenderOptions& opts) {
  validate(opts);
  if (g.n() != s.n()) throw Error(ErrorKind::InvalidArgument, "state and graph sizes differ");
  const int n = g.n();
  const auto& pal = opts.palette;
  const Point c{opts.width / 2.0, opts.height / 2.0};
  const double radius = std::min(opts.width, opts.height) * 0.38;
  const double node = std::max(4.0, radius * 0.09);

  std::string out = header(opts.width, opts.height);
  out += "<g class=\"coin-diagram\">\n";
  for (const Edge& e : g.edges()) {
    const Point a = on_circle(e.u, n, c, radius);
    const Point b = on_circle(e.v, n, c, radius);
    const std::string_view kind = to_string(e.material);
    out += fmt::format("<line class=\"edge {}\" data-u=\"{}\" data-v=\"{}\" x1=\"{}\" y1=\"{}\" "
                       "x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                       kind, e.u, e.v, num(a.x), num(a.y), num(b.x), num(b.y),
                       edge_color(pal, e.material == Material::Reflect ? 1 : 2));
  }
  for (int v = 1; v <= n; ++v) {
    const Point p = on_circle(v, n, c, radius);
    out += fmt::format("<circle class=\"vertex\" data-vertex=\"{}\" data-label=\"{}\" cx=\"{}\" "
                       "cy=\"{}\" r=\"{}\" fill=\"white\" stroke=\"{}\"/>\n",
                       v, s.sigma.label(v), num(p.x), num(p.y), num(node), pal.ink);
    if (opts.show_labels) {
      const Point t = on_circle(v, n, c, radius + node * 2.4);
      out += fmt::format("<text class=\"vertex-name\" x=\"{}\" y=\"{}\" font-size=\"{}\" "
                         "text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"{}\">"
                         "v{}:{}</text>\n",
                         num(t.x), num(t.y), num(node * 1.6), pal.ink, v, s.sigma.label(v));
    }
  }
  const int coin = coin_position(s);
  const Point p = on_circle(coin, n, c, radius);
  out += fmt::format("<circle class=\"coin\" data-vertex=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" "
                     "fill=\"{}\" stroke=\"{}\"/>\n",
                     coin, num(p.x), num(p.y), num(node * 0.6), pal.coin, pal.ink);
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_orbit_strip(const BilliardsGraph& g, const State& s,
                               const RenderOptions& opts) {
  validate(opts);
  if (g.n() != s.n()) throw Error(ErrorKind::InvalidArgument, "state and graph sizes differ");
  const std::vector<State> states = orbit(g, s, opts.strip_cap);
  const double size = opts.height;
  const int total_width = static_cast<int>(size * static_cast<double>(states.size()));

  std::string out = header(total_width, opts.height);
  out += fmt::format("<g class=\"orbit-strip\" data-panels=\"{}\">\n", states.size());
  for (std::size_t t = 0; t < states.size(); ++t) {
    out += fmt::format("<g class=\"panel\" data-step=\"{}\">\n", t);
    out += fmt::format("<rect class=\"frame\" x=\"{}\" y=\"0\" width=\"{}\" height=\"{}\" "
                       "fill=\"none\" stroke=\"{}\" stroke-width=\"0.5\"/>\n",
                       num(size * static_cast<double>(t)), num(size), num(size),
                       opts.palette.window);
    stone_group(out, states[t], size * static_cast<double>(t), 0.0, size, opts);
    out += "</g>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_alcove_trajectory(const BilliardsGraph& g, const LiftedState& start,
                                     int steps, const RenderOptions& opts) {
  validate(opts);
  if (g.n() != 3 || start.u.n() != 3) {
    throw Error(ErrorKind::UnsupportedRank,
                fmt::format("alcove pictures exist for n = 3 only, got n = {}", g.n()));
  }
  const std::vector<AffinePermutation> us = trajectory(g, start, steps);

  // Orthonormal basis of the plane x + y + z = 0.
  const double e1[3] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  const double e2[3] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
  auto plane = [&](const std::vector<std::int64_t>& x, double scale) {
    Point p;
    for (int r = 0; r < 3; ++r) {
      p.x += e1[r] * static_cast<double>(x[r]) / scale;
      p.y += e2[r] * static_cast<double>(x[r]) / scale;
    }
    return p;
  };

  // Centers are the base-alcove barycenter moved by the right action; the
  // barycenter scaled by 2n = 6 has integer coordinates.
  const std::vector<std::int64_t> base = fundamental_alcove_point(3);
  std::vector<Point> centers;
  centers.reserve(us.size());
  for (const auto& u : us) centers.push_back(plane(act_on_point(base, u, 6), 6.0));

  double lo_x = centers.front().x, hi_x = lo_x, lo_y = centers.front().y, hi_y = lo_y;
  for (const Point& p : centers) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double margin = 1.0;
  lo_x -= margin;
  hi_x += margin;
  lo_y -= margin;
  hi_y += margin;
  const double scale = std::min(opts.width / (hi_x - lo_x), opts.height / (hi_y - lo_y));
  const double off_x = (opts.width - scale * (hi_x - lo_x)) / 2;
  const double off_y = (opts.height - scale * (hi_y - lo_y)) / 2;
  auto screen = [&](Point p) {
    return Point{off_x + scale * (p.x - lo_x), off_y + scale * (hi_y - p.y)};
  };

  const auto& pal = opts.palette;
  std::string out = header(opts.width, opts.height);
  out += fmt::format("<g class=\"alcove-trajectory\" data-steps=\"{}\">\n", steps);

  // Lines x_i - x_j = k. In plane coordinates (a, b) this is alpha a + beta b = k.
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& pr : pairs) {
    const int i = pr[0];
    const int j = pr[1];
    const double alpha = e1[i - 1] - e1[j - 1];
    const double beta = e2[i - 1] - e2[j - 1];
    double kmin = 1e300, kmax = -1e300;
    for (double a : {lo_x, hi_x}) {
      for (double b : {lo_y, hi_y}) {
        kmin = std::min(kmin, alpha * a + beta * b);
        kmax = std::max(kmax, alpha * a + beta * b);
      }
    }
    const double norm2 = alpha * alpha + beta * beta;
    const std::string& color = edge_color(pal, g.tag(i, j));
    const char* kind = g.tag(i, j) == 0 ? "window" : (g.tag(i, j) == 1 ? "reflect" : "refract");
    for (auto k = static_cast<long long>(std::ceil(kmin)); k <= static_cast<long long>(std::floor(kmax));
         ++k) {
      const Point base_pt{alpha * k / norm2, beta * k / norm2};
      const double dx = -beta;
      const double dy = alpha;
      double t0 = -1e300, t1 = 1e300;
      auto clip = [&](double p, double d, double lo, double hi) {
        if (std::abs(d) < 1e-12) {
          if (p < lo || p > hi) t0 = 1, t1 = 0;
          return;
        }
        double a = (lo - p) / d, b = (hi - p) / d;
        if (a > b) std::swap(a, b);
        t0 = std::max(t0, a);
        t1 = std::min(t1, b);
      };
      clip(base_pt.x, dx, lo_x, hi_x);
      clip(base_pt.y, dy, lo_y, hi_y);
      if (t0 >= t1) continue;
      const Point a = screen({base_pt.x + t0 * dx, base_pt.y + t0 * dy});
      const Point b = screen({base_pt.x + t1 * dx, base_pt.y + t1 * dy});
      out += fmt::format("<line class=\"hyperplane {}\" data-i=\"{}\" data-j=\"{}\" data-k=\"{}\" "
                         "x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
                         "stroke-width=\"{}\"/>\n",
                         kind, i, j, k, num(a.x), num(a.y), num(b.x), num(b.y), color,
                         g.tag(i, j) == 0 ? "0.75" : "2");
    }
  }

  std::string points;
  for (std::size_t t = 0; t < centers.size(); ++t) {
    const Point p = screen(centers[t]);
    if (t > 0) points += ' ';
    points += num(p.x) + "," + num(p.y);
  }
  out += fmt::format("<polyline class=\"trajectory\" data-centers=\"{}\" points=\"{}\" "
                     "fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
                     centers.size(), points, pal.ink);
  const Point first = screen(centers.front());
  out += fmt::format("<circle class=\"start\" cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"{}\"/>\n",
                     num(first.x), num(first.y), pal.ink);
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace tpro
