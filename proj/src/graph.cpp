#include "tpro/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

std::string_view to_string(Material m) {
  return m == Material::Reflect ? "reflect" : "refract";
}

BilliardsGraph::BilliardsGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, fmt::format("n = {} is below 3", n));
  if (n > kMaxVertices) {
    throw Error(ErrorKind::CapacityExceeded,
                fmt::format("n = {} exceeds the vertex limit {}", n, kMaxVertices));
  }
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  adjacency_.resize(n);
  for (Edge e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorKind::InvalidGraph,
                  fmt::format("edge {{{},{}}} has a vertex outside 1..{}", e.u, e.v, n));
    }
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, fmt::format("loop at vertex {}", e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    auto& slot = matrix_[(e.u - 1) * n + (e.v - 1)];
    if (slot != 0) {
      throw Error(ErrorKind::InvalidGraph, fmt::format("duplicate edge {{{},{}}}", e.u, e.v));
    }
    std::uint8_t tag = e.material == Material::Reflect ? 1 : 2;
    slot = tag;
    matrix_[(e.v - 1) * n + (e.u - 1)] = tag;
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
    if (e.material == Material::Refract) ++refraction_count_;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

BilliardsGraph BilliardsGraph::path(int n, Material m) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, m});
  return BilliardsGraph(n, std::move(edges));
}

BilliardsGraph BilliardsGraph::cycle(int n, Material m) {
  std::vector<Material> materials(n, m);
  return cycle(materials);
}

// materials[k] tags the edge {k+1, k+2}, the last one closing {n, 1}.
BilliardsGraph BilliardsGraph::cycle(std::span<const Material> materials) {
  int n = static_cast<int>(materials.size());
  std::vector<Edge> edges;
  for (int k = 0; k < n; ++k) edges.push_back({k + 1, k + 2 > n ? 1 : k + 2, materials[k]});
  return BilliardsGraph(n, std::move(edges));
}

BilliardsGraph validate_graph(int n, std::span<const RawEdge> raw) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& r : raw) {
    Material m;
    if (r.kind == "reflect") {
      m = Material::Reflect;
    } else if (r.kind == "refract") {
      m = Material::Refract;
    } else if (r.kind.empty()) {
      throw Error(ErrorKind::InvalidGraph,
                  fmt::format("edge {{{},{}}} has no material tag", r.u, r.v));
    } else {
      throw Error(ErrorKind::InvalidGraph,
                  fmt::format("edge {{{},{}}} has unknown material '{}'", r.u, r.v, r.kind));
    }
    edges.push_back({r.u, r.v, m});
  }
  return BilliardsGraph(n, std::move(edges));
}

Labeling Labeling::identity(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return from_labels(labels);
}

Labeling Labeling::from_labels(std::span<const int> labels) {
  int n = static_cast<int>(labels.size());
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidLabeling, fmt::format("labeling length {} out of range", n));
  }
  Labeling out;
  out.n_ = static_cast<std::uint8_t>(n);
  for (int v = 1; v <= n; ++v) {
    int l = labels[v - 1];
    if (l < 1 || l > n) {
      throw Error(ErrorKind::InvalidLabeling,
                  fmt::format("label {} of vertex {} outside 1..{}", l, v, n));
    }
    if (out.inverse_[l] != 0) {
      throw Error(ErrorKind::InvalidLabeling, fmt::format("label {} used twice", l));
    }
    out.label_[v] = static_cast<std::uint8_t>(l);
    out.inverse_[l] = static_cast<std::uint8_t>(v);
  }
  return out;
}

std::vector<int> Labeling::labels() const {
  return std::vector<int>(label_.begin() + 1, label_.begin() + 1 + n_);
}

std::vector<int> connected_component_of(const BilliardsGraph& g, int v) {
  if (v < 1 || v > g.n()) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("vertex {} outside 1..{}", v, g.n()));
  }
  std::vector<char> seen(g.n() + 1, 0);
  std::vector<int> out{v};
  seen[v] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int w : g.neighbors(out[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_components(const BilliardsGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(g.n() + 1, 0);
  for (int v = 1; v <= g.n(); ++v) {
    if (seen[v]) continue;
    auto comp = connected_component_of(g, v);
    for (int w : comp) seen[w] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

SignPartition sign_partition(const BilliardsGraph& g, std::span<const int> component,
                             int anchor) {
  std::vector<int> color(g.n() + 1, 0);
  std::vector<char> member(g.n() + 1, 0);
  for (int v : component) member[v] = 1;
  if (anchor < 1 || anchor > g.n() || !member[anchor]) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("anchor {} is not in the component", anchor));
  }
  std::deque<int> queue{anchor};
  color[anchor] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!member[w]) continue;
      int want = g.tag(v, w) == 2 ? -color[v] : color[v];
      if (color[w] == 0) {
        color[w] = want;
        queue.push_back(w);
      } else if (color[w] != want) {
        throw Error(ErrorKind::OddRefractionCycle,
                    "a cycle carries an odd number of refraction edges");
      }
    }
  }
  SignPartition out;
  for (int v : component) {
    if (color[v] == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("vertex {} is not connected to anchor {}", v, anchor));
    }
    (color[v] > 0 ? out.plus : out.minus).push_back(v);
  }
  std::sort(out.plus.begin(), out.plus.end());
  std::sort(out.minus.begin(), out.minus.end());
  return out;
}

namespace {

int edges_within(const BilliardsGraph& g, std::span<const int> component) {
  std::vector<char> member(g.n() + 1, 0);
  for (int v : component) member[v] = 1;
  int count = 0;
  for (const Edge& e : g.edges()) count += member[e.u] && member[e.v];
  return count;
}

}  // namespace

int chi(const BilliardsGraph& g, std::span<const int> component) {
  if (component.empty()) throw Error(ErrorKind::InvalidArgument, "empty component");
  if (edges_within(g, component) != static_cast<int>(component.size()) - 1) {
    throw Error(ErrorKind::NotAForest, "component is not a tree");
  }
  SignPartition p = sign_partition(g, component, component.front());
  int diff = static_cast<int>(p.plus.size()) - static_cast<int>(p.minus.size());
  return diff < 0 ? -diff : diff;
}

bool is_forest(const BilliardsGraph& g) {
  return static_cast<int>(g.edges().size()) ==
         g.n() - static_cast<int>(connected_components(g).size());
}

bool is_cycle_graph(const BilliardsGraph& g) {
  if (static_cast<int>(g.edges().size()) != g.n()) return false;
  for (int v = 1; v <= g.n(); ++v) {
    if (g.neighbors(v).size() != 2) return false;
  }
  return connected_component_of(g, 1).size() == static_cast<std::size_t>(g.n());
}

}  // namespace tpro
