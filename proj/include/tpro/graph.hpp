#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tpro {

// Vertices and labels are 1-based throughout. Labels represent Z/nZ with the
// representatives 1..n, so label n+1 wraps to 1.
inline constexpr int kMaxVertices = 32;

enum class Material : std::uint8_t { Reflect, Refract };

std::string_view to_string(Material m);

struct Edge {
  int u = 0;
  int v = 0;
  Material material = Material::Reflect;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge as it arrives from an external description; `kind` is the material
// tag ("reflect" or "refract") and is checked by validate_graph.
struct RawEdge {
  int u = 0;
  int v = 0;
  std::string kind;
};

// A simple graph on vertices 1..n whose edges are each tagged Reflect or
// Refract. Immutable after construction.
class BilliardsGraph {
 public:
  // Throws Error(InvalidGraph) on loops, duplicate edges, out-of-range
  // vertices or n < 3; Error(CapacityExceeded) when n > kMaxVertices.
  BilliardsGraph(int n, std::vector<Edge> edges);

  static BilliardsGraph edgeless(int n) { return BilliardsGraph(n, {}); }
  static BilliardsGraph path(int n, Material m);
  static BilliardsGraph cycle(int n, Material m);
  static BilliardsGraph cycle(std::span<const Material> materials);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v - 1]; }

  // Material of {a, b}, or nullopt when a and b are not adjacent.
  std::optional<Material> material(int a, int b) const {
    std::uint8_t tag = matrix_[(a - 1) * n_ + (b - 1)];
    if (tag == 0) return std::nullopt;
    return tag == 1 ? Material::Reflect : Material::Refract;
  }

  // 0 = non-edge, 1 = reflect, 2 = refract. Used on hot paths.
  std::uint8_t tag(int a, int b) const noexcept {
    return matrix_[(a - 1) * n_ + (b - 1)];
  }

  int refraction_count() const noexcept { return refraction_count_; }
  bool has_refraction() const noexcept { return refraction_count_ > 0; }

 private:
  int n_;
  int refraction_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<int>> adjacency_;
};

// Builds a graph from an untyped description, normalizing every pair to
// u < v. Rejects unknown or missing material tags in addition to the checks
// made by the BilliardsGraph constructor.
BilliardsGraph validate_graph(int n, std::span<const RawEdge> raw);

// Bijection from vertices {1..n} to labels {1..n}, storing both directions.
class Labeling {
 public:
  static Labeling identity(int n);
  // labels[v-1] is the label of vertex v. Throws Error(InvalidLabeling).
  static Labeling from_labels(std::span<const int> labels);

  int n() const noexcept { return n_; }
  int label(int v) const noexcept { return label_[v]; }
  int vertex_of(int label) const noexcept { return inverse_[label]; }
  std::vector<int> labels() const;

  // Post-composes with the transposition of the label values a and b.
  void swap_values(int a, int b) noexcept {
    int va = inverse_[a];
    int vb = inverse_[b];
    label_[va] = static_cast<std::uint8_t>(b);
    label_[vb] = static_cast<std::uint8_t>(a);
    inverse_[a] = static_cast<std::uint8_t>(vb);
    inverse_[b] = static_cast<std::uint8_t>(va);
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.n_ == b.n_ && a.label_ == b.label_;
  }

 private:
  Labeling() = default;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxVertices + 1> label_{};
  std::array<std::uint8_t, kMaxVertices + 1> inverse_{};
};

struct SignPartition {
  std::vector<int> plus;
  std::vector<int> minus;

  friend bool operator==(const SignPartition&, const SignPartition&) = default;
};

// Sorted vertex set of the connected component containing v.
std::vector<int> connected_component_of(const BilliardsGraph& g, int v);

std::vector<std::vector<int>> connected_components(const BilliardsGraph& g);

// Two-colors `component` so that refraction edges join opposite sides and
// reflection edges stay on one side, with `anchor` on the plus side. Throws
// Error(OddRefractionCycle) when no such coloring exists.
SignPartition sign_partition(const BilliardsGraph& g,
                             std::span<const int> component, int anchor);

// ||X_1| - |X_-1|| for a tree component. Throws Error(NotAForest) when the
// component contains a cycle.
int chi(const BilliardsGraph& g, std::span<const int> component);

bool is_forest(const BilliardsGraph& g);
bool is_cycle_graph(const BilliardsGraph& g);

}  // namespace tpro
