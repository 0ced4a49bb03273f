#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tpro/dynamics.hpp"

namespace tpro {

// Orbit size from the forest theorem: |V_T| n (n-1) / gcd(n, chi(T)) where T
// is the component holding the coin. Throws Error(NotAForest).
std::uint64_t forest_orbit_size(const BilliardsGraph& g, const State& s);

// eta for the tree edge {from, to}: the number of vertices of the component
// lying on the `to` side once the edge is cut. This is the quantity that
// governs the coin's first return across the edge after it crosses from
// `from` to `to`. Throws Error(NotATreeEdge).
int subtree_size(const BilliardsGraph& g, int from, int to);

// Vertices v_1..v_n of a cycle graph in the canonical naming: sigma(v_n) = 1
// and sigma(v_1) < sigma(v_{n-1}). materials[k] tags the edge between
// vertices[k] and vertices[(k+1) % n].
struct CycleOrdering {
  std::vector<int> vertices;
  std::vector<Material> materials;

  friend bool operator==(const CycleOrdering&, const CycleOrdering&) = default;
};

CycleOrdering canonicalize_cycle(const BilliardsGraph& g, const Labeling& sigma);

// Renames graph vertices so that ordering.vertices[k] becomes k+1; returns the
// renamed graph and labeling.
std::pair<BilliardsGraph, Labeling> relabel_by_ordering(const BilliardsGraph& g,
                                                        const Labeling& sigma,
                                                        const CycleOrdering& ordering);

// a_0..a_{n-2}. a_k = ((sigma(v_{k+1}) - sigma(v_k)) mod n) minus one if
// label 1 lies strictly inside the clockwise walk; a_0 walks v_{n-1} -> v_1.
std::vector<int> cycle_a_sequence(const CycleOrdering& ordering, const Labeling& sigma);

struct CycleInvariants {
  std::vector<int> a;
  int p = 0;
  int m = 0;
  int mu = 0;
  CycleOrdering ordering;
};

// Throws Error(NotACycle) or Error(OddRefractionCycle).
CycleInvariants cycle_invariants(const BilliardsGraph& g, const Labeling& sigma);

// Size of the orbit of (sigma, 1, +1):
//   (n p / gcd(n, mu)) (mu m + (n - mu)(n - 1 - m)).
std::uint64_t cycle_orbit_size(const BilliardsGraph& g, const Labeling& sigma);
std::uint64_t cycle_orbit_size(int n, const CycleInvariants& inv);

enum class PredictorKind { Forest, Cycle };

struct Prediction {
  PredictorKind kind;
  std::uint64_t size;
};

// Closed-form orbit size for any state of a forest, or of an even-refraction
// cycle (after omega normalization). nullopt when no closed form applies.
std::optional<Prediction> predict_orbit_size(const BilliardsGraph& g, const State& s);

}  // namespace tpro
