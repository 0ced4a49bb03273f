#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reference.hpp"
#include "tpro/dynamics.hpp"
#include "tpro/graph.hpp"

namespace support {

using tpro::BilliardsGraph;
using tpro::Material;

inline constexpr Material R = Material::Reflect;
inline constexpr Material T = Material::Refract;

// Path 1-2-3 with {1,2} reflect and {2,3} refract.
inline BilliardsGraph fig1() { return BilliardsGraph(3, {{1, 2, R}, {2, 3, T}}); }

// Tree on five vertices: {1,2}, {2,5}, {3,4} refract, {2,3} reflect.
inline BilliardsGraph five_tree() {
  return BilliardsGraph(5, {{1, 2, T}, {2, 3, R}, {2, 5, T}, {3, 4, T}});
}

// Seven-cycle 1..7 with refraction edges {1,2}, {4,5}, {6,7}, {7,1}.
inline BilliardsGraph seven_cycle() {
  const std::vector<Material> m{T, R, R, T, R, T, T};
  return BilliardsGraph::cycle(m);
}

inline tpro::State state(std::vector<int> labels, int i = 1, int eps = 1) {
  return tpro::make_state(tpro::Labeling::from_labels(labels), i, eps);
}

inline ref::Materials materials(const BilliardsGraph& g) {
  ref::Materials m;
  for (const auto& e : g.edges()) m[{e.u, e.v}] = e.material == R ? 'R' : 'T';
  return m;
}

inline ref::RState to_ref(const tpro::State& s) { return {s.sigma.labels(), s.index, s.eps}; }

// Every state of an n-vertex graph.
inline std::vector<tpro::State> all_states(int n) {
  std::vector<tpro::State> out;
  std::vector<int> labels(n);
  for (int k = 0; k < n; ++k) labels[k] = k + 1;
  do {
    for (int i = 1; i <= n; ++i) {
      for (int eps : {1, -1}) out.push_back(state(labels, i, eps));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace support
