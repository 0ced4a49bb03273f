#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "support.hpp"
#include "tpro/error.hpp"
#include "tpro/graph.hpp"

using namespace tpro;
using namespace support;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalMismatch;
}

}  // namespace

TEST_CASE("validate_graph accepts the figure path and an empty edge set") {
  const std::vector<RawEdge> raw{{1, 2, "reflect"}, {3, 2, "refract"}};
  const BilliardsGraph g = validate_graph(3, raw);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge{1, 2, Material::Reflect});
  CHECK(g.edges()[1] == Edge{2, 3, Material::Refract});
  CHECK(g.material(3, 2) == Material::Refract);
  CHECK_FALSE(g.material(1, 3).has_value());

  CHECK(validate_graph(3, std::vector<RawEdge>{}).edges().empty());
}

TEST_CASE("validate_graph rejects malformed input") {
  CHECK(kind_of([] { validate_graph(3, std::vector<RawEdge>{{1, 1, "reflect"}}); }) ==
        ErrorKind::InvalidGraph);
  CHECK(kind_of([] { validate_graph(3, std::vector<RawEdge>{{1, 2, "reflect"}, {2, 1, "refract"}}); }) ==
        ErrorKind::InvalidGraph);
  CHECK(kind_of([] { validate_graph(3, std::vector<RawEdge>{{1, 4, "reflect"}}); }) ==
        ErrorKind::InvalidGraph);
  CHECK(kind_of([] { validate_graph(3, std::vector<RawEdge>{{1, 2, ""}}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { validate_graph(3, std::vector<RawEdge>{{1, 2, "mirror"}}); }) ==
        ErrorKind::InvalidGraph);
  CHECK(kind_of([] { validate_graph(2, std::vector<RawEdge>{}); }) == ErrorKind::InvalidGraph);
  CHECK(kind_of([] { BilliardsGraph::edgeless(kMaxVertices + 1); }) == ErrorKind::CapacityExceeded);
}

TEST_CASE("every edge carries exactly one material") {
  const BilliardsGraph g = seven_cycle();
  for (const Edge& e : g.edges()) {
    const auto m = g.material(e.u, e.v);
    REQUIRE(m.has_value());
    CHECK(*m == e.material);
    CHECK(g.tag(e.u, e.v) == (e.material == Material::Reflect ? 1 : 2));
  }
  CHECK(g.refraction_count() == 4);
}

TEST_CASE("labeling round trip and validation") {
  const Labeling sigma = Labeling::from_labels(std::vector<int>{3, 1, 4, 2});
  for (int v = 1; v <= 4; ++v) CHECK(sigma.vertex_of(sigma.label(v)) == v);
  for (int l = 1; l <= 4; ++l) CHECK(sigma.label(sigma.vertex_of(l)) == l);
  CHECK(kind_of([] { Labeling::from_labels(std::vector<int>{1, 1, 2}); }) == ErrorKind::InvalidLabeling);
  CHECK(kind_of([] { Labeling::from_labels(std::vector<int>{1, 2, 4}); }) == ErrorKind::InvalidLabeling);

  Labeling swapped = sigma;
  swapped.swap_values(1, 2);
  CHECK(swapped.labels() == std::vector<int>{3, 2, 4, 1});
}

TEST_CASE("connected components") {
  CHECK(connected_component_of(fig1(), 2) == std::vector<int>{1, 2, 3});
  CHECK(connected_component_of(BilliardsGraph::edgeless(3), 2) == std::vector<int>{2});
  const BilliardsGraph two(4, {{1, 2, R}, {3, 4, T}});
  CHECK(connected_component_of(two, 1) == std::vector<int>{1, 2});
  CHECK(connected_components(two).size() == 2);
}

TEST_CASE("sign partitions") {
  const auto all3 = std::vector<int>{1, 2, 3};
  CHECK(sign_partition(fig1(), all3, 1) == SignPartition{{1, 2}, {3}});

  // Example cycle anchored at its vertex 7.
  const auto all7 = std::vector<int>{1, 2, 3, 4, 5, 6, 7};
  CHECK(sign_partition(seven_cycle(), all7, 7) == SignPartition{{2, 3, 4, 7}, {1, 5, 6}});

  const BilliardsGraph triangle = BilliardsGraph::cycle(3, T);
  CHECK(kind_of([&] { sign_partition(triangle, all3, 1); }) == ErrorKind::OddRefractionCycle);
}

TEST_CASE("chi on paths and stars") {
  CHECK(chi(fig1(), std::vector<int>{1, 2, 3}) == 1);
  const BilliardsGraph p5 = BilliardsGraph::path(5, T);
  CHECK(chi(p5, std::vector<int>{1, 2, 3, 4, 5}) == 1);
  const BilliardsGraph p6 = BilliardsGraph::path(6, T);
  CHECK(chi(p6, std::vector<int>{1, 2, 3, 4, 5, 6}) == 0);

  for (int n = 3; n <= 8; ++n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int r = 0; r <= n - 1; ++r) {
      std::vector<Edge> edges;
      for (int leaf = 2; leaf <= n; ++leaf) edges.push_back({1, leaf, leaf - 2 < r ? T : R});
      CHECK(chi(BilliardsGraph(n, edges), all) == std::abs(n - 2 * r));
    }
  }
  CHECK(kind_of([] { chi(BilliardsGraph::cycle(4, R), std::vector<int>{1, 2, 3, 4}); }) ==
        ErrorKind::NotAForest);
}

TEST_CASE("sign partition is anchor independent up to swapping") {
  const BilliardsGraph g = five_tree();
  const auto all = std::vector<int>{1, 2, 3, 4, 5};
  const SignPartition base = sign_partition(g, all, 1);
  for (int anchor = 1; anchor <= 5; ++anchor) {
    const SignPartition p = sign_partition(g, all, anchor);
    const bool same = p == base;
    const bool swapped = p.plus == base.minus && p.minus == base.plus;
    CHECK((same || swapped));
  }
  // Refraction edges cross, reflection edges stay.
  for (const Edge& e : g.edges()) {
    const bool u_plus = std::ranges::binary_search(base.plus, e.u);
    const bool v_plus = std::ranges::binary_search(base.plus, e.v);
    CHECK((u_plus != v_plus) == (e.material == T));
  }
}

TEST_CASE("cycle sign partition exists exactly for even refraction counts") {
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    std::vector<Material> m(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int k = 0; k < n; ++k) m[k] = (mask >> k & 1) ? T : R;
      const BilliardsGraph g = BilliardsGraph::cycle(m);
      bool ok = true;
      try {
        sign_partition(g, all, 1);
      } catch (const Error& e) {
        ok = false;
        CHECK(e.kind() == ErrorKind::OddRefractionCycle);
      }
      CHECK(ok == (std::popcount(static_cast<unsigned>(mask)) % 2 == 0));
    }
  }
}

TEST_CASE("forest and cycle recognition") {
  CHECK(is_forest(fig1()));
  CHECK(is_forest(BilliardsGraph::edgeless(4)));
  CHECK_FALSE(is_forest(BilliardsGraph::cycle(4, R)));
  CHECK(is_cycle_graph(BilliardsGraph::cycle(5, T)));
  CHECK_FALSE(is_cycle_graph(BilliardsGraph::path(5, T)));
  CHECK_FALSE(is_cycle_graph(BilliardsGraph(6, {{1, 2, R}, {2, 3, R}, {3, 1, R}, {4, 5, R}, {5, 6, R}, {6, 4, R}})));
}
