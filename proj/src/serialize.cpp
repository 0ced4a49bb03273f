#include "tpro/serialize.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "tpro/error.hpp"

namespace tpro {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(fmt::format("missing field \"{}\"", key));
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(fmt::format("\"{}\" must be an integer", what));
  return j.get<int>();
}

int optional_int(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  return as_int(j.at(key), key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(fmt::format("\"{}\" must be an array", what));
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

Json load_json(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) bad(fmt::format("cannot read {}", source));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    // nlohmann messages are single-line.
    bad(fmt::format("malformed JSON in {}: {}", source.size() > 40 ? "input" : source, e.what()));
  }
}

BilliardsGraph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  std::vector<RawEdge> raw;
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) bad("\"edges\" must be an array");
    for (const Json& e : edges) {
      RawEdge r;
      r.u = as_int(field(e, "u"), "u");
      r.v = as_int(field(e, "v"), "v");
      if (e.contains("kind")) {
        if (!e.at("kind").is_string()) bad("\"kind\" must be a string");
        r.kind = e.at("kind").get<std::string>();
      }
      raw.push_back(std::move(r));
    }
  }
  return validate_graph(n, raw);
}

Json to_json(const BilliardsGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", std::string(to_string(e.material))}});
  }
  return Json{{"n", g.n()}, {"edges", edges}};
}

Labeling labeling_from_json(const Json& j) {
  return Labeling::from_labels(int_list(field(j, "labels"), "labels"));
}

Json to_json(const Labeling& sigma) { return Json{{"labels", sigma.labels()}}; }

State state_from_json(const Json& j) {
  return make_state(labeling_from_json(j), optional_int(j, "i", 1), optional_int(j, "eps", 1));
}

Json to_json(const State& s) {
  return Json{{"labels", s.sigma.labels()}, {"i", s.index}, {"eps", s.eps}};
}

AffinePermutation window_from_json(const Json& j) {
  const Json& w = field(j, "window");
  if (!w.is_array()) bad("\"window\" must be an array");
  std::vector<std::int64_t> window;
  for (const auto& x : w) {
    if (!x.is_number_integer()) bad("\"window\" entries must be integers");
    window.push_back(x.get<std::int64_t>());
  }
  return affine_from_window(std::move(window));
}

LiftedState lifted_state_from_json(const Json& j) {
  AffinePermutation u = window_from_json(j);
  const int n = u.n();
  const int i = optional_int(j, "i", 1);
  const int eps = optional_int(j, "eps", 1);
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidState, fmt::format("i = {} outside 1..{}", i, n));
  if (eps != 1 && eps != -1) throw Error(ErrorKind::InvalidState, "eps must be 1 or -1");
  return LiftedState{std::move(u), i, eps};
}

Json to_json(const AffinePermutation& u) { return Json{{"window", u.window()}}; }

Json to_json(const LiftedState& s) {
  return Json{{"window", s.u.window()}, {"i", s.index}, {"eps", s.eps}};
}

Json to_json(const OrbitReport& report) {
  Json orbits = Json::array();
  for (const OrbitClass& c : report.orbits) orbits.push_back({{"size", c.size}, {"count", c.count}});
  return Json{{"orbits", orbits}, {"total", report.total}};
}

std::string to_csv(const OrbitReport& report) {
  std::string out = "size,count\n";
  for (const OrbitClass& c : report.orbits) out += fmt::format("{},{}\n", c.size, c.count);
  return out;
}

Json to_json(const CycleInvariants& inv) {
  return Json{{"a", inv.a}, {"p", inv.p}, {"m", inv.m}, {"mu", inv.mu}};
}

Json to_json(const IntPolynomial& p) { return Json(p.coefficients()); }

Json to_json(const CspReport& report) {
  Json ks = Json::array();
  for (const CspEntry& e : report.entries) {
    ks.push_back({{"k", e.k},
                  {"fixed", e.fixed},
                  {"F_at_root", complex_json(e.f_at_root)},
                  {"gamma_fixed", e.gamma_fixed},
                  {"match", e.match}});
  }
  return Json{{"n", report.n},
              {"F", to_json(report.polynomial)},
              {"k", ks},
              {"order", report.order},
              {"expected_order", report.expected_order},
              {"sizes_divisible", report.sizes_divisible},
              {"ok", report.ok}};
}

}  // namespace tpro
