#include "tpro/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tpro/error.hpp"
#include "tpro/orbits.hpp"
#include "tpro/predictors.hpp"
#include "tpro/render.hpp"
#include "tpro/serialize.hpp"
#include "tpro/sieving.hpp"
#include "tpro/verify.hpp"

namespace tpro::cli {

namespace {

const std::set<std::string> kCommands = {"orbit", "predict", "verify", "tpro", "render", "gamma"};
const std::set<std::string> kVerifyTargets = {"forest", "cycle", "lift", "lemma", "csp"};
const std::set<std::string> kRenderTargets = {"stone", "coin", "strip", "alcoves"};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

void need(const Command& cmd, bool present, const char* flag) {
  if (!present) {
    throw UsageError(fmt::format("{}{}{} requires {}", cmd.name, cmd.target.empty() ? "" : " ",
                                 cmd.target, flag));
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapacityExceeded:
    case ErrorKind::OrbitTooLarge:
    case ErrorKind::Overflow:
      return kCapacity;
    case ErrorKind::InternalMismatch:
    case ErrorKind::RootOfUnityMismatch:
      return kMismatch;
    default:
      return kUsage;
  }
}

Json suite_json(const SuiteResult& r) {
  return Json{{"suite", r.suite},     {"mode", r.mode},         {"n", r.n},
              {"cases", r.cases},     {"mismatches", r.mismatches}, {"ok", r.ok()},
              {"examples", r.examples}};
}

struct Output {
  std::string text;
  int code = kOk;
};

std::string emit(const Json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

Output run_orbit(const Command& cmd) {
  const BilliardsGraph g = graph_from_json(load_json(*cmd.graph));
  if (cmd.state) {
    const State s = state_from_json(load_json(*cmd.state));
    if (s.n() != g.n()) throw Error(ErrorKind::InvalidState, "state and graph sizes differ");
    const std::uint64_t size = orbit_size(g, s);
    if (cmd.pretty) return {fmt::format("{}\n", size)};
    return {emit(Json{{"size", size}, {"state", to_json(s)}}, false)};
  }
  const OrbitReport report = orbit_decomposition(g, cmd.threads);
  if (cmd.format == "csv") return {to_csv(report)};
  if (cmd.pretty) {
    std::string text = fmt::format("{:>10} {:>10}\n", "size", "count");
    for (const OrbitClass& c : report.orbits) text += fmt::format("{:>10} {:>10}\n", c.size, c.count);
    text += fmt::format("{:>10} {:>10}\n", "total", report.total);
    return {text};
  }
  return {emit(to_json(report), false)};
}

Output run_predict(const Command& cmd) {
  const BilliardsGraph g = graph_from_json(load_json(*cmd.graph));
  const State s = state_from_json(load_json(*cmd.state));
  if (s.n() != g.n()) throw Error(ErrorKind::InvalidState, "state and graph sizes differ");
  const auto prediction = predict_orbit_size(g, s);
  Json j;
  if (!prediction) {
    j = Json{{"predictor", nullptr},
             {"size", nullptr},
             {"note", "no closed form: the graph is neither a forest nor a cycle with an even "
                      "number of refraction edges"}};
  } else if (prediction->kind == PredictorKind::Forest) {
    j = Json{{"predictor", "forest"}, {"size", prediction->size}};
  } else {
    const State normal = omega_normalize(s);
    j = Json{{"predictor", "cycle"},
             {"size", prediction->size},
             {"normalized", to_json(normal)},
             {"invariants", to_json(cycle_invariants(g, normal.sigma))}};
  }
  return {emit(j, cmd.pretty)};
}

Output run_verify(const Command& cmd) {
  const std::uint64_t seed = cmd.seed;
  if (cmd.target == "csp") {
    need(cmd, cmd.n.has_value(), "--n");
    const CspReport report = verify_csp(*cmd.n, cmd.threads);
    return {emit(to_json(report), cmd.pretty), report.ok ? kOk : kMismatch};
  }

  std::vector<SuiteResult> suites;
  if (cmd.target == "forest") {
    const int n = cmd.n.value_or(5);
    suites.push_back(cmd.exhaustive ? verify_forest_exhaustive(n)
                                    : verify_forest_random(n, cmd.samples.value_or(1000), seed));
  } else if (cmd.target == "cycle") {
    const int n = cmd.n.value_or(5);
    if (cmd.exhaustive) {
      suites.push_back(verify_cycle_exhaustive(n));
      suites.push_back(verify_reflect_cycles(n));
    } else {
      suites.push_back(verify_cycle_random(n, cmd.samples.value_or(1000), seed));
    }
  } else if (cmd.target == "lift") {
    suites.push_back(verify_lift(cmd.n.value_or(4), cmd.samples.value_or(10000), seed));
  } else {
    suites.push_back(verify_lemma(cmd.n.value_or(7), cmd.samples.value_or(100), seed));
  }

  const bool ok = std::all_of(suites.begin(), suites.end(), [](const auto& r) { return r.ok(); });
  const int code = ok ? kOk : kMismatch;
  if (cmd.pretty) {
    std::string text;
    for (const auto& r : suites) {
      text += fmt::format("{} {} n={}: {} cases, {} mismatches  {}\n", r.suite, r.mode, r.n, r.cases,
                          r.mismatches, r.ok() ? "PASS" : "FAIL");
      for (const auto& e : r.examples) text += "  " + e + "\n";
    }
    return {text, code};
  }
  Json list = Json::array();
  for (const auto& r : suites) list.push_back(suite_json(r));
  return {emit(Json{{"ok", ok}, {"seed", seed}, {"suites", list}}, false), code};
}

Output run_tpro(const Command& cmd) {
  const BilliardsGraph g = graph_from_json(load_json(*cmd.graph));
  const Labeling start = labeling_from_json(load_json(*cmd.state));
  if (start.n() != g.n()) throw Error(ErrorKind::InvalidLabeling, "labeling and graph sizes differ");
  const int steps = cmd.steps.value_or(1);
  if (steps < 0) throw UsageError("--steps must be nonnegative");
  Json seq = Json::array();
  Labeling sigma = start;
  seq.push_back(sigma.labels());
  for (int t = 0; t < steps; ++t) {
    sigma = toric_promotion(g, sigma);
    seq.push_back(sigma.labels());
  }
  return {emit(Json{{"steps", steps}, {"labelings", seq}}, cmd.pretty)};
}

Output run_render(const Command& cmd) {
  RenderOptions opts;
  if (cmd.cap) opts.strip_cap = *cmd.cap;
  if (cmd.target == "stone") {
    need(cmd, cmd.state.has_value(), "--state");
    return {render_stone_diagram(state_from_json(load_json(*cmd.state)), opts)};
  }
  need(cmd, cmd.graph.has_value(), "--graph");
  need(cmd, cmd.state.has_value(), "--state");
  const BilliardsGraph g = graph_from_json(load_json(*cmd.graph));
  if (cmd.target == "alcoves") {
    const int steps = cmd.steps.value_or(18);
    if (steps < 0) throw UsageError("--steps must be nonnegative");
    return {render_alcove_trajectory(g, lifted_state_from_json(load_json(*cmd.state)), steps, opts)};
  }
  const State s = state_from_json(load_json(*cmd.state));
  if (cmd.target == "coin") return {render_coin_diagram(g, s, opts)};
  return {render_orbit_strip(g, s, opts)};
}

Output run_gamma(const Command& cmd) {
  const std::uint64_t count = gamma_count(*cmd.m, *cmd.k);
  return {emit(Json{{"m", *cmd.m}, {"k", *cmd.k}, {"count", count}}, cmd.pretty)};
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  cmd.seed = kDefaultSeed;
  CLI::App app{"Toric promotion with reflections and refractions"};
  app.name("tpro");
  app.add_option("command", cmd.name, "orbit | predict | verify | tpro | render | gamma")->required();
  app.add_option("target", cmd.target, "verify: forest|cycle|lift|lemma|csp; render: stone|coin|strip|alcoves");
  app.add_option("--graph", cmd.graph, "graph JSON file or inline JSON");
  app.add_option("--state", cmd.state, "state, labeling or window JSON file or inline JSON");
  app.add_option("--n", cmd.n, "number of vertices");
  app.add_option("--k", cmd.k, "power or rotation amount");
  app.add_option("--m", cmd.m, "degree for gamma");
  app.add_option("--steps", cmd.steps, "number of steps");
  app.add_flag("--exhaustive", cmd.exhaustive, "check every case instead of sampling");
  app.add_option("--samples", cmd.samples, "number of random samples");
  app.add_option("--seed", cmd.seed, "random seed");
  app.add_option("--threads", cmd.threads, "worker threads for enumeration");
  app.add_option("--cap", cmd.cap, "largest orbit drawn by render strip");
  app.add_option("--format", cmd.format, "json or csv (orbit decomposition)");
  app.add_option("--out", cmd.out, "write output to this path");
  app.add_flag("--pretty", cmd.pretty, "human-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cmd.help = app.help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(one_line(e.what()));
  }

  if (!kCommands.contains(cmd.name)) throw UsageError(fmt::format("unknown command '{}'", cmd.name));
  if (cmd.name == "verify" || cmd.name == "render") {
    const auto& allowed = cmd.name == "verify" ? kVerifyTargets : kRenderTargets;
    if (cmd.target.empty()) throw UsageError(fmt::format("{} needs a target", cmd.name));
    if (!allowed.contains(cmd.target)) {
      throw UsageError(fmt::format("unknown {} target '{}'", cmd.name, cmd.target));
    }
  } else if (!cmd.target.empty()) {
    throw UsageError(fmt::format("unexpected argument '{}'", cmd.target));
  }
  if (cmd.threads < 1) throw UsageError("--threads must be at least 1");
  if (cmd.format != "json" && cmd.format != "csv") throw UsageError("--format must be json or csv");
  if (cmd.samples && *cmd.samples == 0) throw UsageError("--samples must be positive");

  if (cmd.name == "orbit" || cmd.name == "tpro") need(cmd, cmd.graph.has_value(), "--graph");
  if (cmd.name == "predict") {
    need(cmd, cmd.graph.has_value(), "--graph");
    need(cmd, cmd.state.has_value(), "--state");
  }
  if (cmd.name == "tpro") need(cmd, cmd.state.has_value(), "--state");
  if (cmd.name == "gamma") {
    need(cmd, cmd.m.has_value(), "--m");
    need(cmd, cmd.k.has_value(), "--k");
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.help.empty()) {
    out << cmd.help;
    return kOk;
  }
  Output result;
  try {
    if (cmd.name == "orbit") {
      result = run_orbit(cmd);
    } else if (cmd.name == "predict") {
      result = run_predict(cmd);
    } else if (cmd.name == "verify") {
      result = run_verify(cmd);
    } else if (cmd.name == "tpro") {
      result = run_tpro(cmd);
    } else if (cmd.name == "render") {
      result = run_render(cmd);
    } else {
      result = run_gamma(cmd);
    }
  } catch (const UsageError& e) {
    err << Json{{"error", "UsageError"}, {"detail", one_line(e.what())}}.dump() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"detail", one_line(e.detail())}}.dump()
        << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "InvalidArgument"}, {"detail", one_line(e.what())}}.dump() << "\n";
    return kUsage;
  }

  if (cmd.out) {
    std::ofstream file(*cmd.out, std::ios::binary);
    if (!file || !(file << result.text)) {
      err << Json{{"error", "IOError"}, {"detail", "cannot write " + *cmd.out}}.dump() << "\n";
      return kUsage;
    }
  } else {
    out << result.text;
  }
  return result.code;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << Json{{"error", "UsageError"}, {"detail", one_line(e.what())}}.dump() << "\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace tpro::cli
