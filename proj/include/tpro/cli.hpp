#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpro::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCapacity = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string name;    // orbit, predict, verify, tpro, render, gamma
  std::string target;  // verify: forest|cycle|lift|lemma|csp; render: stone|coin|strip|alcoves
  std::optional<std::string> graph;
  std::optional<std::string> state;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<int> steps;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> cap;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "json";
  std::optional<std::string> out;
  bool pretty = false;
  // Set when --help was requested; run() prints it and exits 0.
  std::string help;
};

// argv without the program name. Throws UsageError naming the offending flag.
Command parse_args(const std::vector<std::string>& args);

// Executes the command, writing results to `out` (or the --out file) and a
// single-line reason to `err` on failure. Returns the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_args + run with usage errors mapped to exit code 2.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpro::cli
