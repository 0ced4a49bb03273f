#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpro {

enum class ErrorKind {
  InvalidGraph,
  InvalidLabeling,
  InvalidState,
  InvalidArgument,
  OddRefractionCycle,
  NotAForest,
  NotATreeEdge,
  NotACycle,
  RefractionPresent,
  CapacityExceeded,
  InternalMismatch,
  RootOfUnityMismatch,
  BadResidues,
  BadSum,
  Overflow,
  OrbitTooLarge,
  UnsupportedRank,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception. what() is a single
// line of the form "<Kind>: <detail>" so callers can print it verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tpro
