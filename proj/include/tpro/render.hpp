#pragma once

#include <cstdint>
#include <string>

#include "tpro/affine.hpp"
#include "tpro/dynamics.hpp"

namespace tpro {

struct Palette {
  std::string reflect = "#d62728";
  std::string refract = "#17a2a2";
  std::string window = "#9e9e9e";
  std::string ink = "#222222";
  std::string stone = "#444444";
  std::string coin = "#e0b000";
};

struct RenderOptions {
  int width = 240;
  int height = 240;
  Palette palette;
  bool show_labels = true;
  std::uint64_t strip_cap = 64;
};

// Throws Error(InvalidArgument) on nonpositive dimensions.
void validate(const RenderOptions& opts);

std::string render_stone_diagram(const State& s, const RenderOptions& opts = {});

std::string render_coin_diagram(const BilliardsGraph& g, const State& s,
                                const RenderOptions& opts = {});

// One panel per state of the orbit of s. Throws Error(OrbitTooLarge) when the
// orbit is longer than opts.strip_cap.
std::string render_orbit_strip(const BilliardsGraph& g, const State& s,
                               const RenderOptions& opts = {});

// n = 3 only; throws Error(UnsupportedRank) otherwise.
std::string render_alcove_trajectory(const BilliardsGraph& g, const LiftedState& start,
                                     int steps, const RenderOptions& opts = {});

}  // namespace tpro
