#pragma once

#include <array>
#include <optional>
#include <string>

#include "plic/incidence.hpp"

namespace plic {

struct RenderOptions {
  int chart = 2;  // which homogeneous coordinate is set to 1: 0=x, 1=y, 2=z
  std::optional<ProjMap> pre_map;
  std::optional<std::array<Rat, 4>> viewport;  // xmin, ymin, xmax, ymax
  int width_px = 640;
  // When set, a structure line equal to the chart's line at infinity is an
  // error; otherwise it is drawn as a dashed frame just inside the viewport.
  bool strict_chart = false;
};

// Deterministic SVG: exact rational geometry, fixed-precision printing of
// the final pixel coordinates only. Finite points become circles, points at
// infinity become boundary arrows in their direction, lines are clipped to
// the viewport. 3-valent elements red, 4-valent blue, all others gray.
std::string render_svg(const IncidenceStructure& s, const Realization& r,
                       const RenderOptions& opts);

}  // namespace plic
