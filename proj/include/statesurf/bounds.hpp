#pragma once

#include <string>
#include <vector>

#include "statesurf/jones.hpp"

namespace statesurf {

// Constants at the precision they are usually quoted with.
inline constexpr double kOctahedronVolume = 3.6638;
inline constexpr double kTetrahedronVolume = 1.0149;

struct CrosscapBounds {
  int lower = 0;  // ceil(T/3) + 1
  int upper = 0;  // min(T + 1, floor(span/2))
  std::vector<std::string> notes;
};

struct VolumeBounds {
  double lower = 0.0;  // (v_oct / 2) (T - 2)
  double upper = 0.0;  // 10 v_tet (T - 1)
  std::vector<std::string> notes;
};

// Valid for alternating non-torus knots; the caller asserts that hypothesis.
CrosscapBounds crosscap_bounds(const JonesStats& stats, bool asserts_alternating_nontorus);

// Valid for hyperbolic alternating links; the caller asserts that hypothesis.
VolumeBounds volume_bounds(const JonesStats& stats, bool asserts_hyperbolic_alternating);

struct BoundsReport {
  CrosscapBounds crosscap;
  VolumeBounds volume;
};

BoundsReport bounds_report(const JonesStats& stats, bool asserts_nontorus, bool asserts_hyperbolic);

}  // namespace statesurf
