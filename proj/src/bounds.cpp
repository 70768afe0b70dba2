#include "statesurf/bounds.hpp"

#include <algorithm>

#include "statesurf/error.hpp"

namespace statesurf {

CrosscapBounds crosscap_bounds(const JonesStats& stats, bool asserts_alternating_nontorus) {
  if (stats.span < 0) throw Error(ErrorKind::NegativeSpan, "negative Jones span");
  const long t = stats.t_sum;
  CrosscapBounds b;
  b.lower = static_cast<int>((t + 2) / 3) + 1;
  b.upper = static_cast<int>(std::min<long>(t + 1, stats.span / 2));
  if (!asserts_alternating_nontorus) {
    b.notes.push_back("crosscap bounds hold for alternating non-torus knots; hypothesis not asserted");
  }
  if (b.lower > b.upper) {
    b.notes.push_back("lower bound exceeds upper bound: the knot cannot be alternating and non-torus");
  }
  return b;
}

VolumeBounds volume_bounds(const JonesStats& stats, bool asserts_hyperbolic_alternating) {
  const double t = static_cast<double>(stats.t_sum);
  VolumeBounds b;
  b.lower = (kOctahedronVolume / 2.0) * (t - 2.0);
  b.upper = 10.0 * kTetrahedronVolume * (t - 1.0);
  if (!asserts_hyperbolic_alternating) {
    b.notes.push_back("volume bounds hold for hyperbolic alternating links; hypothesis not asserted");
  }
  if (b.lower <= 0.0) b.notes.push_back("lower volume bound is non-positive (vacuous)");
  return b;
}

BoundsReport bounds_report(const JonesStats& stats, bool asserts_nontorus, bool asserts_hyperbolic) {
  return {crosscap_bounds(stats, asserts_nontorus), volume_bounds(stats, asserts_hyperbolic)};
}

}  // namespace statesurf
