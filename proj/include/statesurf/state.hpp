#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "statesurf/diagram.hpp"

namespace statesurf {

struct KauffmanState {
  std::vector<Resolution> resolution;  // indexed by crossing id

  static KauffmanState all(int crossings, Resolution r) {
    return {std::vector<Resolution>(crossings, r)};
  }
  // Bit i of `mask` set means crossing i takes the B-resolution.
  static KauffmanState from_mask(int crossings, std::uint64_t mask);

  int size() const { return static_cast<int>(resolution.size()); }
  int count(Resolution r) const;
  std::string to_string() const;  // e.g. "ABBA"

  auto operator<=>(const KauffmanState&) const = default;
};

struct CircleSet {
  int count = 0;
  std::vector<int> circle_of_slot;  // empty for the 0-crossing diagram
  std::map<int, int> circle_of_arc;
};

struct StateEdge {
  int u = 0;
  int v = 0;
  int crossing = 0;
};

// One vertex per state circle, one edge per crossing (loops and parallel
// edges allowed).
struct StateGraph {
  int vertex_count = 0;
  std::vector<StateEdge> edges;
};

struct SimpleStateGraph {
  int vertex_count = 0;
  std::vector<StateEdge> edges;  // crossing field keeps the first representative
  int euler_characteristic() const { return vertex_count - static_cast<int>(edges.size()); }
};

struct SurfaceInvariants {
  int chi = 0;
  int boundary_components = 0;
  bool orientable = false;
  // Genus when orientable, crosscap number otherwise.
  int genus_or_crosscap = 0;
};

struct SpecialStates {
  KauffmanState all_a;
  KauffmanState all_b;
  KauffmanState seifert;
};

struct GeometryFlags {
  // Sufficient criterion for the all-A surface to be pi_1-injective.
  bool ga_no_one_edge_loops = false;
  // The link complement fibers over the circle with fiber the all-A surface
  // iff the simplified all-A graph is a tree.
  bool ga_prime_is_tree = false;
};

CircleSet trace_circles(const LinkDiagram& d, const KauffmanState& s);
StateGraph state_graph(const LinkDiagram& d, const KauffmanState& s);
SpecialStates special_states(const LinkDiagram& d);
SurfaceInvariants surface_invariants(const LinkDiagram& d, const KauffmanState& s);
SimpleStateGraph simplify_graph(const StateGraph& g);
GeometryFlags geometry_flags(const LinkDiagram& d);

// Propagates a side choice from one disk across every band; fails exactly
// when some band would force a disk to take both sides.
bool two_colorable(const StateGraph& g);
// Independent check: a graph has an odd cycle iff some connected component
// stays connected in its bipartite double cover.
bool has_odd_cycle(const StateGraph& g);

}  // namespace statesurf
