#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "statesurf/diagram.hpp"
#include "statesurf/state.hpp"

namespace statesurf {

// The all-A state graph as a ribbon graph on the Turaev surface.
//
// Edge i is crossing i. Dart 2*i sits on the all-A circle through the
// smoothing arc (0,1) of crossing i, dart 2*i+1 on the circle through (2,3).
// rotation[v] lists the darts met in order along circle v, with every circle
// traversed so that each band is entered and left on the same side.
struct RibbonGraph {
  StateGraph graph;
  std::vector<std::vector<int>> rotation;

  int edge_count() const { return static_cast<int>(graph.edges.size()); }
};

RibbonGraph build_ribbon(const LinkDiagram& d);

// Number of boundary circles of the ribbon subgraph keeping every vertex and
// the listed edges.
int subgraph_faces(const RibbonGraph& r, std::span<const int> edge_subset);
// Same, with edge i kept iff keep[i] != 0.
int subgraph_faces_mask(const RibbonGraph& r, std::span<const std::uint8_t> keep);

// Reusable face counter for enumerating many edge subsets of one ribbon
// graph; bit i of the mask keeps edge i. Requires at most 64 edges.
class RibbonFaceCounter {
 public:
  explicit RibbonFaceCounter(const RibbonGraph& r);
  RibbonFaceCounter(RibbonGraph&&) = delete;  // keeps a reference to the graph
  int faces(std::uint64_t mask);

 private:
  const RibbonGraph& ribbon_;
  std::vector<int> next_;
  std::vector<std::uint8_t> seen_;
};

struct TuraevCellulation {
  int vertices = 0;  // crossings
  int edges = 0;     // 2 * crossings
  int faces = 0;     // all-A circles + all-B circles
  int genus = 0;
};

TuraevCellulation turaev_cellulation(const LinkDiagram& d);
int turaev_genus(const LinkDiagram& d);

}  // namespace statesurf
