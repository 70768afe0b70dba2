#include "statesurf/ribbon.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "statesurf/error.hpp"

namespace statesurf {

namespace {

struct DartVisit {
  int dart = 0;
  bool ccw = false;  // smoothing arc traversed 0->1 or 2->3
};

}  // namespace

RibbonGraph build_ribbon(const LinkDiagram& d) {
  const int c = d.crossing_count();
  const KauffmanState all_a = KauffmanState::all(c, Resolution::A);
  const CircleSet circles = trace_circles(d, all_a);

  RibbonGraph r;
  r.graph = state_graph(d, all_a);
  r.rotation.assign(circles.count, {});
  if (c == 0) return r;

  std::vector<std::vector<DartVisit>> walks(circles.count);
  std::vector<std::uint8_t> seen(d.slot_count(), 0);
  for (int start = 0; start < d.slot_count(); ++start) {
    if (seen[start]) continue;
    auto& walk = walks[circles.circle_of_slot[start]];
    int u = start;
    do {
      const int x = crossing_of(u);
      const int pos = position_of(u);
      const int partner = slot_of(x, smoothing_partner(pos, Resolution::A));
      seen[u] = seen[partner] = 1;
      walk.push_back({2 * x + (pos < 2 ? 0 : 1), pos % 2 == 0});
      u = d.mate(partner);
    } while (u != start);
  }

  std::vector<int> vertex_of_dart(2 * c);
  std::vector<std::uint8_t> ccw_of_dart(2 * c);
  for (int v = 0; v < circles.count; ++v) {
    for (const auto& visit : walks[v]) {
      vertex_of_dart[visit.dart] = v;
      ccw_of_dart[visit.dart] = visit.ccw;
    }
  }

  // Reverse some circles so that both ends of every band carry the same
  // traversal sense.
  std::vector<std::vector<std::pair<int, int>>> constraints(circles.count);
  for (int x = 0; x < c; ++x) {
    const int a = vertex_of_dart[2 * x], b = vertex_of_dart[2 * x + 1];
    const int parity = ccw_of_dart[2 * x] != ccw_of_dart[2 * x + 1] ? 1 : 0;
    constraints[a].emplace_back(b, parity);
    constraints[b].emplace_back(a, parity);
  }
  std::vector<int> flip(circles.count, -1);
  for (int root = 0; root < circles.count; ++root) {
    if (flip[root] >= 0) continue;
    flip[root] = 0;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (auto [w, parity] : constraints[v]) {
        const int want = flip[v] ^ parity;
        if (flip[w] < 0) {
          flip[w] = want;
          todo.push(w);
        } else if (flip[w] != want) {
          throw std::logic_error("all-A ribbon graph is not orientable; diagram conventions are inconsistent");
        }
      }
    }
  }

  for (int v = 0; v < circles.count; ++v) {
    auto& rot = r.rotation[v];
    for (const auto& visit : walks[v]) rot.push_back(visit.dart);
    if (flip[v]) std::reverse(rot.begin(), rot.end());
  }
  return r;
}

int subgraph_faces_mask(const RibbonGraph& r, std::span<const std::uint8_t> keep) {
  const int darts = 2 * r.edge_count();
  std::vector<int> next(darts, -1);
  int isolated = 0;
  std::vector<int> kept;
  for (const auto& rot : r.rotation) {
    kept.clear();
    for (int dart : rot) {
      if (keep[dart / 2]) kept.push_back(dart);
    }
    if (kept.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t i = 0; i < kept.size(); ++i) next[kept[i]] = kept[(i + 1) % kept.size()];
  }
  std::vector<std::uint8_t> seen(darts, 0);
  int orbits = 0;
  for (int start = 0; start < darts; ++start) {
    if (!keep[start / 2] || seen[start]) continue;
    ++orbits;
    int dart = start;
    do {
      seen[dart] = 1;
      dart = next[dart ^ 1];
    } while (dart != start);
  }
  return orbits + isolated;
}

int subgraph_faces(const RibbonGraph& r, std::span<const int> edge_subset) {
  std::vector<std::uint8_t> keep(r.edge_count(), 0);
  for (int e : edge_subset) {
    if (e < 0 || e >= r.edge_count() || keep[e]) {
      throw Error(ErrorKind::EdgeNotPresent, "edge " + std::to_string(e) +
                                                 " is not an edge of the all-A graph (or listed twice)");
    }
    keep[e] = 1;
  }
  return subgraph_faces_mask(r, keep);
}

RibbonFaceCounter::RibbonFaceCounter(const RibbonGraph& r)
    : ribbon_(r), next_(2 * r.edge_count()), seen_(2 * r.edge_count()) {
  if (r.edge_count() > 64) throw std::invalid_argument("RibbonFaceCounter supports at most 64 edges");
}

int RibbonFaceCounter::faces(std::uint64_t mask) {
  auto kept = [mask](int dart) { return ((mask >> (dart / 2)) & 1u) != 0; };
  int isolated = 0;
  for (const auto& rot : ribbon_.rotation) {
    int first = -1, prev = -1;
    for (int dart : rot) {
      if (!kept(dart)) continue;
      if (first < 0) first = dart;
      else next_[prev] = dart;
      prev = dart;
    }
    if (first < 0) ++isolated;
    else next_[prev] = first;
  }
  std::fill(seen_.begin(), seen_.end(), 0);
  int orbits = 0;
  const int darts = static_cast<int>(next_.size());
  for (int start = 0; start < darts; ++start) {
    if (!kept(start) || seen_[start]) continue;
    ++orbits;
    int dart = start;
    do {
      seen_[dart] = 1;
      dart = next_[dart ^ 1];
    } while (dart != start);
  }
  return orbits + isolated;
}

TuraevCellulation turaev_cellulation(const LinkDiagram& d) {
  const int c = d.crossing_count();
  TuraevCellulation t;
  t.vertices = c;
  t.edges = 2 * c;
  t.faces = trace_circles(d, KauffmanState::all(c, Resolution::A)).count +
            trace_circles(d, KauffmanState::all(c, Resolution::B)).count;
  const int twice_genus = 2 - t.vertices + t.edges - t.faces;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorKind::ParityError, "Turaev surface Euler characteristic has the wrong parity");
  }
  t.genus = twice_genus / 2;
  return t;
}

int turaev_genus(const LinkDiagram& d) { return turaev_cellulation(d).genus; }

}  // namespace statesurf
