#include "statesurf/state.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "statesurf/error.hpp"

namespace statesurf {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void require_total(const LinkDiagram& d, const KauffmanState& s) {
  if (s.size() != d.crossing_count()) {
    throw Error(ErrorKind::IncompleteState, "state assigns " + std::to_string(s.size()) +
                                                " resolutions but the diagram has " +
                                                std::to_string(d.crossing_count()) + " crossings");
  }
}

}  // namespace

KauffmanState KauffmanState::from_mask(int crossings, std::uint64_t mask) {
  KauffmanState s;
  s.resolution.resize(crossings);
  for (int i = 0; i < crossings; ++i) {
    s.resolution[i] = ((mask >> i) & 1u) ? Resolution::B : Resolution::A;
  }
  return s;
}

int KauffmanState::count(Resolution r) const {
  return static_cast<int>(std::count(resolution.begin(), resolution.end(), r));
}

std::string KauffmanState::to_string() const {
  std::string out;
  for (auto r : resolution) out.push_back(r == Resolution::A ? 'A' : 'B');
  return out;
}

CircleSet trace_circles(const LinkDiagram& d, const KauffmanState& s) {
  require_total(d, s);
  CircleSet out;
  const int slots = d.slot_count();
  if (slots == 0) {
    out.count = 1;
    return out;
  }
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  for (int slot = 0; slot < slots; ++slot) {
    const int x = crossing_of(slot);
    const int partner = slot_of(x, smoothing_partner(position_of(slot), s.resolution[x]));
    parent[find_root(parent, slot)] = find_root(parent, partner);
    parent[find_root(parent, slot)] = find_root(parent, d.mate(slot));
  }
  std::vector<int> index(slots, -1);
  out.circle_of_slot.resize(slots);
  for (int slot = 0; slot < slots; ++slot) {
    const int root = find_root(parent, slot);
    if (index[root] < 0) index[root] = out.count++;
    out.circle_of_slot[slot] = index[root];
    out.circle_of_arc[d.arc_label(slot)] = index[root];
  }
  return out;
}

StateGraph state_graph(const LinkDiagram& d, const KauffmanState& s) {
  const CircleSet circles = trace_circles(d, s);
  StateGraph g;
  g.vertex_count = circles.count;
  // Positions 0 and 2 always sit on the two different smoothing arcs.
  for (int x = 0; x < d.crossing_count(); ++x) {
    g.edges.push_back({circles.circle_of_slot[slot_of(x, 0)], circles.circle_of_slot[slot_of(x, 2)], x});
  }
  return g;
}

SpecialStates special_states(const LinkDiagram& d) {
  const int c = d.crossing_count();
  SpecialStates out{KauffmanState::all(c, Resolution::A), KauffmanState::all(c, Resolution::B), {}};
  // At a positive crossing the incoming ends sit at positions 0 and 3, so the
  // oriented smoothing pairs (0,1),(3,2): the A-resolution.
  out.seifert.resolution.resize(c);
  for (int x = 0; x < c; ++x) {
    out.seifert.resolution[x] = d.crossing_sign(x) > 0 ? Resolution::A : Resolution::B;
  }
  return out;
}

bool two_colorable(const StateGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(g.vertex_count, -1);
  for (int root = 0; root < g.vertex_count; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<int> todo;
    todo.push(root);
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          todo.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_odd_cycle(const StateGraph& g) {
  const int n = g.vertex_count;
  std::vector<int> base(n), cover(2 * n);
  std::iota(base.begin(), base.end(), 0);
  std::iota(cover.begin(), cover.end(), 0);
  for (const auto& e : g.edges) {
    base[find_root(base, e.u)] = find_root(base, e.v);
    cover[find_root(cover, 2 * e.u)] = find_root(cover, 2 * e.v + 1);
    cover[find_root(cover, 2 * e.u + 1)] = find_root(cover, 2 * e.v);
  }
  std::set<int> base_roots, cover_roots;
  for (int v = 0; v < n; ++v) base_roots.insert(find_root(base, v));
  for (int v = 0; v < 2 * n; ++v) cover_roots.insert(find_root(cover, v));
  return cover_roots.size() != 2 * base_roots.size();
}

SurfaceInvariants surface_invariants(const LinkDiagram& d, const KauffmanState& s) {
  const StateGraph g = state_graph(d, s);
  SurfaceInvariants out;
  out.chi = g.vertex_count - d.crossing_count();
  out.boundary_components = d.component_count();
  out.orientable = two_colorable(g);
  if (out.orientable) {
    const int twice_genus = 2 - out.chi - out.boundary_components;
    if (twice_genus % 2 != 0 || twice_genus < 0) {
      throw Error(ErrorKind::ParityError, "orientable state surface with chi + k of the wrong parity");
    }
    out.genus_or_crosscap = twice_genus / 2;
  } else {
    out.genus_or_crosscap = 2 - out.chi - out.boundary_components;
  }
  return out;
}

SimpleStateGraph simplify_graph(const StateGraph& g) {
  SimpleStateGraph out;
  out.vertex_count = g.vertex_count;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      out.edges.push_back(e);
      continue;
    }
    if (seen.insert(std::minmax(e.u, e.v)).second) out.edges.push_back(e);
  }
  return out;
}

GeometryFlags geometry_flags(const LinkDiagram& d) {
  const StateGraph ga = state_graph(d, KauffmanState::all(d.crossing_count(), Resolution::A));
  GeometryFlags flags;
  flags.ga_no_one_edge_loops =
      std::none_of(ga.edges.begin(), ga.edges.end(), [](const StateEdge& e) { return e.u == e.v; });
  // State graphs of connected diagrams are connected, so tree iff e = v - 1
  // with no loops.
  const SimpleStateGraph simple = simplify_graph(ga);
  flags.ga_prime_is_tree = flags.ga_no_one_edge_loops &&
                           static_cast<int>(simple.edges.size()) == simple.vertex_count - 1;
  return flags;
}

}  // namespace statesurf
