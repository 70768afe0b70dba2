#include "statesurf/adams_kindred.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "statesurf/error.hpp"

namespace statesurf {

namespace {

bool region_less(const Region& a, const Region& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.boundary < b.boundary;
}

// Resolution per crossing that turns the region into a state circle. In an
// alternating diagram all corners of a region agree; otherwise the first
// corner met decides.
std::vector<std::pair<int, Resolution>> closing_resolutions(const Region& r) {
  std::vector<std::pair<int, Resolution>> out;
  for (const auto& corner : r.boundary) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.first == corner.crossing; });
    if (!seen) out.emplace_back(corner.crossing, corner_closing_resolution(corner.pos));
  }
  return out;
}

AKBranch apply(AKBranch b, const std::vector<std::pair<int, Resolution>>& resolutions, bool flip) {
  for (auto [x, res] : resolutions) b = smooth(b, x, flip ? opposite(res) : res);
  return b;
}

}  // namespace

Region min_region(const PartialDiagram& p) {
  if (p.remaining_crossings() == 0) {
    throw Error(ErrorKind::NoCrossings, "no regions to choose: every crossing is already smoothed");
  }
  const auto regions = faces(p);
  return *std::min_element(regions.begin(), regions.end(), region_less);
}

std::vector<AKBranch> ak_expand(const AKBranch& b) {
  const Region smallest = min_region(b);
  std::vector<AKBranch> children;
  if (smallest.size() == 2) {
    std::vector<Region> bigons;
    for (auto& r : faces(b)) {
      if (r.size() == 2) bigons.push_back(std::move(r));
    }
    std::sort(bigons.begin(), bigons.end(), region_less);
    for (const auto& bigon : bigons) children.push_back(apply(b, closing_resolutions(bigon), false));
    return children;
  }
  const auto closing = closing_resolutions(smallest);
  children.push_back(apply(b, closing, false));
  if (smallest.size() >= 3) children.push_back(apply(b, closing, true));
  return children;
}

AKResult ak_run(const LinkDiagram& d, const AKOptions& options) {
  AKResult result;
  result.alternating_input = classify(d).alternating;

  std::unordered_set<std::string> visited;
  std::map<std::string, KauffmanState> best;  // keyed by resolution log
  int best_circles = -1;

  std::vector<AKBranch> stack{PartialDiagram(d)};
  visited.insert(stack.back().log_key());
  while (!stack.empty()) {
    AKBranch branch = std::move(stack.back());
    stack.pop_back();

    if (branch.remaining_crossings() == 0) {
      ++result.terminal_states;
      const int circles = branch.free_circles();
      if (circles < best_circles) continue;
      if (circles > best_circles) {
        best_circles = circles;
        best.clear();
      }
      KauffmanState state;
      for (const auto& r : branch.resolution_log()) state.resolution.push_back(*r);
      best.emplace(branch.log_key(), std::move(state));
      continue;
    }

    if (++result.expansions > options.branch_cap) {
      throw Error(ErrorKind::BranchLimitExceeded,
                  "Adams-Kindred search exceeded " + std::to_string(options.branch_cap) + " expansions");
    }
    auto children = ak_expand(branch);
    // Push in reverse so the first child is explored first.
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      if (visited.insert(it->log_key()).second) stack.push_back(std::move(*it));
    }
  }

  result.max_circles = best_circles;
  result.chi_max = best_circles - d.crossing_count();
  for (auto& [key, state] : best) {
    const bool orientable = two_colorable(state_graph(d, state));
    result.winners.push_back({std::move(state), orientable});
  }
  return result;
}

CrosscapResult crosscap(const LinkDiagram& d, const AKOptions& options) {
  if (!classify(d).alternating) {
    throw Error(ErrorKind::NotAlternating, "crosscap number from state surfaces needs an alternating diagram");
  }
  CrosscapResult out;
  out.search = ak_run(d, options);
  out.chi_max = out.search.chi_max;
  const int k = d.component_count();
  out.nonorientable_realized = std::any_of(out.search.winners.begin(), out.search.winners.end(),
                                           [](const AKWinner& w) { return !w.orientable; });
  if (out.nonorientable_realized) {
    out.crosscap = 2 - out.chi_max - k;
  } else {
    out.crosscap = 3 - out.chi_max - k;
    const int twice = 2 - out.chi_max - k;
    if (twice % 2 != 0) throw Error(ErrorKind::ParityError, "orientable maximal surface with odd 2 - chi - k");
    out.genus = twice / 2;
  }
  return out;
}

int genus_alternating(const LinkDiagram& d) {
  if (!classify(d).alternating) {
    throw Error(ErrorKind::NotAlternating, "Seifert-state genus is exact only for alternating diagrams");
  }
  const SurfaceInvariants s = surface_invariants(d, special_states(d).seifert);
  if (!s.orientable) throw Error(ErrorKind::ParityError, "Seifert state surface is not orientable");
  if ((s.chi + s.boundary_components) % 2 != 0) {
    throw Error(ErrorKind::ParityError, "chi + k of the Seifert surface is odd");
  }
  return 1 - (s.chi + s.boundary_components) / 2;
}

}  // namespace statesurf
