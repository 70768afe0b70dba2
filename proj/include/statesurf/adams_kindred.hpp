#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "statesurf/diagram.hpp"
#include "statesurf/state.hpp"

namespace statesurf {

// A branch of the search is a partially smoothed diagram; its resolution log
// is the part of the Kauffman state fixed so far.
using AKBranch = PartialDiagram;

struct AKOptions {
  std::size_t branch_cap = 1'000'000;  // expansions before BranchLimitExceeded
};

struct AKWinner {
  KauffmanState state;
  bool orientable = false;
};

struct AKResult {
  int max_circles = 0;
  int chi_max = 0;
  std::vector<AKWinner> winners;  // sorted by state, no duplicates
  std::size_t terminal_states = 0;
  std::size_t expansions = 0;
  bool alternating_input = true;  // exactness holds only for alternating input
};

// Smallest region of the live diagram; ties go to the lexicographically
// smallest boundary.
Region min_region(const PartialDiagram& p);

// Children of a branch:
//   m = 1: close the 1-gon into a state circle;
//   m = 2: one child per bigon, each bigon closed into a state circle;
//   m >= 3: for the minimal triangle, one child closing it into a circle and
//           one resolving its crossings the opposite way.
std::vector<AKBranch> ak_expand(const AKBranch& b);

AKResult ak_run(const LinkDiagram& d, const AKOptions& options = {});

struct CrosscapResult {
  int crosscap = 0;
  int chi_max = 0;
  // True when some maximal surface is non-orientable (C = 2 - chi - k);
  // otherwise C = 3 - chi - k = 2g + 1.
  bool nonorientable_realized = false;
  std::optional<int> genus;  // set in the all-orientable case
  AKResult search;
};

CrosscapResult crosscap(const LinkDiagram& d, const AKOptions& options = {});

// Genus of the Seifert state surface of a connected alternating diagram.
int genus_alternating(const LinkDiagram& d);

}  // namespace statesurf
