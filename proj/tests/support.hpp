#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "statesurf/diagram.hpp"

namespace statesurf::testing {

struct CorpusEntry {
  std::string name;    // e.g. "4_1" or "4_1~braid"
  std::string family;  // part of the name before '~'
  bool torus = false;
  int line = 0;
  std::string pd;
  LinkDiagram diagram;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

std::string pd_text(const std::vector<Crossing>& crossings);

// Reidemeister I: a positive or negative kink on the strand entering crossing 0
// from below.
LinkDiagram add_kink(const LinkDiagram& d, bool positive);
// Changes crossing `id` from over to under, keeping the projection.
LinkDiagram flip_crossing(const LinkDiagram& d, int id);
LinkDiagram mirror(const LinkDiagram& d);
// Closure of a braid word on `strands` strands: +i is sigma_i, -i its inverse.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);
// Random renaming of arc labels and reordering of crossings.
LinkDiagram relabel(const LinkDiagram& d, std::mt19937& rng);

// Circle count of every Kauffman state, indexed by the B-mask.
std::vector<int> circles_by_mask(const LinkDiagram& d);

}  // namespace statesurf::testing
