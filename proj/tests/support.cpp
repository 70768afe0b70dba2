#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "statesurf/state.hpp"

namespace statesurf::testing {

namespace {

std::vector<CorpusEntry> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::vector<CorpusEntry> out;
  std::string header;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (line[0] == '#') {
      header = line.substr(1);
      continue;
    }
    std::istringstream words(header);
    CorpusEntry e;
    words >> e.name;
    for (std::string tag; words >> tag;) e.torus = e.torus || tag == "torus";
    e.family = e.name.substr(0, e.name.find('~'));
    e.line = number;
    e.pd = line;
    e.diagram = parse_pd(line);
    out.push_back(std::move(e));
    header.clear();
  }
  return out;
}

int max_label(const LinkDiagram& d) {
  int m = 0;
  for (const auto& x : d.crossings()) m = std::max(m, *std::max_element(x.arcs.begin(), x.arcs.end()));
  return m;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = load(STATESURF_CORPUS);
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no corpus entry " + name);
}

std::string pd_text(const std::vector<Crossing>& crossings) {
  std::string s;
  for (const auto& x : crossings) {
    if (!s.empty()) s += ' ';
    s += "X[" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," + std::to_string(x.arcs[2]) +
         "," + std::to_string(x.arcs[3]) + "]";
  }
  return s.empty() ? "unknot" : s;
}

LinkDiagram add_kink(const LinkDiagram& d, bool positive) {
  if (d.crossing_count() == 0) return parse_pd(positive ? "X[1,1,2,2]" : "X[1,2,2,1]");
  auto xs = d.crossings();
  const int e = xs[0].arcs[0];
  const int f = max_label(d) + 1;
  const int g = f + 1;
  xs[0].arcs[0] = f;
  Crossing kink;
  kink.arcs = positive ? std::array<int, 4>{e, f, g, g} : std::array<int, 4>{e, g, g, f};
  xs.push_back(kink);
  return parse_pd(pd_text(xs));
}

namespace {

// The rotation that moves the incoming over-strand end to position 0.
std::array<int, 4> flipped(const std::array<int, 4>& a, int sign) {
  return sign > 0 ? std::array<int, 4>{a[3], a[0], a[1], a[2]} : std::array<int, 4>{a[1], a[2], a[3], a[0]};
}

}  // namespace

LinkDiagram flip_crossing(const LinkDiagram& d, int id) {
  auto xs = d.crossings();
  xs[id].arcs = flipped(xs[id].arcs, d.crossing_sign(id));
  return parse_pd(pd_text(xs));
}

// Signs are read off `d` up front: flipping one crossing at a time can leave
// a component with no under-passes, whose orientation is then only a guess.
LinkDiagram mirror(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d;
  auto xs = d.crossings();
  for (int i = 0; i < d.crossing_count(); ++i) xs[i].arcs = flipped(xs[i].arcs, d.crossing_sign(i));
  return parse_pd(pd_text(xs));
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  std::vector<int> current(strands);
  std::iota(current.begin(), current.end(), 1);
  int next = strands + 1;
  std::vector<Crossing> xs;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    const int a = current[i];
    const int b = current[i + 1];
    const int a2 = next++;
    const int b2 = next++;
    Crossing x;
    x.arcs = g > 0 ? std::array<int, 4>{b, a2, b2, a} : std::array<int, 4>{a, b, a2, b2};
    xs.push_back(x);
    current[i] = b2;
    current[i + 1] = a2;
  }
  for (auto& x : xs) {
    for (int& label : x.arcs) {
      for (int s = 0; s < strands; ++s) {
        if (label == current[s]) label = s + 1;
      }
    }
  }
  return parse_pd(pd_text(xs));
}

LinkDiagram relabel(const LinkDiagram& d, std::mt19937& rng) {
  auto xs = d.crossings();
  const int n = max_label(d);
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  for (auto& x : xs) {
    for (int& label : x.arcs) label = perm[label] + 100;
  }
  std::shuffle(xs.begin(), xs.end(), rng);
  return parse_pd(pd_text(xs));
}

std::vector<int> circles_by_mask(const LinkDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> out(std::size_t{1} << c);
  for (std::uint64_t mask = 0; mask < out.size(); ++mask) {
    out[mask] = trace_circles(d, KauffmanState::from_mask(c, mask)).count;
  }
  return out;
}

}  // namespace statesurf::testing
