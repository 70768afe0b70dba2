// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "statesurf/adams_kindred.hpp"
#include "statesurf/bounds.hpp"
#include "statesurf/jones.hpp"
#include "statesurf/ribbon.hpp"
#include "support.hpp"

using namespace statesurf;
using namespace statesurf::testing;

namespace {

const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && seconds > limit_s) {
    o.ok = false;
    o.detail += " (over the " + std::to_string(limit_s) + " s limit)";
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-44s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", id, title, seconds, o.detail.c_str());
  std::fflush(stdout);
}

Outcome expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

}  // namespace

int main() {
  criterion(1, "figure-eight Jones polynomial", 1.0, [] {
    const std::string j = format_jones(jones(parse_pd(kFig8)));
    return expect(j == "t^-2 - t^-1 + 1 - t + t^2", "J = " + j);
  });

  criterion(2, "figure-eight crosscap, genus, chi_max", 1.0, [] {
    const LinkDiagram d = parse_pd(kFig8);
    const auto r = crosscap(d);
    const int g = genus_alternating(d);
    return expect(r.crosscap == 2 && g == 1 && r.chi_max == -1,
                  "C = " + std::to_string(r.crosscap) + ", g = " + std::to_string(g) +
                      ", chi_max = " + std::to_string(r.chi_max));
  });

  criterion(3, "subgraph expansion equals state sum", 30.0, [] {
    int diagrams = 0, nonalternating = 0, mismatches = 0;
    for (const auto& e : corpus()) {
      if (e.diagram.crossing_count() > 10) continue;
      ++diagrams;
      nonalternating += !classify(e.diagram).alternating;
      mismatches += !(bracket_subgraph(e.diagram) == bracket_statesum(e.diagram));
    }
    return expect(mismatches == 0 && diagrams >= 10 && nonalternating > 0,
                  std::to_string(diagrams) + " diagrams (" + std::to_string(nonalternating) +
                      " non-alternating), " + std::to_string(mismatches) + " mismatches");
  });

  criterion(4, "Jones coefficients vs reduced state graphs", 10.0, [] {
    int checked = 0, pair_ga = 0, pair_gb = 0;
    for (const auto& e : corpus()) {
      const auto p = classify(e.diagram);
      if (!p.alternating || !p.reduced || p.crossing_count == 0) continue;
      const auto r = coeff_identity_check(e.diagram);
      ++checked;
      pair_ga += r.beta_matches_ga;
      pair_gb += r.beta_matches_gb;
    }
    const bool consistent = pair_ga == checked || pair_gb == checked;
    return expect(checked > 0 && consistent,
                  std::to_string(checked) + " diagrams; |beta|~G'_A on " + std::to_string(pair_ga) +
                      ", |beta|~G'_B on " + std::to_string(pair_gb));
  });

  criterion(5, "two-colouring equals no odd cycle", 60.0, [] {
    long states = 0, disagreements = 0;
    for (const auto& e : corpus()) {
      const int c = e.diagram.crossing_count();
      if (c > 8) continue;
      for (std::uint64_t m = 0; m < (1ULL << c); ++m) {
        const StateGraph g = state_graph(e.diagram, KauffmanState::from_mask(c, m));
        ++states;
        disagreements += two_colorable(g) == has_odd_cycle(g);
      }
    }
    return expect(disagreements == 0,
                  std::to_string(states) + " states, " + std::to_string(disagreements) + " disagreements");
  });

  criterion(6, "Adams-Kindred chi_max is the state optimum", 60.0, [] {
    int checked = 0, wrong = 0;
    for (const auto& e : corpus()) {
      const auto p = classify(e.diagram);
      if (!p.alternating || p.crossing_count == 0 || p.crossing_count > 10) continue;
      const auto counts = circles_by_mask(e.diagram);
      const int best = *std::max_element(counts.begin(), counts.end()) - p.crossing_count;
      ++checked;
      wrong += ak_run(e.diagram).chi_max != best;
    }
    return expect(checked > 0 && wrong == 0, std::to_string(checked) + " diagrams, " + std::to_string(wrong) + " off");
  });

  criterion(7, "Turaev genus 0 on reduced alternating", 0, [] {
    int checked = 0, nonzero = 0;
    for (const auto& e : corpus()) {
      const auto p = classify(e.diagram);
      if (!p.alternating || !p.reduced) continue;
      ++checked;
      nonzero += turaev_genus(e.diagram) != 0;
    }
    return expect(checked > 0 && nonzero == 0,
                  std::to_string(checked) + " diagrams, " + std::to_string(nonzero) + " nonzero");
  });

  criterion(8, "Jones invariance under Reidemeister moves", 0, [] {
    std::string detail;
    bool ok = true;
    LinkDiagram unknot = parse_pd("unknot");
    for (int kinks = 0; kinks <= 3; ++kinks) {
      const std::string j = format_jones(jones(unknot));
      ok = ok && j == "1";
      detail += "kinks " + std::to_string(kinks) + ": " + j + "; ";
      unknot = add_kink(unknot, kinks != 1);
    }
    std::set<std::string> fig8;
    int fig8_diagrams = 0;
    for (const auto& e : corpus()) {
      if (e.family != "4_1") continue;
      fig8.insert(format_jones(jones(e.diagram)));
      ++fig8_diagrams;
    }
    ok = ok && fig8_diagrams >= 3 && fig8.size() == 1;
    detail += std::to_string(fig8_diagrams) + " figure-eight diagrams, " + std::to_string(fig8.size()) +
              " distinct J";
    return expect(ok, detail);
  });

  criterion(9, "crosscap inside the Jones bounds", 0, [] {
    int checked = 0, outside = 0;
    for (const auto& e : corpus()) {
      const auto p = classify(e.diagram);
      if (e.torus || !p.alternating || !p.reduced || p.component_count != 1 || p.crossing_count == 0) continue;
      const auto b = crosscap_bounds(jones_stats(jones(e.diagram)), true);
      const int c = crosscap(e.diagram).crosscap;
      ++checked;
      outside += c < b.lower || c > b.upper;
    }
    const auto fig8 = crosscap_bounds(jones_stats(jones(parse_pd(kFig8))), true);
    const bool pinned = fig8.lower == 2 && fig8.upper == 2;
    return expect(checked > 0 && outside == 0 && pinned,
                  std::to_string(checked) + " knots, " + std::to_string(outside) + " outside; 4_1 bounds [" +
                      std::to_string(fig8.lower) + ", " + std::to_string(fig8.upper) + "]");
  });

  criterion(10, "volume bound arithmetic and monotonicity", 0, [] {
    JonesStats s;
    s.t_sum = 2;
    const auto two = volume_bounds(s, true);
    bool ok = std::abs(two.lower - 0.0) < 1e-4 && std::abs(two.upper - 10.149) < 1e-4;
    for (long t = 0; t < 20; ++t) {
      JonesStats a, b;
      a.t_sum = t;
      b.t_sum = t + 1;
      const auto va = volume_bounds(a, true);
      const auto vb = volume_bounds(b, true);
      ok = ok && va.lower <= vb.lower && va.upper <= vb.upper;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "T=2 -> (%.4f, %.4f)", two.lower, two.upper);
    return expect(ok, buf);
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
