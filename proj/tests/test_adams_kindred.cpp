#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "statesurf/adams_kindred.hpp"
#include "statesurf/error.hpp"
#include "support.hpp"

using namespace statesurf;
using namespace statesurf::testing;

namespace {

const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

struct Exhaustive {
  int max_circles = 0;
  std::set<std::string> argmax;
};

Exhaustive exhaustive(const LinkDiagram& d) {
  Exhaustive out;
  const auto counts = circles_by_mask(d);
  out.max_circles = *std::max_element(counts.begin(), counts.end());
  for (std::uint64_t m = 0; m < counts.size(); ++m) {
    if (counts[m] == out.max_circles) {
      out.argmax.insert(KauffmanState::from_mask(d.crossing_count(), m).to_string());
    }
  }
  return out;
}

ErrorKind error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::MalformedToken;
}

}  // namespace

TEST(MinRegion, Sizes) {
  EXPECT_EQ(min_region(PartialDiagram(add_kink(corpus_entry("3_1").diagram, true))).size(), 1);
  const Region fig8 = min_region(PartialDiagram(parse_pd(kFig8)));
  EXPECT_EQ(fig8.size(), 2);
  EXPECT_EQ(min_region(PartialDiagram(corpus_entry("borromean").diagram)).size(), 3);
  EXPECT_EQ(error_of([] { min_region(PartialDiagram(parse_pd("unknot"))); }), ErrorKind::NoCrossings);
}

TEST(AkExpand, FigureEightBigons) {
  const auto children = ak_expand(PartialDiagram(parse_pd(kFig8)));
  ASSERT_EQ(children.size(), 2u);
  for (const auto& child : children) {
    EXPECT_EQ(child.remaining_crossings(), 2);
    EXPECT_EQ(child.free_circles(), 1);
  }
}

TEST(AkExpand, MonogonHasOneChild) {
  const LinkDiagram d = add_kink(corpus_entry("3_1").diagram, false);
  const PartialDiagram root(d);
  const auto children = ak_expand(root);
  ASSERT_EQ(children.size(), 1u);
  EXPECT_EQ(children[0].remaining_crossings(), root.remaining_crossings() - 1);
  EXPECT_EQ(children[0].free_circles(), root.free_circles() + 1);
}

TEST(AkExpand, TriangleHasTwoChildren) {
  const PartialDiagram root(corpus_entry("borromean").diagram);
  const auto children = ak_expand(root);
  ASSERT_EQ(children.size(), 2u);
  for (const auto& child : children) EXPECT_EQ(child.remaining_crossings(), root.remaining_crossings() - 3);
}

TEST(AkRun, FigureEight) {
  const AKResult r = ak_run(parse_pd(kFig8));
  EXPECT_EQ(r.chi_max, -1);
  const bool orientable = std::any_of(r.winners.begin(), r.winners.end(), [](auto& w) { return w.orientable; });
  const bool nonorientable = std::any_of(r.winners.begin(), r.winners.end(), [](auto& w) { return !w.orientable; });
  EXPECT_TRUE(orientable);
  EXPECT_TRUE(nonorientable);
}

TEST(AkRun, KinkIsADisk) { EXPECT_EQ(ak_run(parse_pd("X[1,1,2,2]")).chi_max, 1); }

TEST(AkRun, TrefoilMatchesExhaustiveSearch) {
  for (const char* name : {"3_1", "4_1"}) {
    const LinkDiagram d = corpus_entry(name).diagram;
    const AKResult r = ak_run(d);
    const Exhaustive ex = exhaustive(d);
    EXPECT_EQ(r.max_circles, ex.max_circles);
    std::set<std::string> winners;
    for (const auto& w : r.winners) winners.insert(w.state.to_string());
    EXPECT_EQ(winners, ex.argmax) << name;
  }
}

TEST(AkRun, BranchCap) {
  EXPECT_EQ(error_of([] { ak_run(corpus_entry("10_123").diagram, AKOptions{1}); }),
            ErrorKind::BranchLimitExceeded);
}

TEST(Crosscap, FigureEight) {
  const auto r = crosscap(parse_pd(kFig8));
  EXPECT_EQ(r.crosscap, 2);
  EXPECT_EQ(r.chi_max, -1);
  EXPECT_TRUE(r.nonorientable_realized);
  EXPECT_EQ(genus_alternating(parse_pd(kFig8)), 1);
}

TEST(Crosscap, Trefoil) {
  const auto r = crosscap(corpus_entry("3_1").diagram);
  EXPECT_EQ(r.chi_max, 0);
  EXPECT_EQ(r.crosscap, 1);
  EXPECT_EQ(genus_alternating(corpus_entry("3_1").diagram), 1);
}

TEST(Crosscap, KnownValues) {
  const std::vector<std::tuple<std::string, int, int>> expected = {
      {"5_1", 1, 2}, {"5_2", 2, 1}, {"6_1", 2, 1}, {"6_2", 2, 2}, {"6_3", 3, 2}, {"7_1", 1, 3}};
  for (const auto& [name, c, g] : expected) {
    EXPECT_EQ(crosscap(corpus_entry(name).diagram).crosscap, c) << name;
    EXPECT_EQ(genus_alternating(corpus_entry(name).diagram), g) << name;
  }
}

TEST(Crosscap, NeedsAlternating) {
  const LinkDiagram d = corpus_entry("8_19").diagram;
  EXPECT_EQ(error_of([&] { crosscap(d); }), ErrorKind::NotAlternating);
  EXPECT_EQ(error_of([&] { genus_alternating(d); }), ErrorKind::NotAlternating);
}

TEST(Crosscap, UnknotGenus) { EXPECT_EQ(genus_alternating(parse_pd("unknot")), 0); }

TEST(AkProperty, ChiMaxEqualsExhaustiveOptimum) {
  for (const auto& e : corpus()) {
    const auto p = classify(e.diagram);
    if (!p.alternating || p.crossing_count == 0 || p.crossing_count > 12) continue;
    const AKResult r = ak_run(e.diagram);
    const Exhaustive ex = exhaustive(e.diagram);
    EXPECT_EQ(r.chi_max, ex.max_circles - p.crossing_count) << e.name;
    for (const auto& w : r.winners) EXPECT_TRUE(ex.argmax.contains(w.state.to_string())) << e.name;
  }
}

TEST(AkProperty, WinnersAreTotalStatesWithTheirCircleCount) {
  for (const auto& e : corpus()) {
    const auto p = classify(e.diagram);
    if (!p.alternating || p.crossing_count == 0) continue;
    const AKResult r = ak_run(e.diagram);
    EXPECT_GE(r.terminal_states, r.winners.size());
    for (const auto& w : r.winners) {
      ASSERT_EQ(w.state.size(), p.crossing_count);
      EXPECT_EQ(trace_circles(e.diagram, w.state).count, r.max_circles) << e.name;
      EXPECT_EQ(w.orientable, two_colorable(state_graph(e.diagram, w.state))) << e.name;
    }
  }
}

TEST(AkProperty, OrientableCaseGivesTwoGPlusOne) {
  for (const auto& e : corpus()) {
    const auto p = classify(e.diagram);
    if (!p.alternating || p.component_count != 1 || p.crossing_count == 0) continue;
    const auto r = crosscap(e.diagram);
    if (r.nonorientable_realized) continue;
    ASSERT_TRUE(r.genus.has_value()) << e.name;
    EXPECT_EQ(r.crosscap, 2 * genus_alternating(e.diagram) + 1) << e.name;
  }
}
