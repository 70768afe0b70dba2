#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "statesurf/bounds.hpp"
#include "statesurf/diagram.hpp"
#include "statesurf/jones.hpp"
#include "statesurf/state.hpp"

namespace statesurf {

inline constexpr int kSchemaVersion = 1;

// What a record computes; the CLI subcommands map onto these.
enum Section : unsigned {
  kProperties = 1u << 0,
  kJones = 1u << 1,
  kSurfaces = 1u << 2,
  kCrosscap = 1u << 3,
  kBounds = 1u << 4,
  kChecks = 1u << 5,
  kAllSections = kProperties | kJones | kSurfaces | kCrosscap | kBounds | kChecks,
};

struct RecordOptions {
  unsigned sections = kAllSections;
  int max_bracket_crossings = 24;
  int max_ak_crossings = 16;
  std::size_t branch_cap = 1'000'000;
  bool assert_nontorus = false;
  bool assert_hyperbolic = false;
  bool timings = false;
  unsigned bracket_threads = 1;  // threads inside one 2^c expansion
};

struct RecordError {
  std::string kind;
  std::string message;
};

struct NamedSurface {
  std::string name;
  KauffmanState state;
  int circles = 0;
  SurfaceInvariants invariants;
};

struct InvariantRecord {
  int line = 0;
  std::string input;
  std::optional<RecordError> error;

  std::optional<DiagramProperties> properties;
  std::optional<std::string> jones;
  std::optional<JonesStats> jones_stats;
  std::vector<NamedSurface> surfaces;
  std::optional<int> turaev_genus;
  std::optional<GeometryFlags> geometry;
  std::optional<int> chi_max;
  std::optional<int> crosscap;
  std::optional<int> genus;
  std::optional<bool> crosscap_nonorientable;
  std::optional<BoundsReport> bounds;

  std::optional<bool> bracket_agreement;
  std::optional<std::string> coefficient_identity;  // pairing that holds, "none" if neither
  std::optional<bool> crosscap_within_bounds;

  bool hypothesis_violated = false;
  std::vector<std::string> notes;
  std::map<std::string, double> timings_ms;
};

InvariantRecord compute_record(const DiagramLine& line, const RecordOptions& options);

nlohmann::ordered_json to_json(const InvariantRecord& record, unsigned sections);

struct CensusSummary {
  std::size_t records = 0;
  std::size_t errors = 0;
  std::size_t bracket_checked = 0;
  std::size_t bracket_agree = 0;
  std::size_t identity_checked = 0;
  std::size_t identity_pass = 0;
  std::size_t bounds_checked = 0;
  std::size_t bounds_contained = 0;
};

struct CensusReport {
  std::vector<InvariantRecord> records;  // in input order
  CensusSummary summary;
};

// Computes one record per line using up to `jobs` worker threads; the result
// does not depend on `jobs`.
CensusReport census_batch(std::span<const DiagramLine> lines, const RecordOptions& options, unsigned jobs);

nlohmann::ordered_json to_json(const CensusSummary& summary);

// Flattens records (nested keys joined by '.') into CSV with a header row.
std::string to_csv(const std::vector<nlohmann::ordered_json>& records);

}  // namespace statesurf
