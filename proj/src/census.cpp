#include "statesurf/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "statesurf/adams_kindred.hpp"
#include "statesurf/error.hpp"
#include "statesurf/ribbon.hpp"

namespace statesurf {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

NamedSurface named_surface(const LinkDiagram& d, std::string name, KauffmanState state) {
  NamedSurface s{std::move(name), std::move(state), 0, {}};
  s.circles = trace_circles(d, s.state).count;
  s.invariants = surface_invariants(d, s.state);
  return s;
}

void refuse_if(bool condition, int crossings, int limit, const char* what) {
  if (condition && crossings > limit) {
    throw Error(ErrorKind::CrossingLimitExceeded, std::string("refusing ") + what + " on " +
                                                      std::to_string(crossings) + " crossings (limit " +
                                                      std::to_string(limit) + "; see --max-crossings)");
  }
}

void compute_into(InvariantRecord& rec, const RecordOptions& options) {
  const auto start = Clock::now();
  const unsigned sections = options.sections;
  const LinkDiagram d = parse_pd(rec.input);
  const DiagramProperties props = classify(d);
  const int c = d.crossing_count();
  const bool knot = props.component_count == 1;
  if (sections & kProperties) rec.properties = props;

  const bool need_bracket = sections & (kJones | kBounds | kChecks);
  const bool need_ak = (sections & (kCrosscap | kChecks)) && props.alternating;
  refuse_if(need_bracket, c, options.max_bracket_crossings, "the 2^c bracket expansion");
  refuse_if(need_ak, c, options.max_ak_crossings, "the Adams-Kindred search");

  const BracketOptions bracket_options{options.max_bracket_crossings, options.bracket_threads};
  std::optional<LaurentPoly> bracket;
  std::optional<JonesStats> stats;
  if (need_bracket) {
    auto t0 = Clock::now();
    bracket = bracket_statesum(d, bracket_options);
    const LaurentPoly j = normalize_bracket(d, *bracket);
    stats = jones_stats(j);
    if (sections & kJones) {
      rec.jones = format_jones(j);
      rec.jones_stats = stats;
    }
    rec.timings_ms["jones"] = elapsed_ms(t0);
    if (props.component_count > 1) rec.notes.push_back("link orientation induced by PD arc order");
  }

  if (sections & kSurfaces) {
    auto t0 = Clock::now();
    const SpecialStates special = special_states(d);
    rec.surfaces.push_back(named_surface(d, "all_A", special.all_a));
    rec.surfaces.push_back(named_surface(d, "all_B", special.all_b));
    rec.surfaces.push_back(named_surface(d, "seifert", special.seifert));
    rec.turaev_genus = turaev_genus(d);
    rec.geometry = geometry_flags(d);
    rec.timings_ms["surfaces"] = elapsed_ms(t0);
  }

  std::optional<CrosscapResult> cc;
  if (need_ak) {
    auto t0 = Clock::now();
    cc = crosscap(d, AKOptions{options.branch_cap});
    rec.timings_ms["crosscap"] = elapsed_ms(t0);
  }
  if (sections & kCrosscap) {
    if (cc) {
      rec.chi_max = cc->chi_max;
      rec.crosscap = cc->crosscap;
      rec.crosscap_nonorientable = cc->nonorientable_realized;
      rec.genus = genus_alternating(d);
    } else {
      rec.hypothesis_violated = true;
      rec.notes.push_back("crosscap and genus need an alternating diagram");
    }
  }

  if (sections & kBounds) {
    rec.bounds = bounds_report(*stats, options.assert_nontorus, options.assert_hyperbolic);
    if (!props.alternating || !knot) {
      rec.hypothesis_violated = true;
      rec.notes.push_back(knot ? "bounds assume an alternating diagram"
                               : "crosscap bounds are stated for knots; volume bounds assume alternating");
    }
  }

  if (sections & kChecks) {
    auto t0 = Clock::now();
    rec.bracket_agreement = bracket_subgraph(d, bracket_options) == *bracket;
    if (props.alternating && props.reduced && c > 0) {
      const CoeffIdentityReport r = coeff_identity_check(d, *stats);
      rec.coefficient_identity = r.beta_matches_ga && r.beta_matches_gb ? "both"
                                 : r.beta_matches_ga                    ? "beta~G'_A"
                                 : r.beta_matches_gb                    ? "beta~G'_B"
                                                                        : "none";
    }
    if (cc && knot && props.reduced && c > 0) {
      const CrosscapBounds b = crosscap_bounds(*stats, true);
      rec.crosscap_within_bounds = b.lower <= cc->crosscap && cc->crosscap <= b.upper;
      if (!*rec.crosscap_within_bounds) {
        rec.notes.push_back("crosscap outside the Jones bounds: consistent only if the knot is a torus knot");
      }
    }
    rec.timings_ms["checks"] = elapsed_ms(t0);
  }
  rec.timings_ms["total"] = elapsed_ms(start);
  if (!options.timings) rec.timings_ms.clear();
}

json surface_json(const NamedSurface& s) {
  json j;
  j["state"] = s.state.to_string();
  j["circles"] = s.circles;
  j["chi"] = s.invariants.chi;
  j["boundary_components"] = s.invariants.boundary_components;
  j["orientable"] = s.invariants.orientable;
  j[s.invariants.orientable ? "genus" : "crosscap"] = s.invariants.genus_or_crosscap;
  return j;
}

template <typename T>
json or_null(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    std::string joined;
    for (const auto& item : j) {
      if (!joined.empty()) joined += "; ";
      joined += item.is_string() ? item.get<std::string>() : item.dump();
    }
    out.emplace_back(prefix, joined);
    return;
  }
  if (j.is_null()) out.emplace_back(prefix, "");
  else if (j.is_string()) out.emplace_back(prefix, j.get<std::string>());
  else out.emplace_back(prefix, j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

InvariantRecord compute_record(const DiagramLine& line, const RecordOptions& options) {
  InvariantRecord rec;
  rec.line = line.line;
  rec.input = line.text;
  std::optional<RecordError> failure;
  try {
    compute_into(rec, options);
  } catch (const Error& e) {
    failure = RecordError{std::string(to_string(e.kind())), e.what()};
  } catch (const std::exception& e) {
    failure = RecordError{"InternalError", e.what()};
  }
  if (failure) {
    // A failed record carries no partial answers.
    rec = InvariantRecord();
    rec.line = line.line;
    rec.input = line.text;
    rec.error = std::move(failure);
  }
  return rec;
}

nlohmann::ordered_json to_json(const InvariantRecord& rec, unsigned sections) {
  json j;
  j["line"] = rec.line;
  j["input"] = rec.input;
  if (rec.error) {
    j["error"] = {{"kind", rec.error->kind}, {"message", rec.error->message}};
    return j;
  }
  if (sections & kProperties) {
    if (rec.properties) {
      const auto& p = *rec.properties;
      j["properties"] = {{"crossings", p.crossing_count}, {"components", p.component_count},
                         {"connected", p.connected},      {"alternating", p.alternating},
                         {"reduced", p.reduced},          {"writhe", p.writhe}};
    } else {
      j["properties"] = nullptr;
    }
  }
  if (sections & kJones) {
    j["jones"] = or_null(rec.jones);
    if (rec.jones_stats) {
      const auto& s = *rec.jones_stats;
      j["jones_stats"] = {{"beta", s.beta}, {"beta_prime", s.beta_prime}, {"T", s.t_sum}, {"span", s.span}};
    } else {
      j["jones_stats"] = nullptr;
    }
  }
  if (sections & kSurfaces) {
    json surfaces = json::object();
    for (const auto& s : rec.surfaces) surfaces[s.name] = surface_json(s);
    j["surfaces"] = surfaces;
    j["turaev_genus"] = or_null(rec.turaev_genus);
    if (rec.geometry) {
      j["geometry"] = {{"ga_no_one_edge_loops", rec.geometry->ga_no_one_edge_loops},
                       {"ga_prime_is_tree", rec.geometry->ga_prime_is_tree}};
    } else {
      j["geometry"] = nullptr;
    }
  }
  if (sections & kCrosscap) {
    j["chi_max"] = or_null(rec.chi_max);
    j["crosscap"] = or_null(rec.crosscap);
    j["genus"] = or_null(rec.genus);
    j["crosscap_case"] = rec.crosscap_nonorientable
                             ? json(*rec.crosscap_nonorientable ? "nonorientable" : "orientable")
                             : json(nullptr);
  }
  if (sections & kBounds) {
    if (rec.bounds) {
      const auto& b = *rec.bounds;
      json notes = json::array();
      for (const auto& n : b.crosscap.notes) notes.push_back(n);
      for (const auto& n : b.volume.notes) notes.push_back(n);
      j["bounds"] = {{"crosscap_lower", b.crosscap.lower}, {"crosscap_upper", b.crosscap.upper},
                     {"volume_lower", b.volume.lower},     {"volume_upper", b.volume.upper},
                     {"notes", notes}};
    } else {
      j["bounds"] = nullptr;
    }
  }
  if (sections & kChecks) {
    j["checks"] = {{"bracket_agreement", or_null(rec.bracket_agreement)},
                   {"coefficient_identity", or_null(rec.coefficient_identity)},
                   {"crosscap_within_bounds", or_null(rec.crosscap_within_bounds)}};
  }
  j["notes"] = rec.notes;
  if (!rec.timings_ms.empty()) j["timings_ms"] = rec.timings_ms;
  return j;
}

CensusReport census_batch(std::span<const DiagramLine> lines, const RecordOptions& options, unsigned jobs) {
  CensusReport report;
  report.records.resize(lines.size());
  jobs = std::max(1u, jobs);
  RecordOptions per_line = options;
  if (!lines.empty() && lines.size() < jobs) {
    // Spare workers go into the bracket expansion of each line instead.
    per_line.bracket_threads = std::max<unsigned>(options.bracket_threads, jobs / lines.size());
    jobs = static_cast<unsigned>(lines.size());
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) report.records[i] = compute_record(lines[i], per_line);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  auto& s = report.summary;
  for (const auto& rec : report.records) {
    ++s.records;
    if (rec.error) ++s.errors;
    if (rec.bracket_agreement) {
      ++s.bracket_checked;
      s.bracket_agree += *rec.bracket_agreement ? 1 : 0;
    }
    if (rec.coefficient_identity) {
      ++s.identity_checked;
      s.identity_pass += *rec.coefficient_identity != "none" ? 1 : 0;
    }
    if (rec.crosscap_within_bounds) {
      ++s.bounds_checked;
      s.bounds_contained += *rec.crosscap_within_bounds ? 1 : 0;
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const CensusSummary& s) {
  return {{"records", s.records},
          {"errors", s.errors},
          {"bracket_agreement", {{"checked", s.bracket_checked}, {"agree", s.bracket_agree}}},
          {"coefficient_identity", {{"checked", s.identity_checked}, {"pass", s.identity_pass}}},
          {"crosscap_within_bounds", {{"checked", s.bounds_checked}, {"contained", s.bounds_contained}}}};
}

std::string to_csv(const std::vector<nlohmann::ordered_json>& records) {
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  std::vector<std::string> columns;
  for (const auto& r : records) {
    rows.emplace_back();
    flatten(r, "", rows.back());
    for (const auto& [key, value] : rows.back()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_field(columns[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      for (const auto& [key, value] : row) {
        if (key == columns[i]) {
          os << csv_field(value);
          break;
        }
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace statesurf
