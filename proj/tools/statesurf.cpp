#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "statesurf/census.hpp"
#include "statesurf/error.hpp"

using namespace statesurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitHypothesis = 2;

const std::map<std::string, unsigned> kCommandSections = {
    {"validate", kProperties},
    {"jones", kProperties | kJones},
    {"surfaces", kProperties | kSurfaces},
    {"crosscap", kProperties | kCrosscap},
    {"bounds", kProperties | kJones | kBounds},
    {"all", kAllSections},
    {"census", kAllSections},
};

bool is_input_kind(const std::string& kind) {
  for (auto k : {ErrorKind::MalformedToken, ErrorKind::ArcPairing, ErrorKind::NonPlanar, ErrorKind::Disconnected,
                 ErrorKind::InconsistentOrientation}) {
    if (kind == to_string(k)) return true;
  }
  return false;
}

bool is_hypothesis_kind(const std::string& kind) {
  return kind == to_string(ErrorKind::HypothesisViolated) || kind == to_string(ErrorKind::NotAlternating) ||
         kind == to_string(ErrorKind::ParityError);
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::size_t branch_cap_from_env(std::size_t fallback) {
  const char* raw = std::getenv("STATESURF_MAX_BRANCHES");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw std::runtime_error("STATESURF_MAX_BRANCHES must be a positive integer");
  return static_cast<std::size_t>(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-surface and Jones-polynomial invariants of PD link diagrams", "statesurf"};
  std::string command;
  std::string file;
  std::string format = "json";
  bool strict = false;
  int max_crossings = 0;
  unsigned jobs = 0;
  RecordOptions options;

  app.add_option("command", command, "validate | jones | surfaces | crosscap | bounds | all | census")
      ->required()
      ->check(CLI::IsMember({"validate", "jones", "surfaces", "crosscap", "bounds", "all", "census"}));
  app.add_option("file", file, "PD file, one diagram per line (stdin when omitted)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--strict", strict, "exit 2 when a requested invariant's hypothesis fails");
  app.add_option("--max-crossings", max_crossings,
                 "crossing limit for the bracket and the Adams-Kindred search (defaults 24 and 16)")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "worker threads for multi-line input (default: hardware concurrency)");
  app.add_flag("--assert-nontorus", options.assert_nontorus, "assert the input knots are not torus knots");
  app.add_flag("--assert-hyperbolic", options.assert_hyperbolic, "assert the input links are hyperbolic");
  app.add_flag("--timings", options.timings, "include per-stage wall times in each record");
  CLI11_PARSE(app, argc, argv);

  std::string contents;
  try {
    contents = read_input(file);
    options.branch_cap = branch_cap_from_env(options.branch_cap);
  } catch (const std::exception& e) {
    std::cerr << "statesurf: " << e.what() << '\n';
    return kExitInput;
  }
  options.sections = kCommandSections.at(command);
  if (max_crossings > 0) {
    options.max_bracket_crossings = max_crossings;
    options.max_ak_crossings = max_crossings;
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  const auto lines = diagram_lines(contents);
  const CensusReport report = census_batch(lines, options, jobs);
  const bool census = command == "census";

  int exit_code = kExitOk;
  for (const auto& rec : report.records) {
    if (!rec.error) {
      if (strict && rec.hypothesis_violated) {
        std::cerr << "line " << rec.line << ": hypothesis not met: "
                  << (rec.notes.empty() ? std::string("see notes") : rec.notes.front()) << '\n';
        if (!census) exit_code = std::max(exit_code, kExitHypothesis);
      }
      continue;
    }
    std::cerr << "line " << rec.line << ": " << rec.error->kind << ": " << rec.error->message << '\n';
    if (census) continue;
    if (is_input_kind(rec.error->kind)) {
      exit_code = kExitInput;
    } else if (strict && exit_code != kExitInput &&
               (is_hypothesis_kind(rec.error->kind) ||
                rec.error->kind == to_string(ErrorKind::CrossingLimitExceeded))) {
      exit_code = kExitHypothesis;
    }
  }
  if (exit_code == kExitInput) return exit_code;

  std::vector<nlohmann::ordered_json> records;
  records.reserve(report.records.size());
  for (const auto& rec : report.records) records.push_back(to_json(rec, options.sections));

  if (format == "csv") {
    std::cout << to_csv(records);
  } else {
    nlohmann::ordered_json out;
    out["schema"] = kSchemaVersion;
    out["command"] = command;
    out["records"] = records;
    if (census) out["summary"] = to_json(report.summary);
    std::cout << out.dump(2) << '\n';
  }
  return exit_code;
}
