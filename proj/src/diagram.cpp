#include "statesurf/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "statesurf/error.hpp"

namespace statesurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::ArcPairing: return "ArcPairingError";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorKind::UnknownCrossing: return "UnknownCrossing";
    case ErrorKind::IncompleteState: return "IncompleteState";
    case ErrorKind::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorKind::ExponentParity: return "ExponentParity";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::BranchLimitExceeded: return "BranchLimitExceeded";
    case ErrorKind::ParityError: return "ParityError";
    case ErrorKind::NoCrossings: return "NoCrossings";
    case ErrorKind::NegativeSpan: return "NegativeSpan";
    case ErrorKind::CrossingLimitExceeded: return "CrossingLimitExceeded";
  }
  return "Unknown";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool parse_label(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out > 0;
}

Crossing parse_token(std::string_view tok, int id) {
  auto malformed = [&] {
    return Error(ErrorKind::MalformedToken,
                 "malformed token '" + std::string(tok) + "': expected X[a,b,c,d] with positive integer labels");
  };
  if (tok.size() < 4 || tok.substr(0, 2) != "X[" || tok.back() != ']') throw malformed();
  std::string_view body = tok.substr(2, tok.size() - 3);
  Crossing c;
  c.id = id;
  for (int i = 0; i < 4; ++i) {
    auto comma = body.find(',');
    if ((i < 3) != (comma != std::string_view::npos)) throw malformed();
    std::string_view field = i < 3 ? body.substr(0, comma) : body;
    if (!parse_label(field, c.arcs[i])) throw malformed();
    if (i < 3) body.remove_prefix(comma + 1);
  }
  return c;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_ws = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
  while (i < text.size()) {
    while (i < text.size() && is_ws(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

int LinkDiagram::crossing_sign(int crossing) const {
  return incoming(slot_of(crossing, 3)) ? +1 : -1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int x = 0; x < crossing_count(); ++x) w += crossing_sign(x);
  return w;
}

std::string LinkDiagram::to_pd() const {
  if (crossings_.empty()) return "unknot";
  std::ostringstream os;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& a = crossings_[i].arcs;
    if (i) os << ' ';
    os << "X[" << a[0] << ',' << a[1] << ',' << a[2] << ',' << a[3] << ']';
  }
  return os.str();
}

LinkDiagram parse_pd(std::string_view text, const ParseOptions& options) {
  const auto tokens = split_ws(text);
  LinkDiagram d;
  if (tokens.empty()) {
    if (options.empty_is_unknot) return d;
    throw Error(ErrorKind::MalformedToken, "empty diagram; write 'unknot' for the 0-crossing diagram");
  }
  if (tokens.size() == 1 && tokens[0] == "unknot") return d;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "unknot") {
      throw Error(ErrorKind::MalformedToken, "'unknot' must be the only token on its line");
    }
    d.crossings_.push_back(parse_token(tokens[i], static_cast<int>(i)));
  }

  const int n = d.crossing_count();
  std::map<int, std::vector<int>> slots_by_label;
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) slots_by_label[d.crossings_[x].arcs[p]].push_back(slot_of(x, p));
  }
  d.mate_.assign(4 * n, -1);
  for (const auto& [label, slots] : slots_by_label) {
    if (slots.size() != 2) {
      throw Error(ErrorKind::ArcPairing, "arc " + std::to_string(label) + " appears " +
                                             std::to_string(slots.size()) +
                                             " time(s); every arc label must appear exactly twice");
    }
    d.mate_[slots[0]] = slots[1];
    d.mate_[slots[1]] = slots[0];
  }

  DisjointSets pieces(n);
  for (int s = 0; s < 4 * n; ++s) pieces.unite(crossing_of(s), crossing_of(d.mate_[s]));
  for (int x = 1; x < n; ++x) {
    if (pieces.find(x) != pieces.find(0)) {
      throw Error(ErrorKind::Disconnected, "diagram is not connected (crossing " + std::to_string(x) +
                                               " is unreachable from crossing 0)");
    }
  }

  // Strands pass straight through a crossing: position p to p^2.
  d.incoming_.assign(4 * n, 0);
  d.component_.assign(4 * n, -1);
  int components = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (d.component_[start] >= 0) continue;
    std::vector<int> enters;
    int cur = start;
    do {
      enters.push_back(cur);
      d.component_[cur] = d.component_[cur ^ 2] = components;
      cur = d.mate_[cur ^ 2];
    } while (cur != start);

    bool forward_vote = false, backward_vote = false;
    for (int e : enters) {
      if (position_of(e) == 0) forward_vote = true;
      if (position_of(e) == 2) backward_vote = true;
    }
    if (forward_vote && backward_vote) {
      throw Error(ErrorKind::InconsistentOrientation,
                  "component containing arc " + std::to_string(d.arc_label(start)) +
                      " passes under in both directions; check the incoming-under-first convention");
    }
    bool forward = forward_vote;
    if (!forward_vote && !backward_vote) {
      // Pure over-strand: follow the arc numbering from the smallest label.
      const int m = static_cast<int>(enters.size());
      int best = 0;
      for (int i = 1; i < m; ++i) {
        if (d.arc_label(enters[i]) < d.arc_label(enters[best])) best = i;
      }
      const int next = d.arc_label(enters[(best + 1) % m]);
      const int prev = d.arc_label(enters[(best + m - 1) % m]);
      forward = next <= prev;
    }
    for (int e : enters) {
      d.incoming_[e] = forward ? 1 : 0;
      d.incoming_[e ^ 2] = forward ? 0 : 1;
    }
    ++components;
  }
  d.component_count_ = components;

  std::vector<std::uint8_t> alive(n, 1);
  const int f = static_cast<int>(faces(d.mate_, alive).size());
  if (n - 2 * n + f != 2) {
    throw Error(ErrorKind::NonPlanar, "diagram is not planar: V - E + F = " + std::to_string(n - 2 * n + f) +
                                          " (expected 2); virtual crossings are not supported");
  }
  return d;
}

std::vector<DiagramLine> diagram_lines(std::string_view contents) {
  std::vector<DiagramLine> out;
  int number = 0;
  std::size_t i = 0;
  while (i <= contents.size()) {
    std::size_t j = contents.find('\n', i);
    if (j == std::string_view::npos) j = contents.size();
    ++number;
    std::string_view line = contents.substr(i, j - i);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, std::string(line.substr(first, last - first + 1))});
    }
    if (j == contents.size()) break;
    i = j + 1;
  }
  return out;
}

std::vector<Region> faces(std::span<const int> mates, std::span<const std::uint8_t> alive) {
  const int n = static_cast<int>(alive.size());
  std::vector<std::uint8_t> seen(4 * n, 0);
  std::vector<Region> out;
  for (int start = 0; start < 4 * n; ++start) {
    if (!alive[crossing_of(start)] || seen[start]) continue;
    Region r;
    int corner = start;
    do {
      seen[corner] = 1;
      r.boundary.push_back({crossing_of(corner), position_of(corner)});
      // Leave along position p, arrive at q, continue in the corner before q.
      const int q = mates[corner];
      corner = slot_of(crossing_of(q), (position_of(q) + 3) % 4);
    } while (corner != start);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Region> faces(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return {Region{}, Region{}};
  std::vector<std::uint8_t> alive(d.crossing_count(), 1);
  return faces(d.mates(), alive);
}

DiagramProperties classify(const LinkDiagram& d) {
  DiagramProperties props;
  props.crossing_count = d.crossing_count();
  props.component_count = d.component_count();
  props.writhe = d.writhe();

  // Over/under alternates along a strand iff every arc joins an under end
  // (even position) to an over end (odd position).
  props.alternating = true;
  for (int s = 0; s < d.slot_count(); ++s) {
    if (position_of(s) % 2 == position_of(d.mate(s)) % 2) props.alternating = false;
  }

  props.reduced = true;
  for (const auto& region : faces(d)) {
    for (const auto& a : region.boundary) {
      for (const auto& b : region.boundary) {
        if (a.crossing == b.crossing && (a.pos + 2) % 4 == b.pos) props.reduced = false;
      }
    }
  }
  return props;
}

PartialDiagram::PartialDiagram(const LinkDiagram& d)
    : original_(std::make_shared<const LinkDiagram>(d)),
      mate_(d.mates().begin(), d.mates().end()),
      alive_(d.crossing_count(), 1),
      log_(d.crossing_count()),
      remaining_(d.crossing_count()),
      free_circles_(d.crossing_count() == 0 ? 1 : 0) {}

bool PartialDiagram::has_crossing(int id) const {
  return id >= 0 && id < static_cast<int>(alive_.size()) && alive_[id];
}

std::vector<int> PartialDiagram::remaining_ids() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(alive_.size()); ++x) {
    if (alive_[x]) out.push_back(x);
  }
  return out;
}

std::string PartialDiagram::log_key() const {
  std::string key(log_.size(), '.');
  for (std::size_t i = 0; i < log_.size(); ++i) {
    if (log_[i]) key[i] = *log_[i] == Resolution::A ? 'A' : 'B';
  }
  return key;
}

PartialDiagram smooth(const PartialDiagram& p, int x, Resolution res) {
  if (!p.has_crossing(x)) {
    throw Error(ErrorKind::UnknownCrossing, "crossing " + std::to_string(x) + " is not present");
  }
  PartialDiagram out = p;
  auto& mate = out.mate_;
  auto internal = [&](int pos) { return crossing_of(mate[slot_of(x, pos)]) == x; };
  std::array<bool, 4> done{};

  // Walk from each external end through the smoothing arcs (and any arcs
  // returning straight to this crossing) until another external end.
  std::vector<std::pair<int, int>> joins;
  for (int pos = 0; pos < 4; ++pos) {
    if (done[pos] || internal(pos)) continue;
    int cur = pos;
    done[cur] = true;
    while (true) {
      const int partner = smoothing_partner(cur, res);
      done[partner] = true;
      if (!internal(partner)) {
        joins.emplace_back(mate[slot_of(x, pos)], mate[slot_of(x, partner)]);
        break;
      }
      cur = position_of(mate[slot_of(x, partner)]);
      done[cur] = true;
    }
  }
  // Whatever is left closes up inside the crossing's neighbourhood.
  for (int pos = 0; pos < 4; ++pos) {
    if (done[pos]) continue;
    int cur = pos;
    do {
      const int partner = smoothing_partner(cur, res);
      done[cur] = done[partner] = true;
      cur = position_of(mate[slot_of(x, partner)]);
    } while (cur != pos);
    ++out.free_circles_;
  }
  for (auto [a, b] : joins) {
    mate[a] = b;
    mate[b] = a;
  }
  for (int pos = 0; pos < 4; ++pos) mate[slot_of(x, pos)] = -1;
  out.alive_[x] = 0;
  out.log_[x] = res;
  --out.remaining_;
  return out;
}

std::vector<Region> faces(const PartialDiagram& p) { return faces(p.mates(), p.alive()); }

}  // namespace statesurf
