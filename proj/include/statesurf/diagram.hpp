#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace statesurf {

// PD convention: X[a,b,c,d] lists the four arc ends counterclockwise,
// starting at the incoming under-strand. Positions 0 and 2 carry the
// under-strand (0 in, 2 out); positions 1 and 3 the over-strand.
//
// A slot is one arc end at one crossing, indexed 4 * crossing + position.
inline constexpr int slot_of(int crossing, int pos) { return 4 * crossing + pos; }
inline constexpr int crossing_of(int slot) { return slot / 4; }
inline constexpr int position_of(int slot) { return slot % 4; }

enum class Resolution : std::uint8_t { A, B };

inline constexpr Resolution opposite(Resolution r) {
  return r == Resolution::A ? Resolution::B : Resolution::A;
}

// Smoothing partner of position `pos` inside a crossing.
// A joins (0,1),(2,3): the two corners swept when the over-strand is
// rotated counterclockwise (corners 1 and 3) merge into one region.
// B joins (1,2),(3,0).
inline constexpr int smoothing_partner(int pos, Resolution r) {
  if (r == Resolution::A) return pos ^ 1;
  return (pos % 2 == 1) ? (pos + 1) % 4 : (pos + 3) % 4;
}

// Resolution that closes corner `pos` (the sector between positions pos and
// pos+1) off into part of a state circle.
inline constexpr Resolution corner_closing_resolution(int pos) {
  return pos % 2 == 0 ? Resolution::A : Resolution::B;
}

struct Crossing {
  int id = 0;
  std::array<int, 4> arcs{};
};

// The sector of `crossing` lying counterclockwise between positions pos and
// pos+1.
struct Corner {
  int crossing = 0;
  int pos = 0;
  auto operator<=>(const Corner&) const = default;
};

struct Region {
  std::vector<Corner> boundary;  // cyclic, starts at its smallest corner
  int size() const { return static_cast<int>(boundary.size()); }
  auto operator<=>(const Region&) const = default;
};

struct DiagramProperties {
  bool connected = true;
  bool alternating = false;
  bool reduced = false;
  int crossing_count = 0;
  int component_count = 0;
  int writhe = 0;
};

struct ParseOptions {
  // Treat blank input as the 0-crossing unknot instead of rejecting it.
  bool empty_is_unknot = false;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;  // the 0-crossing unknot

  static LinkDiagram unknot() { return LinkDiagram(); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int slot_count() const { return 4 * crossing_count(); }
  int arc_count() const { return 2 * crossing_count(); }
  int component_count() const { return component_count_; }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::span<const int> mates() const { return mate_; }

  // The other end of the arc leaving `slot`.
  int mate(int slot) const { return mate_[slot]; }
  int arc_label(int slot) const { return crossings_[crossing_of(slot)].arcs[position_of(slot)]; }
  // True when the oriented strand enters its crossing through `slot`.
  bool incoming(int slot) const { return incoming_[slot] != 0; }
  int component_of_slot(int slot) const { return component_[slot]; }

  // +1 when the over-strand runs from position 3 to position 1.
  int crossing_sign(int crossing) const;
  int writhe() const;

  // PD text of this diagram, `unknot` for the empty diagram.
  std::string to_pd() const;

  friend LinkDiagram parse_pd(std::string_view text, const ParseOptions& options);

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> mate_;
  std::vector<std::uint8_t> incoming_;
  std::vector<int> component_;
  int component_count_ = 1;
};

LinkDiagram parse_pd(std::string_view text, const ParseOptions& options = {});

struct DiagramLine {
  int line = 0;  // 1-based line number in the source
  std::string text;
};

// Lines carrying a diagram: blank lines and `#` comments are dropped.
std::vector<DiagramLine> diagram_lines(std::string_view file_contents);

// Complementary regions as orbits of the corner successor map. For a
// disconnected (partially smoothed) diagram each connected piece contributes
// its own regions.
std::vector<Region> faces(std::span<const int> mates, std::span<const std::uint8_t> alive);
std::vector<Region> faces(const LinkDiagram& d);

DiagramProperties classify(const LinkDiagram& d);

// A diagram with some crossings smoothed away. Crossing ids and slot indices
// stay those of the original diagram.
class PartialDiagram {
 public:
  explicit PartialDiagram(const LinkDiagram& d);

  const LinkDiagram& original() const { return *original_; }
  std::span<const int> mates() const { return mate_; }
  std::span<const std::uint8_t> alive() const { return alive_; }

  bool has_crossing(int id) const;
  int remaining_crossings() const { return remaining_; }
  std::vector<int> remaining_ids() const;
  int free_circles() const { return free_circles_; }

  const std::vector<std::optional<Resolution>>& resolution_log() const { return log_; }
  // Compact key of the resolution log ('.', 'A', 'B' per crossing).
  std::string log_key() const;

  friend PartialDiagram smooth(const PartialDiagram& p, int crossing_id, Resolution res);

 private:
  std::shared_ptr<const LinkDiagram> original_;
  std::vector<int> mate_;  // -1 for slots of smoothed crossings
  std::vector<std::uint8_t> alive_;
  std::vector<std::optional<Resolution>> log_;
  int remaining_ = 0;
  int free_circles_ = 0;
};

PartialDiagram smooth(const PartialDiagram& p, int crossing_id, Resolution res);

std::vector<Region> faces(const PartialDiagram& p);

}  // namespace statesurf
