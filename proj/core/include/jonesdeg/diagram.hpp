#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace jonesdeg {

/// One crossing of a planar diagram in PD form.
///
/// `slots` lists the four incident arc labels counterclockwise, starting
/// at the incoming understrand; the understrand always runs slot 0 -> 2.
/// On a positive crossing the overstrand runs slot 3 -> 1, on a negative
/// crossing slot 1 -> 3.
struct Crossing {
  std::array<int, 4> slots{};
  int sign = 1;

  int over_in_slot() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out_slot() const noexcept { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const noexcept { return slot == 0 || slot == over_in_slot(); }
  /// The slot the strand entering at `slot` leaves through.
  int exit_slot(int in_slot) const noexcept { return (in_slot + 2) % 4; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  int crossing = -1;
  int slot = -1;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// Oriented planar link diagram. Immutable after construction.
///
/// Besides diagrams with crossings there are three crossingless values:
/// the empty diagram, the 0-crossing unknot, and (only as cables of the
/// unknot) a crossingless unlink of several circles.
class LinkDiagram {
 public:
  /// The empty diagram.
  LinkDiagram() = default;

  static LinkDiagram unknot();
  static LinkDiagram unlink(int circles);

  /// Validates oriented crossings. Arc labels may be arbitrary positive
  /// integers when `relabel` is set; the result then carries canonical
  /// labels (each component numbered consecutively along its orientation,
  /// components seeded by the earliest outgoing slot). Without `relabel`
  /// the labels must already follow the PD convention and agree with the
  /// given signs. Throws ParseError describing the first violation.
  static LinkDiagram from_oriented(std::vector<Crossing> crossings, bool relabel);

  bool is_empty() const noexcept { return crossings_.empty() && free_circles_ == 0; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return static_cast<int>(crossings_.size()) * 2; }
  /// Number of crossingless circles (nonzero only when there are no crossings).
  int free_circles() const noexcept { return free_circles_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }

  int component_count() const noexcept { return component_count_; }
  /// Component index of an arc label (1-based label).
  int component_of_arc(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc - 1)); }
  int arc_at(SlotRef s) const { return crossing(s.crossing).slots[static_cast<std::size_t>(s.slot)]; }
  /// Where the arc ends (an incoming slot) / starts (an outgoing slot).
  SlotRef head(int arc) const { return heads_.at(static_cast<std::size_t>(arc - 1)); }
  SlotRef tail(int arc) const { return tails_.at(static_cast<std::size_t>(arc - 1)); }
  /// The other endpoint of the arc attached at `s`.
  SlotRef other_end(SlotRef s) const;

  int positive_crossings() const noexcept;
  int negative_crossings() const noexcept;

  /// Faces of the underlying 4-valent planar map. Corner 4*x + j is the
  /// sector of crossing x between slot j and slot j+1 (counterclockwise).
  const std::vector<int>& corner_faces() const noexcept { return corner_face_; }
  int face_count() const noexcept { return face_count_; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_circles_ == b.free_circles_;
  }

 private:
  void index_and_validate();

  std::vector<Crossing> crossings_;
  int free_circles_ = 0;
  int component_count_ = 0;
  std::vector<int> arc_component_;
  std::vector<SlotRef> heads_;
  std::vector<SlotRef> tails_;
  std::vector<int> corner_face_;
  int face_count_ = 0;
};

/// Parses whitespace-separated `X[a,b,c,d]` tokens; the single token `O`
/// is the 0-crossing unknot and empty text is the empty diagram. Crossing
/// signs are recovered from the label numbering.
LinkDiagram parse_pd(std::string_view text);

/// Canonical PD text; parse_pd(serialize_pd(d)) == d for connected diagrams.
std::string serialize_pd(const LinkDiagram& d);

/// c_+ - c_-.
int writhe(const LinkDiagram& d);

/// Swaps over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

/// Blackboard n-parallel. Each crossing becomes an n x n grid of
/// crossings with its own sign; parallel copies keep their left-to-right
/// order relative to the orientation. n = 1 returns d unchanged.
LinkDiagram cable(const LinkDiagram& d, int n);

/// A diagram given as its connected pieces plus crossingless circles.
struct SplitDiagram {
  std::vector<LinkDiagram> pieces;  // each has crossings
  int free_circles = 0;
};

/// Blackboard cable with mult[i] parallel copies of component i; 0 deletes
/// the component, which can leave the result split.
SplitDiagram cable(const LinkDiagram& d, const std::vector<int>& mult);

/// Inserts a Reidemeister-I curl of the given sign in the middle of `arc`.
/// On the 0-crossing unknot this yields the one-crossing kink diagram.
LinkDiagram add_kink(const LinkDiagram& d, int arc, int sign);

/// Lexicographic diagram complexity (c_-, c, v_A - w); v_A supplied by
/// the caller since it needs a state resolution.
struct Complexity {
  int negative_crossings = 0;
  int crossings = 0;
  int va_minus_writhe = 0;
};

}  // namespace jonesdeg
