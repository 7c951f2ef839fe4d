#pragma once

// Combinatorial-map representation of link projections.
//
// A diagram with V crossings has 4V darts. Dart d sits at crossing d / 4 in
// rotation slot d % 4; slots run counterclockwise, and the strand through a
// crossing joins opposite slots (0-2 and 1-3). Each dart is paired with its
// twin, the dart at the other end of the same edge. Faces are the orbits of
// d -> next(twin(d)).
//
// Edge-end labels: an end is labelled Plus when its strand is the over-strand
// at that crossing and Minus otherwise. An edge whose two ends carry
// different labels is alternating; ++ edges are positive non-alternating and
// -- edges negative non-alternating.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace alternator {

using DartId = int;
using CrossingId = int;
using EdgeId = int;
using FaceId = int;

enum class Sign : std::uint8_t { Plus, Minus };

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

/// Which pair of opposite slots carries the over-strand: Even = {0,2},
/// Odd = {1,3}.
enum class Axis : std::uint8_t { Even = 0, Odd = 1 };

constexpr Axis other(Axis a) noexcept {
  return a == Axis::Even ? Axis::Odd : Axis::Even;
}

constexpr Axis axis_of_slot(int slot) noexcept {
  return (slot % 2 == 0) ? Axis::Even : Axis::Odd;
}

enum class EdgeTag : std::uint8_t { Original, Augment };

enum class EdgeClass : std::uint8_t { Alternating, PositiveNonAlt, NegativeNonAlt };

struct EdgeLabelPair {
  std::array<Sign, 2> ends;  // labels at Edge::darts[0] and Edge::darts[1]
  EdgeClass kind;
};

struct Edge {
  EdgeId id;
  std::array<DartId, 2> darts;  // darts[0] < darts[1]
  EdgeTag tag;
  int label;
};

struct Face {
  FaceId id;
  std::vector<DartId> darts;  // orbit order, starting at the smallest dart
};

/// Unvalidated map data. Per-dart tag and label vectors must agree on twins.
struct RawMap {
  std::vector<Axis> over;  // per crossing
  std::vector<DartId> twin;
  std::vector<EdgeTag> tag;
  std::vector<int> label;

  friend bool operator==(const RawMap&, const RawMap&) = default;
};

/// One crossing of a PD-style description: four edge labels listed
/// counterclockwise, plus the axis of the over-strand.
struct CrossingTuple {
  std::array<int, 4> labels;
  Axis over = Axis::Odd;
};

/// A connected, planar, 4-regular combinatorial map with over/under data.
/// Immutable; every value that exists has passed validation.
class Diagram {
 public:
  /// Validates and takes ownership of the map. Throws Error with InvalidMap,
  /// Disconnected or NonPlanar.
  static Diagram from_map(RawMap map);

  int num_crossings() const noexcept { return static_cast<int>(map_.over.size()); }
  int num_darts() const noexcept { return static_cast<int>(map_.twin.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  int num_faces() const noexcept { return static_cast<int>(faces_.size()); }

  static constexpr CrossingId crossing_of(DartId d) noexcept { return d / 4; }
  static constexpr int slot_of(DartId d) noexcept { return d % 4; }
  static constexpr DartId dart_at(CrossingId c, int slot) noexcept {
    return 4 * c + slot;
  }
  /// Counterclockwise rotation successor.
  static constexpr DartId next(DartId d) noexcept { return 4 * (d / 4) + (d % 4 + 1) % 4; }
  static constexpr DartId prev(DartId d) noexcept { return 4 * (d / 4) + (d % 4 + 3) % 4; }
  /// The dart across the crossing on the same strand.
  static constexpr DartId opposite(DartId d) noexcept {
    return 4 * (d / 4) + (d % 4 + 2) % 4;
  }

  DartId twin(DartId d) const { return map_.twin[d]; }
  DartId face_next(DartId d) const { return next(map_.twin[d]); }
  Axis over_axis(CrossingId c) const { return map_.over[c]; }

  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  EdgeTag tag_of(DartId d) const { return map_.tag[d]; }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  const Face& face(FaceId f) const { return faces_[f]; }
  std::span<const Face> faces() const noexcept { return faces_; }

  const RawMap& map() const noexcept { return map_; }

  /// Copies with a single crossing's over-strand switched, or a single
  /// edge's tag flipped.
  Diagram with_toggled_axis(CrossingId c) const;
  Diagram with_flipped_tag(EdgeId e) const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.map_ == b.map_; }

 private:
  explicit Diagram(RawMap map) : map_(std::move(map)) {}

  RawMap map_;
  std::vector<EdgeId> edge_of_;
  std::vector<Edge> edges_;
  std::vector<FaceId> face_of_;
  std::vector<Face> faces_;
};

/// Builds a diagram from crossing tuples. Every label must occur exactly
/// twice. Darts are numbered by (crossing index, slot); edge ids follow the
/// smallest dart. Labels missing from `tags` are Original.
Diagram build_diagram(std::span<const CrossingTuple> crossings,
                      const std::map<int, EdgeTag>& tags = {});

std::vector<Face> trace_faces(const Diagram& d);

inline Sign end_label(const Diagram& d, DartId dart) {
  return axis_of_slot(Diagram::slot_of(dart)) == d.over_axis(Diagram::crossing_of(dart))
             ? Sign::Plus
             : Sign::Minus;
}

EdgeLabelPair classify_edge(const Diagram& d, EdgeId e);
std::vector<EdgeLabelPair> classify_edges(const Diagram& d);

struct ClassCounts {
  int alternating = 0;
  int positive = 0;
  int negative = 0;
  int non_alternating() const noexcept { return positive + negative; }
};
ClassCounts count_classes(const Diagram& d);

bool is_alternating(const Diagram& d);

enum class TagFilter { Any, Original, Augment };

/// A walk along a strand. `darts` holds the outgoing dart of every edge
/// traversed, in order; the walk enters a crossing at slot s and leaves at
/// slot s + 2. `closed` is false only for maps where the filter splits a
/// strand.
struct StrandWalk {
  std::vector<DartId> darts;
  bool closed = true;
};

std::vector<StrandWalk> strand_components(const Diagram& d, TagFilter filter);

/// Map isomorphism preserving rotation, twin pairing, edge tags and end
/// labels. Edge labels are ignored.
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace alternator
