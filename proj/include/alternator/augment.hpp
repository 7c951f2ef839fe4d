#pragma once

// Alternating augmentation of a connected link projection.
//
// Every non-alternating edge receives a midpoint crossing. Inside each face,
// the midpoints of consecutive non-alternating incidences are joined pairwise
// by Augment edges, and the augmenting strand passes over at ++ edges and
// under at -- edges. Because the signs of the non-alternating incidences
// around any face strictly alternate, every new edge joins a + end to a - end
// and the result is alternating. The Augment edges close up into disjoint
// simple closed curves (circles).

#include <optional>
#include <vector>

#include "alternator/diagram.hpp"

namespace alternator {

/// A closed strand made of Augment edges.
struct Circle {
  int id;
  std::vector<DartId> darts;  // outgoing dart per edge, in walk order
  std::vector<EdgeId> edges;
  bool closed = true;
};

/// Maps the current diagram back onto the diagram it was derived from.
/// Crossings keep the index of the crossing they came from; Original edges
/// keep the label of the edge they subdivide.
struct Provenance {
  std::vector<std::optional<CrossingId>> crossing_origin;
  std::vector<std::optional<int>> edge_origin;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct MoveStats {
  int midpoints = 0;
  int type_i = 0;
  int type_ii = 0;

  friend bool operator==(const MoveStats&, const MoveStats&) = default;
};

class AugmentedDiagram {
 public:
  /// Wraps a diagram. Circles are read off the Augment strands without
  /// validation; use circles_of() to check simplicity.
  AugmentedDiagram(Diagram diagram, std::optional<Provenance> provenance, MoveStats stats = {});

  /// Identity provenance, no moves.
  static AugmentedDiagram from_original(const Diagram& d);

  const Diagram& diagram() const noexcept { return diagram_; }
  const std::vector<Circle>& circles() const noexcept { return circles_; }
  int num_circles() const noexcept { return static_cast<int>(circles_.size()); }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  const MoveStats& stats() const noexcept { return stats_; }

  /// Circle id of the edge at dart d, or -1 for Original edges.
  int circle_of(DartId d) const { return circle_of_edge_[diagram_.edge_of(d)]; }

  /// Same provenance and stats over a replacement map with identical
  /// crossing and edge numbering. Used for fault injection.
  AugmentedDiagram with_diagram(Diagram d) const;

 private:
  Diagram diagram_;
  std::vector<Circle> circles_;
  std::vector<int> circle_of_edge_;
  std::optional<Provenance> provenance_;
  MoveStats stats_;
};

struct Incidence {
  DartId dart;
  EdgeId edge;
  Sign sign;
};

/// Non-alternating incidences of a face in boundary order, starting from the
/// face's smallest dart. Throws RegionAlternationViolated if the signs do not
/// strictly alternate around the face.
std::vector<Incidence> region_incidences(const Diagram& d, FaceId face);

/// Throws RegionAlternationViolated or PlanarityBroken; both indicate a bug.
AugmentedDiagram augment_regions(const Diagram& d);

/// Recomputes the circles and checks they are simple and pairwise disjoint.
/// Throws CircleNotSimple.
std::vector<Circle> circles_of(const AugmentedDiagram& ad);

}  // namespace alternator
