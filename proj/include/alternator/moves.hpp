#pragma once

// Alternation-preserving rewrites of augmented diagrams.
//
// Type I joins two augmenting circles that share a face by a crossing-free
// band: the arcs alpha (p1 -> p2) and beta (q1 -> q2), met in the order
// p1, p2, ..., q1, q2 around the face, are replaced by p2-q1 and p1-q2.
//
// Type II pushes a finger of the augmenting arc alpha across the edge beta
// into the face on beta's far side. alpha and beta are each cut into three
// edges and two crossings appear where the finger crosses beta. The
// over/under choice at the two crossings is the first of four candidates,
// in the order (alpha over, alpha over), (alpha over, beta over),
// (beta over, alpha over), (beta over, beta over), that leaves all six new
// edges alternating.

#include "alternator/augment.hpp"

namespace alternator {

/// Two darts on the boundary of one face: `first` is alpha, `second` beta.
struct MoveSite {
  FaceId face;
  DartId first;
  DartId second;
};

/// Throws NotSameFace, NotAugmentArc, SameCircle, PlanarityBroken or
/// AlternationBroken.
AugmentedDiagram type_i_merge(const AugmentedDiagram& ad, const MoveSite& site);

struct PushResult {
  AugmentedDiagram diagram;
  /// Dart of the finger's middle segment, lying in the face beyond beta.
  DartId leading;
  /// Index of the over/under candidate used (0..3).
  int assignment;
};

/// Throws NotSameFace, NotAugmentArc, InvalidArgument, PlanarityBroken or
/// NoAlternatingAssignment.
PushResult type_ii_push(const AugmentedDiagram& ad, const MoveSite& site);

}  // namespace alternator
