#pragma once

// Reduces an alternating augmented diagram to a single augmenting circle.
//
// Faces glued across Original edges form the components of the sphere minus
// the circles. While two or more circles remain, some component touches at
// least two of them. The source circle is walked towards the target along a
// shortest path of faces inside that component, pushing a finger across each
// Original edge on the path (Type II); once the two circles share a face they
// are joined by a band (Type I).

#include <vector>

#include "alternator/augment.hpp"

namespace alternator {

struct Component {
  int id;
  std::vector<FaceId> faces;  // ascending
  std::vector<int> circles;   // ids of circles on the boundary, ascending
};

/// Components ordered by smallest face id.
std::vector<Component> components(const AugmentedDiagram& ad);

struct DualPath {
  FaceId start;                // incident to the source circle
  FaceId end;                  // incident to the target circle
  std::vector<DartId> steps;   // Original-edge darts crossed, each on the current face
};

/// Breadth-first search over the component's faces, crossing Original edges
/// only. Throws NoPath or InvalidArgument.
DualPath find_dual_path(const AugmentedDiagram& ad, const Component& component, int source,
                        int target);

/// Exactly one fewer circle. Throws NoMergeableComponent (with the offending
/// diagram in the message) if no component touches two circles.
AugmentedDiagram merge_once(const AugmentedDiagram& ad);

AugmentedDiagram merge_all(AugmentedDiagram ad);

/// augment_regions followed by merge_all.
AugmentedDiagram full_pipeline(const Diagram& d);

}  // namespace alternator
