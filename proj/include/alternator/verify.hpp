#pragma once

// Certificate checks for augmentation results.
//
// Every check is recomputed from the raw map (twin pairing, rotation slots,
// over-axes and edge tags). Nothing here reuses the face, label or strand
// machinery of the constructive code.

#include <string>
#include <vector>

#include "alternator/augment.hpp"

namespace alternator {

struct Report {
  bool alternating = false;
  bool planar = false;
  bool connected = false;
  int circle_count = 0;
  int expected_circles = 0;
  bool circle_simple = false;
  bool restriction_ok = false;
  bool crossing_accounting_ok = false;
  std::vector<std::string> details;  // one line per failed check

  bool all_pass() const noexcept {
    return alternating && planar && connected && circle_simple && restriction_ok &&
           crossing_accounting_ok && circle_count == expected_circles;
  }
};

/// Deletes Augment edges and smooths the crossings they leave with two
/// Original ends. With provenance, crossings are ordered by origin and edges
/// carry the label of the edge they came from. Throws DegreeViolation.
Diagram restriction(const AugmentedDiagram& ad);

/// Never throws on a failed check; failures are recorded in the report.
Report verify(const Diagram& original, const AugmentedDiagram& result, int expected_circles);

}  // namespace alternator
