#include "alternator/augment.hpp"

#include <string>

#include "alternator/error.hpp"
#include "map_editor.hpp"

namespace alternator {

AugmentedDiagram::AugmentedDiagram(Diagram diagram, std::optional<Provenance> provenance,
                                   MoveStats stats)
    : diagram_(std::move(diagram)), provenance_(std::move(provenance)), stats_(stats) {
  if (provenance_ &&
      (static_cast<int>(provenance_->crossing_origin.size()) != diagram_.num_crossings() ||
       static_cast<int>(provenance_->edge_origin.size()) != diagram_.num_edges())) {
    throw Error(ErrorCode::InvalidArgument, "provenance does not match the diagram's size");
  }
  circle_of_edge_.assign(diagram_.num_edges(), -1);
  for (StrandWalk& walk : strand_components(diagram_, TagFilter::Augment)) {
    Circle c{static_cast<int>(circles_.size()), std::move(walk.darts), {}, walk.closed};
    for (DartId d : c.darts) {
      c.edges.push_back(diagram_.edge_of(d));
      circle_of_edge_[diagram_.edge_of(d)] = c.id;
    }
    circles_.push_back(std::move(c));
  }
}

AugmentedDiagram AugmentedDiagram::from_original(const Diagram& d) {
  Provenance p;
  p.crossing_origin.reserve(d.num_crossings());
  for (CrossingId c = 0; c < d.num_crossings(); ++c) p.crossing_origin.emplace_back(c);
  for (const Edge& e : d.edges()) {
    p.edge_origin.push_back(e.tag == EdgeTag::Original ? std::optional<int>(e.label)
                                                       : std::nullopt);
  }
  return AugmentedDiagram(d, std::move(p));
}

AugmentedDiagram AugmentedDiagram::with_diagram(Diagram d) const {
  return AugmentedDiagram(std::move(d), provenance_, stats_);
}

std::vector<Incidence> region_incidences(const Diagram& d, FaceId face) {
  std::vector<Incidence> out;
  for (DartId x : d.face(face).darts) {
    const EdgeLabelPair pair = classify_edge(d, d.edge_of(x));
    if (pair.kind == EdgeClass::Alternating) continue;
    out.push_back({x, d.edge_of(x), pair.ends[0]});
  }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (n % 2 != 0 || out[i].sign == out[(i + 1) % n].sign) {
      throw Error(ErrorCode::RegionAlternationViolated,
                  "face " + std::to_string(face) + " has non-alternating signs out of order");
    }
  }
  return out;
}

AugmentedDiagram augment_regions(const Diagram& d) {
  AugmentedDiagram base = AugmentedDiagram::from_original(d);
  if (is_alternating(d)) return base;

  detail::MapEditor ed(base);
  // For each incidence dart, the free slot of its midpoint that faces the
  // incidence's face: the lower dart of an edge attaches at slot 0 and sees
  // slot 1 next along its face, the upper dart attaches at slot 2 and sees 3.
  std::vector<DartId> facing(d.num_darts(), -1);
  for (const Edge& e : d.edges()) {
    const EdgeClass kind = classify_edge(d, e.id).kind;
    if (kind == EdgeClass::Alternating) continue;
    // Augment strand runs through slots 1 and 3; it goes over at ++ edges.
    const CrossingId m = ed.add_crossing(kind == EdgeClass::PositiveNonAlt ? Axis::Odd : Axis::Even);
    const auto [lo, hi] = e.darts;
    const EdgeTag tag = ed.tag(lo);
    const auto origin = ed.origin(lo);
    ed.connect(lo, Diagram::dart_at(m, 0), tag, e.label, origin);
    ed.connect(hi, Diagram::dart_at(m, 2), tag, ed.fresh_label(), origin);
    facing[lo] = Diagram::dart_at(m, 1);
    facing[hi] = Diagram::dart_at(m, 3);
    ++ed.stats().midpoints;
  }

  for (const Face& f : d.faces()) {
    const std::vector<Incidence> inc = region_incidences(d, f.id);
    for (std::size_t i = 0; i + 1 < inc.size(); i += 2) {
      ed.connect(facing[inc[i].dart], facing[inc[i + 1].dart], EdgeTag::Augment,
                 ed.fresh_label(), std::nullopt);
    }
  }

  AugmentedDiagram out = ed.finish();
  if (!is_alternating(out.diagram())) {
    throw Error(ErrorCode::AlternationBroken, "augmented diagram is not alternating");
  }
  return out;
}

std::vector<Circle> circles_of(const AugmentedDiagram& ad) {
  const Diagram& d = ad.diagram();
  for (CrossingId c = 0; c < d.num_crossings(); ++c) {
    int augment = 0;
    for (int s = 0; s < 4; ++s) augment += d.tag_of(Diagram::dart_at(c, s)) == EdgeTag::Augment;
    if (augment == 4) {
      throw Error(ErrorCode::CircleNotSimple,
                  "crossing " + std::to_string(c) + " has two augmenting strands");
    }
  }
  std::vector<Circle> circles = AugmentedDiagram(d, std::nullopt).circles();
  for (const Circle& c : circles) {
    if (!c.closed) {
      throw Error(ErrorCode::CircleNotSimple,
                  "augmenting strand through dart " + std::to_string(c.darts.front()) +
                      " is not a closed curve");
    }
  }
  return circles;
}

}  // namespace alternator
