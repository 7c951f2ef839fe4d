#include "alternator/moves.hpp"

#include <array>
#include <string>
#include <utility>

#include "alternator/error.hpp"
#include "map_editor.hpp"

namespace alternator {

namespace {

void check_site(const Diagram& d, const MoveSite& site) {
  auto valid = [&](DartId x) { return x >= 0 && x < d.num_darts(); };
  if (site.face < 0 || site.face >= d.num_faces() || !valid(site.first) || !valid(site.second)) {
    throw Error(ErrorCode::InvalidArgument, "move site out of range");
  }
  if (d.face_of(site.first) != site.face || d.face_of(site.second) != site.face) {
    throw Error(ErrorCode::NotSameFace, "darts " + std::to_string(site.first) + " and " +
                                            std::to_string(site.second) + " are not both on face " +
                                            std::to_string(site.face));
  }
  if (d.edge_of(site.first) == d.edge_of(site.second)) {
    throw Error(ErrorCode::InvalidArgument, "move site uses the same edge twice");
  }
  if (d.tag_of(site.first) != EdgeTag::Augment) {
    throw Error(ErrorCode::NotAugmentArc,
                "dart " + std::to_string(site.first) + " is not on an augmenting edge");
  }
}

Sign staged_label(const RawMap& m, DartId x) {
  return axis_of_slot(Diagram::slot_of(x)) == m.over[Diagram::crossing_of(x)] ? Sign::Plus
                                                                              : Sign::Minus;
}

}  // namespace

AugmentedDiagram type_i_merge(const AugmentedDiagram& ad, const MoveSite& site) {
  const Diagram& d = ad.diagram();
  check_site(d, site);
  if (d.tag_of(site.second) != EdgeTag::Augment) {
    throw Error(ErrorCode::NotAugmentArc,
                "dart " + std::to_string(site.second) + " is not on an augmenting edge");
  }
  if (ad.circle_of(site.first) == ad.circle_of(site.second)) {
    throw Error(ErrorCode::SameCircle, "both arcs belong to circle " +
                                           std::to_string(ad.circle_of(site.first)));
  }

  const DartId a = site.first;
  const DartId a_end = d.twin(a);
  const DartId b = site.second;
  const DartId b_end = d.twin(b);

  detail::MapEditor ed(ad);
  const int alpha_label = ed.label(a);
  const int beta_label = ed.label(b);
  ed.connect(a_end, b, EdgeTag::Augment, alpha_label, std::nullopt);
  ed.connect(a, b_end, EdgeTag::Augment, beta_label, std::nullopt);
  ++ed.stats().type_i;

  AugmentedDiagram out = ed.finish();
  const Diagram& r = out.diagram();
  if (end_label(r, a_end) == end_label(r, b) || end_label(r, a) == end_label(r, b_end)) {
    throw Error(ErrorCode::AlternationBroken, "band merge joined two ends of equal sign");
  }
  return out;
}

PushResult type_ii_push(const AugmentedDiagram& ad, const MoveSite& site) {
  const Diagram& d = ad.diagram();
  check_site(d, site);

  const DartId a = site.first;
  const DartId a_end = d.twin(a);
  const DartId b = site.second;
  const DartId b_end = d.twin(b);

  detail::MapEditor ed(ad);
  const EdgeTag alpha_tag = ed.tag(a);
  const EdgeTag beta_tag = ed.tag(b);
  const auto alpha_origin = ed.origin(a);
  const auto beta_origin = ed.origin(b);

  // X is where the finger leaves the face, Y where it comes back. Both place
  // beta on slots 0/2 and alpha on slots 1/3:
  //   X: 0 -> Y along beta, 1 -> alpha's start, 2 -> beta's end, 3 -> Y along alpha
  //   Y: 0 -> beta's start, 1 -> alpha's end, 2 -> X along beta, 3 -> X along alpha
  const CrossingId x = ed.add_crossing(Axis::Odd);
  const CrossingId y = ed.add_crossing(Axis::Odd);
  auto at = [](CrossingId c, int s) { return Diagram::dart_at(c, s); };

  const std::array<std::pair<DartId, DartId>, 3> alpha_parts{
      {{a, at(x, 1)}, {at(x, 3), at(y, 3)}, {at(y, 1), a_end}}};
  const std::array<std::pair<DartId, DartId>, 3> beta_parts{
      {{b, at(y, 0)}, {at(y, 2), at(x, 0)}, {at(x, 2), b_end}}};

  ed.connect(alpha_parts[0].first, alpha_parts[0].second, alpha_tag, ed.label(a), alpha_origin);
  ed.connect(alpha_parts[1].first, alpha_parts[1].second, alpha_tag, ed.fresh_label(), alpha_origin);
  ed.connect(alpha_parts[2].first, alpha_parts[2].second, alpha_tag, ed.fresh_label(), alpha_origin);
  ed.connect(beta_parts[0].first, beta_parts[0].second, beta_tag, ed.label(b), beta_origin);
  ed.connect(beta_parts[1].first, beta_parts[1].second, beta_tag, ed.fresh_label(), beta_origin);
  ed.connect(beta_parts[2].first, beta_parts[2].second, beta_tag, ed.fresh_label(), beta_origin);

  auto alternates = [](const RawMap& m, const auto& parts) {
    for (const auto& [p, q] : parts) {
      if (staged_label(m, p) == staged_label(m, q)) return false;
    }
    return true;
  };

  int chosen = -1;
  for (int k = 0; k < 4 && chosen < 0; ++k) {
    ed.set_axis(x, k < 2 ? Axis::Odd : Axis::Even);
    ed.set_axis(y, k % 2 == 0 ? Axis::Odd : Axis::Even);
    const RawMap& staged = ed.raw();
    if (alternates(staged, alpha_parts) && alternates(staged, beta_parts)) chosen = k;
  }
  if (chosen < 0) {
    throw Error(ErrorCode::NoAlternatingAssignment,
                "no over/under choice makes the pushed finger alternate at darts " +
                    std::to_string(a) + ", " + std::to_string(b));
  }
  ++ed.stats().type_ii;
  return PushResult{ed.finish(), at(x, 3), chosen};
}

}  // namespace alternator
