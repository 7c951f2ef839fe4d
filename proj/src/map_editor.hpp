#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "alternator/augment.hpp"
#include "alternator/error.hpp"

namespace alternator::detail {

// Mutable staging area for rewrites. Existing darts keep their ids; new
// crossings are appended. finish() revalidates everything.
class MapEditor {
 public:
  explicit MapEditor(const AugmentedDiagram& ad)
      : map_(ad.diagram().map()), stats_(ad.stats()), has_provenance_(ad.provenance().has_value()) {
    const Diagram& d = ad.diagram();
    dart_origin_.assign(d.num_darts(), std::nullopt);
    crossing_origin_.assign(d.num_crossings(), std::nullopt);
    if (has_provenance_) {
      crossing_origin_ = ad.provenance()->crossing_origin;
      for (const Edge& e : d.edges()) {
        dart_origin_[e.darts[0]] = ad.provenance()->edge_origin[e.id];
        dart_origin_[e.darts[1]] = ad.provenance()->edge_origin[e.id];
      }
    }
    next_label_ = 1 + *std::max_element(map_.label.begin(), map_.label.end());
  }

  CrossingId add_crossing(Axis over) {
    map_.over.push_back(over);
    for (int s = 0; s < 4; ++s) {
      map_.twin.push_back(-1);
      map_.tag.push_back(EdgeTag::Original);
      map_.label.push_back(0);
      dart_origin_.push_back(std::nullopt);
    }
    crossing_origin_.push_back(std::nullopt);
    return static_cast<CrossingId>(map_.over.size()) - 1;
  }

  void connect(DartId a, DartId b, EdgeTag tag, int label, std::optional<int> origin) {
    map_.twin[a] = b;
    map_.twin[b] = a;
    for (DartId x : {a, b}) {
      map_.tag[x] = tag;
      map_.label[x] = label;
      dart_origin_[x] = origin;
    }
  }

  void set_axis(CrossingId c, Axis a) { map_.over[c] = a; }
  const RawMap& raw() const noexcept { return map_; }

  int fresh_label() { return next_label_++; }
  EdgeTag tag(DartId d) const { return map_.tag[d]; }
  int label(DartId d) const { return map_.label[d]; }
  std::optional<int> origin(DartId d) const { return dart_origin_[d]; }
  MoveStats& stats() { return stats_; }

  /// Throws PlanarityBroken when the edited rotation system is not a sphere.
  AugmentedDiagram finish() const {
    try {
      Diagram d = Diagram::from_map(map_);
      std::optional<Provenance> prov;
      if (has_provenance_) {
        Provenance p;
        p.crossing_origin = crossing_origin_;
        p.edge_origin.reserve(d.num_edges());
        for (const Edge& e : d.edges()) p.edge_origin.push_back(dart_origin_[e.darts[0]]);
        prov = std::move(p);
      }
      return AugmentedDiagram(std::move(d), std::move(prov), stats_);
    } catch (const Error& e) {
      throw Error(ErrorCode::PlanarityBroken, e.what());
    }
  }

 private:
  RawMap map_;
  std::vector<std::optional<int>> dart_origin_;
  std::vector<std::optional<CrossingId>> crossing_origin_;
  MoveStats stats_;
  bool has_provenance_;
  int next_label_ = 1;
};

}  // namespace alternator::detail
