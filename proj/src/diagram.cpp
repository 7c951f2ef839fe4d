#include "alternator/diagram.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "alternator/error.hpp"

namespace alternator {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateLabelArity: return "DuplicateLabelArity";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::RegionAlternationViolated: return "RegionAlternationViolated";
    case ErrorCode::PlanarityBroken: return "PlanarityBroken";
    case ErrorCode::CircleNotSimple: return "CircleNotSimple";
    case ErrorCode::AlternationBroken: return "AlternationBroken";
    case ErrorCode::NoAlternatingAssignment: return "NoAlternatingAssignment";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::NoMergeableComponent: return "NoMergeableComponent";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::NotSameFace: return "NotSameFace";
    case ErrorCode::SameCircle: return "SameCircle";
    case ErrorCode::NotAugmentArc: return "NotAugmentArc";
  }
  return "Unknown";
}

namespace {

void check_shape(const RawMap& m) {
  const std::size_t darts = m.over.size() * 4;
  if (m.over.empty()) {
    throw Error(ErrorCode::InvalidMap, "a diagram needs at least one crossing");
  }
  if (m.twin.size() != darts || m.tag.size() != darts || m.label.size() != darts) {
    throw Error(ErrorCode::InvalidMap, "per-dart vectors must hold 4 entries per crossing");
  }
  const int n = static_cast<int>(darts);
  for (int d = 0; d < n; ++d) {
    const int t = m.twin[d];
    if (t < 0 || t >= n || t == d || m.twin[t] != d) {
      throw Error(ErrorCode::InvalidMap,
                  "twin is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    if (m.tag[d] != m.tag[t] || m.label[d] != m.label[t]) {
      throw Error(ErrorCode::InvalidMap,
                  "twin darts disagree on edge data at dart " + std::to_string(d));
    }
  }
}

bool crossings_connected(const RawMap& m) {
  const int v = static_cast<int>(m.over.size());
  std::vector<char> seen(v, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const int w = m.twin[4 * c + s] / 4;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == v;
}

}  // namespace

Diagram Diagram::from_map(RawMap map) {
  check_shape(map);
  if (!crossings_connected(map)) {
    throw Error(ErrorCode::Disconnected, "the projection has more than one connected piece");
  }

  Diagram out(std::move(map));
  const int n = out.num_darts();

  out.edge_of_.assign(n, -1);
  for (DartId d = 0; d < n; ++d) {
    const DartId t = out.twin(d);
    if (d < t) {
      const EdgeId e = static_cast<EdgeId>(out.edges_.size());
      out.edges_.push_back(Edge{e, {d, t}, out.map_.tag[d], out.map_.label[d]});
      out.edge_of_[d] = e;
      out.edge_of_[t] = e;
    }
  }

  out.face_of_.assign(n, -1);
  for (DartId start = 0; start < n; ++start) {
    if (out.face_of_[start] >= 0) continue;
    Face f{static_cast<FaceId>(out.faces_.size()), {}};
    DartId d = start;
    do {
      out.face_of_[d] = f.id;
      f.darts.push_back(d);
      d = out.face_next(d);
    } while (d != start);
    out.faces_.push_back(std::move(f));
  }

  const int euler = out.num_crossings() - out.num_edges() + out.num_faces();
  if (euler != 2) {
    throw Error(ErrorCode::NonPlanar, "V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return out;
}

Diagram Diagram::with_toggled_axis(CrossingId c) const {
  RawMap m = map_;
  m.over.at(c) = other(m.over.at(c));
  return from_map(std::move(m));
}

Diagram Diagram::with_flipped_tag(EdgeId e) const {
  RawMap m = map_;
  const Edge& edge = edges_.at(e);
  const EdgeTag flipped = edge.tag == EdgeTag::Original ? EdgeTag::Augment : EdgeTag::Original;
  m.tag[edge.darts[0]] = flipped;
  m.tag[edge.darts[1]] = flipped;
  return from_map(std::move(m));
}

Diagram build_diagram(std::span<const CrossingTuple> crossings,
                      const std::map<int, EdgeTag>& tags) {
  if (crossings.empty()) {
    throw Error(ErrorCode::InvalidMap, "a diagram needs at least one crossing");
  }
  std::map<int, std::vector<DartId>> occurrences;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    for (int s = 0; s < 4; ++s) {
      occurrences[crossings[c].labels[s]].push_back(static_cast<DartId>(4 * c + s));
    }
  }

  RawMap m;
  m.over.reserve(crossings.size());
  for (const auto& x : crossings) m.over.push_back(x.over);
  const std::size_t n = crossings.size() * 4;
  m.twin.assign(n, -1);
  m.tag.assign(n, EdgeTag::Original);
  m.label.assign(n, 0);
  for (const auto& [label, darts] : occurrences) {
    if (darts.size() != 2) {
      throw Error(ErrorCode::DuplicateLabelArity,
                  "label " + std::to_string(label) + " occurs " + std::to_string(darts.size()) +
                      " times, expected 2");
    }
    const auto it = tags.find(label);
    const EdgeTag tag = it == tags.end() ? EdgeTag::Original : it->second;
    m.twin[darts[0]] = darts[1];
    m.twin[darts[1]] = darts[0];
    for (DartId d : darts) {
      m.tag[d] = tag;
      m.label[d] = label;
    }
  }
  return Diagram::from_map(std::move(m));
}

std::vector<Face> trace_faces(const Diagram& d) {
  return {d.faces().begin(), d.faces().end()};
}

EdgeLabelPair classify_edge(const Diagram& d, EdgeId e) {
  const Edge& edge = d.edge(e);
  const Sign a = end_label(d, edge.darts[0]);
  const Sign b = end_label(d, edge.darts[1]);
  EdgeClass kind = EdgeClass::Alternating;
  if (a == b) kind = a == Sign::Plus ? EdgeClass::PositiveNonAlt : EdgeClass::NegativeNonAlt;
  return {{a, b}, kind};
}

std::vector<EdgeLabelPair> classify_edges(const Diagram& d) {
  std::vector<EdgeLabelPair> out;
  out.reserve(d.num_edges());
  for (EdgeId e = 0; e < d.num_edges(); ++e) out.push_back(classify_edge(d, e));
  return out;
}

ClassCounts count_classes(const Diagram& d) {
  ClassCounts counts;
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    switch (classify_edge(d, e).kind) {
      case EdgeClass::Alternating: ++counts.alternating; break;
      case EdgeClass::PositiveNonAlt: ++counts.positive; break;
      case EdgeClass::NegativeNonAlt: ++counts.negative; break;
    }
  }
  return counts;
}

bool is_alternating(const Diagram& d) {
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    if (classify_edge(d, e).kind != EdgeClass::Alternating) return false;
  }
  return true;
}

std::vector<StrandWalk> strand_components(const Diagram& d, TagFilter filter) {
  auto matches = [&](DartId x) {
    switch (filter) {
      case TagFilter::Any: return true;
      case TagFilter::Original: return d.tag_of(x) == EdgeTag::Original;
      case TagFilter::Augment: return d.tag_of(x) == EdgeTag::Augment;
    }
    return false;
  };

  std::vector<char> visited(d.num_edges(), 0);
  std::vector<StrandWalk> walks;
  for (DartId start = 0; start < d.num_darts(); ++start) {
    if (!matches(start) || visited[d.edge_of(start)]) continue;
    StrandWalk walk;
    DartId cur = start;
    while (true) {
      walk.darts.push_back(cur);
      visited[d.edge_of(cur)] = 1;
      const DartId out = Diagram::opposite(d.twin(cur));
      if (out == start) break;
      if (!matches(out) || visited[d.edge_of(out)]) {
        walk.closed = false;
        break;
      }
      cur = out;
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.num_crossings() != b.num_crossings() || a.num_edges() != b.num_edges() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  const int n = a.num_darts();
  std::vector<DartId> image(n);
  std::vector<DartId> stack;

  auto try_root = [&](DartId root) {
    std::fill(image.begin(), image.end(), -1);
    std::vector<char> used(n, 0);
    auto assign = [&](DartId x, DartId y) {
      if (image[x] >= 0) return image[x] == y;
      if (used[y]) return false;
      if (a.tag_of(x) != b.tag_of(y) || end_label(a, x) != end_label(b, y)) return false;
      image[x] = y;
      used[y] = 1;
      stack.push_back(x);
      return true;
    };
    stack.clear();
    if (!assign(0, root)) return false;
    while (!stack.empty()) {
      const DartId x = stack.back();
      stack.pop_back();
      const DartId y = image[x];
      if (!assign(Diagram::next(x), Diagram::next(y))) return false;
      if (!assign(a.twin(x), b.twin(y))) return false;
    }
    return true;
  };

  for (DartId root = 0; root < n; ++root) {
    if (try_root(root)) return true;
  }
  return false;
}

}  // namespace alternator
