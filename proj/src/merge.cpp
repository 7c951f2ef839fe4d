#include "alternator/merge.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "alternator/error.hpp"
#include "alternator/moves.hpp"

namespace alternator {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::string dump(const Diagram& d) {
  std::ostringstream os;
  for (CrossingId c = 0; c < d.num_crossings(); ++c) {
    os << "X[";
    for (int s = 0; s < 4; ++s) {
      const DartId x = Diagram::dart_at(c, s);
      os << (s ? "," : "") << d.edge(d.edge_of(x)).label
         << (d.tag_of(x) == EdgeTag::Augment ? "a" : "");
    }
    os << "]/" << static_cast<int>(d.over_axis(c)) << ' ';
  }
  return os.str();
}

// Some dart of `circle` on `face`, or -1.
DartId circle_dart_on_face(const AugmentedDiagram& ad, FaceId face, int circle) {
  for (DartId x : ad.diagram().face(face).darts) {
    if (ad.circle_of(x) == circle) return x;
  }
  return -1;
}

DartId smallest_circle_dart_on_face(const AugmentedDiagram& ad, FaceId face, int circle) {
  DartId best = -1;
  for (DartId x : ad.diagram().face(face).darts) {
    if (ad.circle_of(x) == circle && (best < 0 || x < best)) best = x;
  }
  return best;
}

// Smallest face holding darts of both circles, or -1.
FaceId shared_face(const AugmentedDiagram& ad, int a, int b) {
  for (const Face& f : ad.diagram().faces()) {
    if (circle_dart_on_face(ad, f.id, a) >= 0 && circle_dart_on_face(ad, f.id, b) >= 0) {
      return f.id;
    }
  }
  return -1;
}

AugmentedDiagram band_merge(const AugmentedDiagram& ad, int source, int target) {
  const FaceId f = shared_face(ad, source, target);
  if (f < 0) throw Error(ErrorCode::NoPath, "circles do not share a face");
  return type_i_merge(ad, {f, smallest_circle_dart_on_face(ad, f, source),
                           smallest_circle_dart_on_face(ad, f, target)});
}

}  // namespace

std::vector<Component> components(const AugmentedDiagram& ad) {
  const Diagram& d = ad.diagram();
  DisjointSets sets(d.num_faces());
  for (const Edge& e : d.edges()) {
    if (e.tag == EdgeTag::Original) sets.unite(d.face_of(e.darts[0]), d.face_of(e.darts[1]));
  }

  std::vector<int> index_of_root(d.num_faces(), -1);
  std::vector<Component> out;
  std::vector<std::set<int>> circles;
  for (FaceId f = 0; f < d.num_faces(); ++f) {
    const int root = sets.find(f);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(out.size());
      out.push_back({static_cast<int>(out.size()), {}, {}});
      circles.emplace_back();
    }
    Component& c = out[index_of_root[root]];
    c.faces.push_back(f);
    for (DartId x : d.face(f).darts) {
      if (ad.circle_of(x) >= 0) circles[c.id].insert(ad.circle_of(x));
    }
  }
  for (Component& c : out) c.circles.assign(circles[c.id].begin(), circles[c.id].end());
  return out;
}

DualPath find_dual_path(const AugmentedDiagram& ad, const Component& component, int source,
                        int target) {
  const Diagram& d = ad.diagram();
  auto has = [&](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  if (!has(component.circles, source) || !has(component.circles, target)) {
    throw Error(ErrorCode::InvalidArgument, "circles are not on the component's boundary");
  }

  std::vector<char> in_component(d.num_faces(), 0);
  for (FaceId f : component.faces) in_component[f] = 1;

  std::vector<FaceId> parent_face(d.num_faces(), -1);
  std::vector<DartId> parent_dart(d.num_faces(), -1);
  std::vector<char> seen(d.num_faces(), 0);
  std::deque<FaceId> queue;
  for (FaceId f : component.faces) {
    if (circle_dart_on_face(ad, f, source) < 0) continue;
    if (circle_dart_on_face(ad, f, target) >= 0) return {f, f, {}};
    seen[f] = 1;
    queue.push_back(f);
  }

  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    std::vector<DartId> darts = d.face(f).darts;
    std::sort(darts.begin(), darts.end());
    for (DartId x : darts) {
      if (d.tag_of(x) != EdgeTag::Original) continue;
      const FaceId g = d.face_of(d.twin(x));
      if (!in_component[g] || seen[g]) continue;
      seen[g] = 1;
      parent_face[g] = f;
      parent_dart[g] = x;
      if (circle_dart_on_face(ad, g, target) >= 0) {
        DualPath path{-1, g, {}};
        FaceId cur = g;
        while (parent_face[cur] >= 0) {
          path.steps.push_back(parent_dart[cur]);
          cur = parent_face[cur];
        }
        path.start = cur;
        std::reverse(path.steps.begin(), path.steps.end());
        return path;
      }
      queue.push_back(g);
    }
  }
  throw Error(ErrorCode::NoPath, "no face path joins circles " + std::to_string(source) +
                                     " and " + std::to_string(target));
}

AugmentedDiagram merge_once(const AugmentedDiagram& ad) {
  const std::vector<Component> comps = components(ad);
  const auto it = std::find_if(comps.begin(), comps.end(),
                               [](const Component& c) { return c.circles.size() >= 2; });
  if (it == comps.end()) {
    throw Error(ErrorCode::NoMergeableComponent,
                "no component touches two circles; diagram: " + dump(ad.diagram()));
  }
  const int source = it->circles[0];
  const int target = it->circles[1];
  const DualPath path = find_dual_path(ad, *it, source, target);
  if (path.steps.empty()) return band_merge(ad, source, target);

  // Circle ids can shift as edges are rewritten; darts of untouched arcs
  // cannot, so each circle is tracked by one of its darts.
  const DartId source_anchor = ad.circles()[source].darts.front();
  const DartId target_anchor = ad.circles()[target].darts.front();

  AugmentedDiagram cur = ad;
  DartId leading = smallest_circle_dart_on_face(ad, path.start, source);
  for (DartId step : path.steps) {
    const FaceId face = cur.diagram().face_of(leading);
    PushResult pushed = type_ii_push(cur, {face, leading, step});
    cur = std::move(pushed.diagram);
    leading = pushed.leading;
    if (shared_face(cur, cur.circle_of(source_anchor), cur.circle_of(target_anchor)) >= 0) break;
  }
  return band_merge(cur, cur.circle_of(source_anchor), cur.circle_of(target_anchor));
}

AugmentedDiagram merge_all(AugmentedDiagram ad) {
  circles_of(ad);
  while (ad.num_circles() >= 2) {
    const int before = ad.num_circles();
    ad = merge_once(ad);
    if (ad.num_circles() != before - 1) {
      throw Error(ErrorCode::CircleNotSimple, "merge did not remove exactly one circle");
    }
  }
  return ad;
}

AugmentedDiagram full_pipeline(const Diagram& d) { return merge_all(augment_regions(d)); }

}  // namespace alternator
