#pragma once

// Reference computations for the tests. They read PD text or the raw map
// directly and share nothing with the library beyond the RawMap layout.

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "alternator/diagram.hpp"

namespace oracle {

using alternator::RawMap;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& name) {
  return read_file(std::string(FIXTURE_DIR) + "/" + name + ".pd");
}

// Edge classes straight from PD tuples: positions 1 and 3 are over.
// Returns label -> two chars, '+' or '-', in order of appearance.
inline std::map<int, std::string> pd_signs(const std::string& text) {
  std::map<int, std::string> out;
  static const std::regex crossing(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), crossing);
       it != std::sregex_iterator(); ++it) {
    for (int k = 0; k < 4; ++k) out[std::stoi((*it)[k + 1])] += (k % 2 == 1) ? '+' : '-';
  }
  return out;
}

inline bool plus(const RawMap& m, int x) { return (x % 4) % 2 == static_cast<int>(m.over[x / 4]); }

inline int rot_next(int x) { return 4 * (x / 4) + (x % 4 + 1) % 4; }
inline int across(int x) { return 4 * (x / 4) + (x % 4 + 2) % 4; }

// Face orbits, each starting at its smallest dart, ordered by that dart.
inline std::vector<std::vector<int>> faces(const RawMap& m) {
  const int n = static_cast<int>(m.twin.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    for (int x = s; !seen[x]; x = rot_next(m.twin[x])) {
      seen[x] = 1;
      out.back().push_back(x);
    }
  }
  return out;
}

inline int euler(const RawMap& m) {
  return static_cast<int>(m.over.size()) - static_cast<int>(m.twin.size()) / 2 +
         static_cast<int>(faces(m).size());
}

inline int non_alternating(const RawMap& m) {
  int n = 0;
  for (int x = 0; x < static_cast<int>(m.twin.size()); ++x) {
    if (x < m.twin[x] && plus(m, x) == plus(m, m.twin[x])) ++n;
  }
  return n;
}

inline bool alternating(const RawMap& m) { return non_alternating(m) == 0; }

// Every face's non-alternating incidences alternate in sign, equal counts.
inline bool regions_alternate(const RawMap& m) {
  for (const auto& f : faces(m)) {
    std::string signs;
    for (int x : f) {
      if (plus(m, x) == plus(m, m.twin[x])) signs += plus(m, x) ? '+' : '-';
    }
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] == signs[(i + 1) % signs.size()]) return false;
    }
    if (signs.size() % 2 != 0) return false;
  }
  return true;
}

// Circles the augmentation must produce, by tracing arcs: each
// non-alternating edge is a midpoint, each face pairs its incidences
// (1,2), (3,4), ... from its smallest dart, and a midpoint links the arcs on
// its two sides. Circles are the cycles of that graph.
inline int arc_traced_circles(const RawMap& m) {
  const int n = static_cast<int>(m.twin.size());
  std::vector<int> midpoint_of(n, -1);
  int midpoints = 0;
  for (int x = 0; x < n; ++x) {
    if (x < m.twin[x] && plus(m, x) == plus(m, m.twin[x])) {
      midpoint_of[x] = midpoint_of[m.twin[x]] = midpoints++;
    }
  }
  std::vector<int> parent(midpoints);
  for (int i = 0; i < midpoints; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : faces(m)) {
    std::vector<int> hits;
    for (int x : f) {
      if (midpoint_of[x] >= 0) hits.push_back(midpoint_of[x]);
    }
    for (std::size_t i = 0; i + 1 < hits.size(); i += 2) parent[find(hits[i])] = find(hits[i + 1]);
  }
  int roots = 0;
  for (int i = 0; i < midpoints; ++i) roots += find(i) == i;
  return roots;
}

// Circles of an augmented map: closed walks over Augment edges. Returns the
// circle id per dart (-1 on Original edges), ids in order of smallest dart.
inline std::vector<int> augment_walks(const RawMap& m, int* count = nullptr) {
  const int n = static_cast<int>(m.twin.size());
  std::vector<int> id(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (id[s] >= 0 || m.tag[s] != alternator::EdgeTag::Augment) continue;
    for (int x = s;;) {
      id[x] = id[m.twin[x]] = next;
      x = across(m.twin[x]);
      if (m.tag[x] != alternator::EdgeTag::Augment || id[x] >= 0) break;
    }
    ++next;
  }
  if (count) *count = next;
  return id;
}

inline bool augment_crossings_ok(const RawMap& m) {
  using alternator::EdgeTag;
  for (std::size_t c = 0; c < m.over.size(); ++c) {
    int aug = 0;
    for (int s = 0; s < 4; ++s) aug += m.tag[4 * c + s] == EdgeTag::Augment;
    if (aug == 4) return false;
    if (aug == 2 && m.tag[4 * c] != m.tag[4 * c + 2]) return false;
    if (aug == 1 || aug == 3) return false;
  }
  return true;
}

// Fewest Original edges crossed to get from a face touching circle `a` to
// one touching circle `b`; -1 if unreachable.
inline int dual_distance(const RawMap& m, int a, int b) {
  const auto fs = faces(m);
  const auto circle = augment_walks(m);
  std::vector<int> face_of(m.twin.size());
  for (std::size_t f = 0; f < fs.size(); ++f) {
    for (int x : fs[f]) face_of[x] = static_cast<int>(f);
  }
  auto touches = [&](std::size_t f, int c) {
    return std::any_of(fs[f].begin(), fs[f].end(), [&](int x) { return circle[x] == c; });
  };
  std::vector<int> dist(fs.size(), -1);
  std::vector<int> queue;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (touches(f, a)) {
      dist[f] = 0;
      queue.push_back(static_cast<int>(f));
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int f = queue[i];
    if (touches(f, b)) return dist[f];
    for (int x : fs[f]) {
      if (m.tag[x] != alternator::EdgeTag::Original) continue;
      const int g = face_of[m.twin[x]];
      if (dist[g] < 0) {
        dist[g] = dist[f] + 1;
        queue.push_back(g);
      }
    }
  }
  return -1;
}

}  // namespace oracle
