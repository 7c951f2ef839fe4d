#include "alternator/verify.hpp"

#include <string>

#include "alternator/error.hpp"

namespace alternator {

namespace {

bool is_plus(const RawMap& m, DartId x) {
  return (x % 4) % 2 == static_cast<int>(m.over[x / 4]);
}

int original_ends(const RawMap& m, CrossingId c) {
  int n = 0;
  for (int s = 0; s < 4; ++s) n += m.tag[4 * c + s] == EdgeTag::Original;
  return n;
}

bool opposite_pair_original(const RawMap& m, CrossingId c) {
  const bool even = m.tag[4 * c] == EdgeTag::Original && m.tag[4 * c + 2] == EdgeTag::Original;
  const bool odd = m.tag[4 * c + 1] == EdgeTag::Original && m.tag[4 * c + 3] == EdgeTag::Original;
  return even != odd;
}

int count_non_alternating(const RawMap& m) {
  int n = 0;
  for (DartId x = 0; x < static_cast<int>(m.twin.size()); ++x) {
    if (x < m.twin[x] && is_plus(m, x) == is_plus(m, m.twin[x])) ++n;
  }
  return n;
}

}  // namespace

Diagram restriction(const AugmentedDiagram& ad) {
  const Diagram& d = ad.diagram();
  const RawMap& m = d.map();
  const int v = d.num_crossings();
  const auto& prov = ad.provenance();

  // Original crossings keep all four ends; transit crossings keep exactly
  // one strand.
  std::vector<int> new_index(v, -1);
  std::vector<char> transit(v, 0);
  int kept = 0;
  for (CrossingId c = 0; c < v; ++c) {
    const int ends = original_ends(m, c);
    if (ends == 4) {
      ++kept;
    } else if (ends == 2 && opposite_pair_original(m, c)) {
      transit[c] = 1;
    } else {
      throw Error(ErrorCode::DegreeViolation, "crossing " + std::to_string(c) + " keeps " +
                                                  std::to_string(ends) +
                                                  " original ends in a non-strand pattern");
    }
  }
  if (kept == 0) throw Error(ErrorCode::DegreeViolation, "no original crossing survives");

  int next_index = 0;
  for (CrossingId c = 0; c < v; ++c) {
    if (transit[c]) continue;
    if (prov) {
      const auto& origin = prov->crossing_origin[c];
      if (!origin || *origin < 0 || *origin >= kept || new_index[c] >= 0) {
        throw Error(ErrorCode::DegreeViolation,
                    "crossing " + std::to_string(c) + " has no usable origin");
      }
      new_index[c] = *origin;
    } else {
      new_index[c] = next_index++;
    }
  }
  std::vector<char> index_used(kept, 0);
  for (CrossingId c = 0; c < v; ++c) {
    if (transit[c]) continue;
    if (index_used[new_index[c]]) {
      throw Error(ErrorCode::DegreeViolation, "two crossings share an origin");
    }
    index_used[new_index[c]] = 1;
  }

  RawMap out;
  out.over.assign(kept, Axis::Even);
  out.twin.assign(4 * kept, -1);
  out.tag.assign(4 * kept, EdgeTag::Original);
  out.label.assign(4 * kept, 0);
  int pieces_seen = 0;
  for (CrossingId c = 0; c < v; ++c) {
    if (transit[c]) continue;
    out.over[new_index[c]] = m.over[c];
    for (int s = 0; s < 4; ++s) {
      const DartId start = 4 * c + s;
      std::optional<int> origin;
      if (prov) origin = prov->edge_origin[d.edge_of(start)];
      DartId x = m.twin[start];
      ++pieces_seen;
      while (transit[x / 4]) {
        const DartId through = Diagram::opposite(x);
        x = m.twin[through];
        ++pieces_seen;
        if (prov && prov->edge_origin[d.edge_of(through)] != origin) {
          throw Error(ErrorCode::DegreeViolation,
                      "strand through crossing " + std::to_string(through / 4) +
                          " mixes pieces of different edges");
        }
      }
      const DartId from = 4 * new_index[c] + s;
      const DartId to = 4 * new_index[x / 4] + x % 4;
      out.twin[from] = to;
      if (prov) {
        if (!origin) {
          throw Error(ErrorCode::DegreeViolation,
                      "original edge at dart " + std::to_string(start) + " has no origin");
        }
        out.label[from] = *origin;
      } else {
        out.label[from] = std::min(m.label[start], m.label[x]);
      }
    }
  }

  int original_darts = 0;
  for (EdgeTag t : m.tag) original_darts += t == EdgeTag::Original;
  // Each piece of every fused chain was counted once from each end.
  if (pieces_seen != original_darts) {
    throw Error(ErrorCode::DegreeViolation, "original strands that avoid every original crossing");
  }
  return Diagram::from_map(std::move(out));
}

Report verify(const Diagram& original, const AugmentedDiagram& result, int expected_circles) {
  Report r;
  r.expected_circles = expected_circles;
  const RawMap& m = result.diagram().map();
  const int v = static_cast<int>(m.over.size());
  const int n = static_cast<int>(m.twin.size());

  r.alternating = true;
  for (DartId x = 0; x < n; ++x) {
    if (is_plus(m, x) == is_plus(m, m.twin[x])) {
      r.alternating = false;
      r.details.push_back("edge at dart " + std::to_string(x) + " is not alternating");
      break;
    }
  }

  {
    std::vector<char> seen(n, 0);
    int faces = 0;
    for (DartId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++faces;
      for (DartId x = s; !seen[x]; x = Diagram::next(m.twin[x])) seen[x] = 1;
    }
    const int euler = v - n / 2 + faces;
    r.planar = euler == 2;
    if (!r.planar) r.details.push_back("Euler characteristic " + std::to_string(euler));
  }

  {
    std::vector<char> seen(v, 0);
    std::vector<CrossingId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const CrossingId c = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        const CrossingId w = m.twin[4 * c + s] / 4;
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    r.connected = reached == v;
    if (!r.connected) r.details.push_back("diagram is disconnected");
  }

  {
    r.circle_simple = true;
    for (CrossingId c = 0; c < v; ++c) {
      const int augment_ends = 4 - original_ends(m, c);
      const bool ok = augment_ends == 0 || (augment_ends == 2 && opposite_pair_original(m, c));
      if (!ok) {
        r.circle_simple = false;
        r.details.push_back("crossing " + std::to_string(c) + " has " +
                            std::to_string(augment_ends) + " augmenting ends");
      }
    }
    std::vector<char> seen(n, 0);
    for (DartId s = 0; s < n; ++s) {
      if (seen[s] || m.tag[s] != EdgeTag::Augment) continue;
      ++r.circle_count;
      DartId x = s;
      while (!seen[x]) {
        seen[x] = 1;
        seen[m.twin[x]] = 1;
        x = Diagram::opposite(m.twin[x]);
        if (m.tag[x] != EdgeTag::Augment) {
          r.circle_simple = false;
          r.details.push_back("augmenting strand from dart " + std::to_string(s) + " is open");
          break;
        }
      }
    }
    if (r.circle_count != expected_circles) {
      r.details.push_back("circle count " + std::to_string(r.circle_count) + ", expected " +
                          std::to_string(expected_circles));
    }
  }

  try {
    const Diagram restricted = restriction(result);
    if (result.provenance()) {
      r.restriction_ok = restricted.map() == original.map();
    } else {
      r.restriction_ok = isomorphic(restricted, original);
    }
    if (!r.restriction_ok) r.details.push_back("restriction differs from the original diagram");
  } catch (const Error& e) {
    r.restriction_ok = false;
    r.details.push_back(std::string("restriction failed: ") + e.what());
  }

  {
    const int added = v - original.num_crossings();
    const int non_alt = count_non_alternating(original.map());
    if (result.provenance()) {
      const MoveStats& st = result.stats();
      r.crossing_accounting_ok = st.midpoints == non_alt && added == non_alt + 2 * st.type_ii;
    } else {
      r.crossing_accounting_ok = added >= non_alt && (added - non_alt) % 2 == 0;
    }
    if (!r.crossing_accounting_ok) {
      r.details.push_back(std::to_string(added) + " crossings added for " +
                          std::to_string(non_alt) + " non-alternating edges and " +
                          std::to_string(result.stats().type_ii) + " pushes");
    }
  }
  return r;
}

}  // namespace alternator
