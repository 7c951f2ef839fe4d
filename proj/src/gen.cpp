#include "alternator/gen.hpp"

#include <map>
#include <numeric>
#include <random>

#include "alternator/error.hpp"

namespace alternator {

bool BraidWord::valid() const {
  if (strands < 2) return false;
  std::vector<char> used(strands, 0);
  for (const BraidLetter& l : letters) {
    if (l.generator < 1 || l.generator >= strands) return false;
    used[l.generator] = 1;
  }
  for (int g = 1; g < strands; ++g) {
    if (!used[g]) return false;
  }
  return true;
}

Diagram braid_closure(const BraidWord& word) {
  if (!word.valid()) throw Error(ErrorCode::InvalidArgument, "braid word is not valid");

  // cur[p] is the label of the edge hanging below position p so far. The
  // edges leaving the top of the braid are labelled 0 .. strands-1.
  std::vector<int> cur(word.strands);
  std::iota(cur.begin(), cur.end(), 0);
  int next_label = word.strands;

  std::vector<CrossingTuple> tuples;
  tuples.reserve(word.letters.size());
  for (const BraidLetter& l : word.letters) {
    const int left = l.generator - 1;
    const int right = l.generator;
    const int below_left = next_label++;
    const int below_right = next_label++;
    // Counterclockwise from the upper-right: NE, NW, SW, SE. The strands run
    // NW-SE (slots 1/3) and NE-SW (slots 0/2).
    tuples.push_back({{cur[right], cur[left], below_left, below_right},
                      l.positive ? Axis::Odd : Axis::Even});
    cur[left] = below_left;
    cur[right] = below_right;
  }

  // Closing arcs identify the bottom of each position with its top, then
  // labels are renumbered 1..2N in order of first appearance.
  std::map<int, int> closing;
  for (int p = 0; p < word.strands; ++p) closing[cur[p]] = p;
  std::map<int, int> renumber;
  for (auto& t : tuples) {
    for (int& label : t.labels) {
      if (const auto it = closing.find(label); it != closing.end()) label = it->second;
      const auto [it, inserted] = renumber.try_emplace(label, static_cast<int>(renumber.size()) + 1);
      label = it->second;
    }
  }
  return build_diagram(tuples);
}

BraidWord random_word(int strands, int length, std::uint64_t seed) {
  if (strands < 2 || length < strands - 1) {
    throw Error(ErrorCode::InvalidArgument, "need strands >= 2 and length >= strands - 1");
  }
  // Raw engine output only: distribution objects are not portable.
  std::mt19937_64 rng(seed);
  auto below = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

  std::vector<int> positions(length);
  std::iota(positions.begin(), positions.end(), 0);
  for (int i = length - 1; i > 0; --i) std::swap(positions[i], positions[below(i + 1)]);

  BraidWord w{strands, std::vector<BraidLetter>(length)};
  for (int i = 0; i < length; ++i) {
    w.letters[i] = {1 + below(strands - 1), below(2) == 0};
  }
  for (int g = 1; g < strands; ++g) w.letters[positions[g - 1]].generator = g;
  return w;
}

Diagram random_diagram(int strands, int length, std::uint64_t seed) {
  return braid_closure(random_word(strands, length, seed));
}

WordStream::WordStream(int strands, int length) : strands_(strands), digits_(length, 0) {
  if (strands < 2 || length < 1) done_ = true;
}

std::optional<BraidWord> WordStream::next_word() {
  const int alphabet = 2 * (strands_ - 1);
  while (!done_) {
    BraidWord w{strands_, {}};
    for (int digit : digits_) w.letters.push_back({1 + digit / 2, digit % 2 == 0});

    int pos = static_cast<int>(digits_.size()) - 1;
    while (pos >= 0 && ++digits_[pos] == alphabet) digits_[pos--] = 0;
    if (pos < 0) done_ = true;

    if (w.valid()) return w;
  }
  return std::nullopt;
}

std::optional<Diagram> WordStream::next() {
  auto w = next_word();
  if (!w) return std::nullopt;
  return braid_closure(*w);
}

WordStream enumerate_words(int strands, int length) { return WordStream(strands, length); }

}  // namespace alternator
