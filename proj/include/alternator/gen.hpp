#pragma once

// Connected test diagrams from braid closures.

#include <cstdint>
#include <optional>
#include <vector>

#include "alternator/diagram.hpp"

namespace alternator {

struct BraidLetter {
  int generator;  // 1 .. strands - 1
  bool positive;  // positive letters put the strand from upper-left over

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  /// strands >= 2, generators in range, and every generator used.
  bool valid() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Closes the braid around its right-hand side. One crossing per letter.
/// Throws InvalidArgument for invalid words.
Diagram braid_closure(const BraidWord& word);

/// Deterministic for a given (strands, length, seed) on every platform.
BraidWord random_word(int strands, int length, std::uint64_t seed);
Diagram random_diagram(int strands, int length, std::uint64_t seed);

/// All valid words of exactly `length` letters, in lexicographic order over
/// the alphabet (1,+) < (1,-) < (2,+) < ...
class WordStream {
 public:
  WordStream(int strands, int length);

  std::optional<BraidWord> next_word();
  std::optional<Diagram> next();

 private:
  int strands_;
  std::vector<int> digits_;  // letter index per position, 2 * (generator - 1) + sign
  bool done_ = false;
};

WordStream enumerate_words(int strands, int length);

}  // namespace alternator
