#pragma once

// Subcommands of the `alternator` tool. Each takes its streams explicitly and
// returns the process exit code:
//   0 success, 1 a verification check failed, 2 input error,
//   3 --strict and an input was already alternating.
// When several records disagree, 2 wins over 1, and 1 over 3.
//
// Text input is one record per line. Blank lines and lines holding only a
// '#' comment are skipped.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace alternator::cli {

enum class Format { Pd, Json };

struct Record {
  int line;          // 1-based line number in the input
  std::string text;  // the line, trimmed
};

std::vector<Record> read_records(std::istream& in);

int cmd_label(std::istream& in, std::ostream& out, std::ostream& err, Format format);

struct RunOptions {
  bool no_merge = false;
  bool verify = false;
  bool strict = false;
  Format format = Format::Pd;
  std::string emit_graph;  // DOT output path, empty for none
};

int cmd_run(std::istream& in, std::ostream& out, std::ostream& err, const RunOptions& opts);

int cmd_gen(int strands, int length, int count, std::uint64_t seed, std::ostream& out,
            std::ostream& err);

/// `result` is PD text or a JSON document (recognised by a leading '{').
/// Expected circles default to 0 for alternating originals and 1 otherwise.
int cmd_verify(const std::string& original, const std::string& result, std::ostream& out,
               std::ostream& err, std::optional<int> expected_circles = std::nullopt);

/// JSON lines as written by `run --format json`; each record is checked
/// against its own "input".
int cmd_verify_stream(std::istream& in, std::ostream& out, std::ostream& err,
                      std::optional<int> expected_circles = std::nullopt);

/// Parses argv with CLI11 and dispatches. Files named "-" mean `in`.
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace alternator::cli
