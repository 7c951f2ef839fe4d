#pragma once

// Text formats.
//
// PD text: a sequence of crossings X[a,b,c,d], separated by any mix of
// whitespace and commas. Labels are listed counterclockwise; the strand
// through a and c passes under, the one through b and d over. An optional
// trailing block A{...} lists the labels of augmenting edges, one
// semicolon-separated group per circle. '#' starts a comment that runs to
// the end of the line.
//
// JSON: see docs/json-format.md. Documents carry "format": "alternator/1".

#include <string>
#include <string_view>

#include "json.hpp"

#include "alternator/augment.hpp"
#include "alternator/verify.hpp"

namespace alternator {

inline constexpr std::string_view kJsonFormat = "alternator/1";

/// Throws ParseError (SyntaxError, DuplicateLabelArity, Disconnected,
/// NonPlanar). `first_line` offsets reported line numbers.
Diagram parse_pd(std::string_view text, int first_line = 1);

/// Canonical PD text. Edges are relabelled 1..2N along strands, starting each
/// strand at its smallest unlabelled dart; every crossing is written from its
/// lower-numbered under slot.
std::string emit_pd(const Diagram& d);

nlohmann::ordered_json report_to_json(const Report& r);
nlohmann::ordered_json to_json(const AugmentedDiagram& ad, const Report* report = nullptr);

std::string emit_json(const AugmentedDiagram& ad, const Report* report = nullptr);
std::string emit_json(const Diagram& d, const Report* report = nullptr);

/// Rebuilds the map, provenance and move counts. Derived sections (faces,
/// classification, circles, report) are ignored. Throws Error(FormatError).
AugmentedDiagram from_json(const nlohmann::json& doc);
AugmentedDiagram parse_json(std::string_view text);

}  // namespace alternator
