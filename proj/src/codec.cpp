#include "alternator/codec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "alternator/error.hpp"

namespace alternator {

namespace {

struct Location {
  int line;
  int column;
};

class PdParser {
 public:
  PdParser(std::string_view text, int first_line) : text_(text), line_(first_line) {}

  Diagram parse() {
    skip_separators();
    bool annotated = false;
    while (!eof()) {
      if (peek() == 'X') {
        if (annotated) fail(ErrorCode::SyntaxError, "crossing after the A{...} block");
        parse_crossing();
      } else if (peek() == 'A') {
        if (annotated) fail(ErrorCode::SyntaxError, "second A{...} block");
        parse_annotation();
        annotated = true;
      } else {
        fail(ErrorCode::SyntaxError, std::string("expected 'X[' but found '") + peek() + "'");
      }
      skip_separators();
    }
    if (tuples_.empty()) fail(ErrorCode::SyntaxError, "no crossings");

    std::map<int, std::vector<Location>> seen;
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
      for (int s = 0; s < 4; ++s) seen[tuples_[i].labels[s]].push_back(label_locations_[4 * i + s]);
    }
    for (const auto& [label, where] : seen) {
      if (where.size() != 2) {
        throw ParseError(ErrorCode::DuplicateLabelArity,
                         "label " + std::to_string(label) + " occurs " +
                             std::to_string(where.size()) + " times, expected 2",
                         where.front().line, where.front().column);
      }
    }
    for (const auto& [label, where] : augment_) {
      if (!seen.contains(label)) {
        throw ParseError(ErrorCode::SyntaxError,
                         "A{...} names label " + std::to_string(label) + " not used by any crossing",
                         where.line, where.column);
      }
    }

    std::map<int, EdgeTag> tags;
    for (const auto& entry : augment_) tags[entry.first] = EdgeTag::Augment;
    try {
      return build_diagram(tuples_, tags);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), e.what(), first_crossing_.line, first_crossing_.column);
    }
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  Location here() const { return {line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw ParseError(code, message, line_, column_);
  }

  void skip_space() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void skip_separators() {
    skip_space();
    while (!eof() && peek() == ',') {
      advance();
      skip_space();
    }
  }

  void expect(char c) {
    skip_space();
    if (eof()) fail(ErrorCode::SyntaxError, std::string("expected '") + c + "' before end of input");
    if (peek() != c) {
      fail(ErrorCode::SyntaxError, std::string("expected '") + c + "' but found '" + peek() + "'");
    }
    advance();
  }

  int parse_int() {
    skip_space();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(ErrorCode::SyntaxError, "expected a positive integer label");
    }
    long value = 0;
    int digits = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (++digits > 9) fail(ErrorCode::SyntaxError, "label too large");
      value = value * 10 + (peek() - '0');
      advance();
    }
    return static_cast<int>(value);
  }

  void parse_crossing() {
    if (tuples_.empty()) first_crossing_ = here();
    advance();  // X
    expect('[');
    CrossingTuple t{{}, Axis::Odd};
    for (int s = 0; s < 4; ++s) {
      if (s > 0) expect(',');
      skip_space();
      label_locations_.push_back(here());
      t.labels[s] = parse_int();
    }
    expect(']');
    tuples_.push_back(t);
  }

  void parse_annotation() {
    advance();  // A
    expect('{');
    skip_space();
    if (!eof() && peek() == '}') {
      advance();
      return;
    }
    while (true) {
      skip_space();
      const Location at = here();
      const int label = parse_int();
      if (!augment_.emplace(label, at).second) {
        throw ParseError(ErrorCode::SyntaxError,
                         "label " + std::to_string(label) + " repeated in A{...}", at.line,
                         at.column);
      }
      skip_space();
      if (eof()) fail(ErrorCode::SyntaxError, "unterminated A{...} block");
      if (peek() == ',' || peek() == ';') {
        advance();
        continue;
      }
      expect('}');
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
  std::vector<CrossingTuple> tuples_;
  std::vector<Location> label_locations_;
  std::map<int, Location> augment_;
  Location first_crossing_{0, 0};
};

const char* class_name(EdgeClass k) {
  switch (k) {
    case EdgeClass::Alternating: return "alternating";
    case EdgeClass::PositiveNonAlt: return "positive";
    case EdgeClass::NegativeNonAlt: return "negative";
  }
  return "";
}

const char* tag_name(EdgeTag t) { return t == EdgeTag::Original ? "original" : "augment"; }

[[noreturn]] void format_error(const std::string& message) {
  throw Error(ErrorCode::FormatError, message);
}

}  // namespace

Diagram parse_pd(std::string_view text, int first_line) {
  return PdParser(text, first_line).parse();
}

std::string emit_pd(const Diagram& d) {
  std::vector<int> label(d.num_edges(), 0);
  int next = 1;
  for (DartId start = 0; start < d.num_darts(); ++start) {
    for (DartId x = start; label[d.edge_of(x)] == 0; x = Diagram::opposite(d.twin(x))) {
      label[d.edge_of(x)] = next++;
    }
  }

  std::ostringstream os;
  for (CrossingId c = 0; c < d.num_crossings(); ++c) {
    const int first = d.over_axis(c) == Axis::Odd ? 0 : 1;
    os << (c ? " " : "") << "X[";
    for (int k = 0; k < 4; ++k) {
      os << (k ? "," : "") << label[d.edge_of(Diagram::dart_at(c, (first + k) % 4))];
    }
    os << ']';
  }

  std::vector<std::vector<int>> groups;
  for (const StrandWalk& w : strand_components(d, TagFilter::Augment)) {
    std::vector<int> g;
    for (DartId x : w.darts) g.push_back(label[d.edge_of(x)]);
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end());
  os << " A{";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < groups[i].size(); ++j) os << (j ? "," : "") << groups[i][j];
  }
  os << '}';
  return os.str();
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["all_pass"] = r.all_pass();
  j["alternating"] = r.alternating;
  j["planar"] = r.planar;
  j["connected"] = r.connected;
  j["circle_count"] = r.circle_count;
  j["expected_circles"] = r.expected_circles;
  j["circle_simple"] = r.circle_simple;
  j["restriction_ok"] = r.restriction_ok;
  j["crossing_accounting_ok"] = r.crossing_accounting_ok;
  j["details"] = r.details;
  return j;
}

nlohmann::ordered_json to_json(const AugmentedDiagram& ad, const Report* report) {
  using nlohmann::ordered_json;
  const Diagram& d = ad.diagram();
  const auto& prov = ad.provenance();

  ordered_json doc;
  doc["format"] = kJsonFormat;
  doc["has_provenance"] = prov.has_value();

  ordered_json crossings = ordered_json::array();
  for (CrossingId c = 0; c < d.num_crossings(); ++c) {
    ordered_json x;
    x["id"] = c;
    x["rotation"] = {Diagram::dart_at(c, 0), Diagram::dart_at(c, 1), Diagram::dart_at(c, 2),
                     Diagram::dart_at(c, 3)};
    x["over_axis"] = static_cast<int>(d.over_axis(c));
    if (prov && prov->crossing_origin[c]) {
      x["origin"] = *prov->crossing_origin[c];
    } else {
      x["origin"] = nullptr;
    }
    crossings.push_back(std::move(x));
  }
  doc["crossings"] = std::move(crossings);

  ordered_json edges = ordered_json::array();
  for (const Edge& e : d.edges()) {
    ordered_json x;
    x["id"] = e.id;
    x["label"] = e.label;
    x["ends"] = ordered_json::array();
    for (DartId t : e.darts) x["ends"].push_back({Diagram::crossing_of(t), Diagram::slot_of(t)});
    x["tag"] = tag_name(e.tag);
    if (prov && prov->edge_origin[e.id]) {
      x["origin"] = *prov->edge_origin[e.id];
    } else {
      x["origin"] = nullptr;
    }
    const int circle = ad.circle_of(e.darts[0]);
    if (circle >= 0) {
      x["circle"] = circle;
    } else {
      x["circle"] = nullptr;
    }
    edges.push_back(std::move(x));
  }
  doc["edges"] = std::move(edges);

  ordered_json faces = ordered_json::array();
  for (const Face& f : d.faces()) faces.push_back(f.darts);
  doc["faces"] = std::move(faces);

  ordered_json classes = ordered_json::array();
  for (EdgeId e = 0; e < d.num_edges(); ++e) {
    const EdgeLabelPair p = classify_edge(d, e);
    ordered_json x;
    x["edge"] = e;
    x["signs"] = std::string{to_char(p.ends[0]), to_char(p.ends[1])};
    x["class"] = class_name(p.kind);
    classes.push_back(std::move(x));
  }
  doc["classification"] = std::move(classes);

  ordered_json circles = ordered_json::array();
  for (const Circle& c : ad.circles()) {
    ordered_json x;
    x["id"] = c.id;
    x["edges"] = c.edges;
    x["closed"] = c.closed;
    circles.push_back(std::move(x));
  }
  doc["circles"] = std::move(circles);

  doc["stats"] = {{"midpoints", ad.stats().midpoints},
                  {"type_i", ad.stats().type_i},
                  {"type_ii", ad.stats().type_ii}};
  if (report) doc["report"] = report_to_json(*report);
  return doc;
}

std::string emit_json(const AugmentedDiagram& ad, const Report* report) {
  return to_json(ad, report).dump();
}

std::string emit_json(const Diagram& d, const Report* report) {
  return emit_json(AugmentedDiagram(d, std::nullopt), report);
}

AugmentedDiagram from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != kJsonFormat) {
      format_error("missing or unknown \"format\"");
    }
    const bool has_prov = doc.at("has_provenance").get<bool>();
    const auto& crossings = doc.at("crossings");
    const auto& edges = doc.at("edges");

    RawMap m;
    Provenance prov;
    const std::size_t v = crossings.size();
    m.over.resize(v);
    m.twin.assign(4 * v, -1);
    m.tag.assign(4 * v, EdgeTag::Original);
    m.label.assign(4 * v, 0);
    for (std::size_t c = 0; c < v; ++c) {
      const auto& x = crossings[c];
      if (x.at("id").get<std::size_t>() != c) format_error("crossings out of order");
      const int axis = x.at("over_axis").get<int>();
      if (axis != 0 && axis != 1) format_error("over_axis must be 0 or 1");
      m.over[c] = static_cast<Axis>(axis);
      if (x.at("origin").is_null()) {
        prov.crossing_origin.emplace_back();
      } else {
        prov.crossing_origin.emplace_back(x.at("origin").get<int>());
      }
    }

    std::map<DartId, std::optional<int>> origin_by_dart;
    for (const auto& x : edges) {
      const auto& ends = x.at("ends");
      if (ends.size() != 2) format_error("an edge needs two ends");
      std::array<DartId, 2> darts{};
      for (int k = 0; k < 2; ++k) {
        const int c = ends[k].at(0).get<int>();
        const int s = ends[k].at(1).get<int>();
        if (c < 0 || c >= static_cast<int>(v) || s < 0 || s > 3) format_error("edge end out of range");
        darts[k] = Diagram::dart_at(c, s);
        if (m.twin[darts[k]] != -1) format_error("dart used by two edges");
      }
      if (darts[0] == darts[1]) format_error("edge joins a dart to itself");
      const std::string tag = x.at("tag").get<std::string>();
      if (tag != "original" && tag != "augment") format_error("unknown tag " + tag);
      const std::optional<int> origin =
          x.at("origin").is_null() ? std::nullopt : std::optional<int>(x.at("origin").get<int>());
      for (int k = 0; k < 2; ++k) {
        m.twin[darts[k]] = darts[1 - k];
        m.tag[darts[k]] = tag == "original" ? EdgeTag::Original : EdgeTag::Augment;
        m.label[darts[k]] = x.at("label").get<int>();
      }
      origin_by_dart[std::min(darts[0], darts[1])] = origin;
    }

    Diagram d = Diagram::from_map(std::move(m));
    for (const Edge& e : d.edges()) prov.edge_origin.push_back(origin_by_dart.at(e.darts[0]));

    MoveStats stats;
    if (doc.contains("stats")) {
      const auto& st = doc.at("stats");
      stats.midpoints = st.at("midpoints").get<int>();
      stats.type_i = st.at("type_i").get<int>();
      stats.type_ii = st.at("type_ii").get<int>();
    }
    return AugmentedDiagram(std::move(d), has_prov ? std::optional(std::move(prov)) : std::nullopt,
                            stats);
  } catch (const nlohmann::json::exception& e) {
    format_error(e.what());
  }
}

AugmentedDiagram parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    format_error(e.what());
  }
  return from_json(doc);
}

}  // namespace alternator
