#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "alternator/codec.hpp"
#include "alternator/error.hpp"
#include "alternator/gen.hpp"
#include "alternator/merge.hpp"
#include "alternator/verify.hpp"

namespace alternator::cli {

namespace {

using nlohmann::ordered_json;

// Exit-code precedence: input errors, then check failures, then strict mode.
int worse(int a, int b) {
  auto rank = [](int code) {
    switch (code) {
      case 2: return 3;
      case 1: return 2;
      case 3: return 1;
      default: return 0;
    }
  };
  return rank(b) > rank(a) ? b : a;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

const char* class_word(EdgeClass k) {
  switch (k) {
    case EdgeClass::Alternating: return "alternating";
    case EdgeClass::PositiveNonAlt: return "positive";
    case EdgeClass::NegativeNonAlt: return "negative";
  }
  return "";
}

std::string signs_of(const EdgeLabelPair& p) { return {to_char(p.ends[0]), to_char(p.ends[1])}; }

int expected_for(const Diagram& original) { return is_alternating(original) ? 0 : 1; }

std::string summary(const Report& r) {
  if (r.all_pass()) return "all-pass";
  std::string s = "FAIL";
  for (const std::string& d : r.details) s += "; " + d;
  return s;
}

void label_text(const Diagram& d, std::ostream& out) {
  const ClassCounts counts = count_classes(d);
  out << "alternating: " << (counts.non_alternating() == 0 ? "true" : "false")
      << ", non-alternating edges: " << counts.non_alternating() << '\n';

  std::vector<const Edge*> by_label;
  for (const Edge& e : d.edges()) by_label.push_back(&e);
  std::sort(by_label.begin(), by_label.end(),
            [](const Edge* a, const Edge* b) { return a->label < b->label; });
  for (const Edge* e : by_label) {
    const EdgeLabelPair p = classify_edge(d, e->id);
    out << "edge " << e->label << ": " << signs_of(p) << ' ' << class_word(p.kind) << '\n';
  }
  for (const Face& f : d.faces()) {
    out << "face " << f.id << ':';
    const auto incidences = region_incidences(d, f.id);
    if (incidences.empty()) out << " (none)";
    for (const Incidence& i : incidences) out << ' ' << d.edge(i.edge).label << to_char(i.sign);
    out << '\n';
  }
}

ordered_json label_json(const Diagram& d, const std::string& input) {
  ordered_json j;
  j["input"] = input;
  const ClassCounts counts = count_classes(d);
  j["alternating"] = counts.non_alternating() == 0;
  j["non_alternating_edges"] = counts.non_alternating();
  ordered_json edges = ordered_json::array();
  for (const Edge& e : d.edges()) {
    const EdgeLabelPair p = classify_edge(d, e.id);
    edges.push_back({{"label", e.label}, {"signs", signs_of(p)}, {"class", class_word(p.kind)}});
  }
  std::sort(edges.begin(), edges.end(), [](const ordered_json& a, const ordered_json& b) {
    return a["label"].get<int>() < b["label"].get<int>();
  });
  j["edges"] = std::move(edges);
  ordered_json faces = ordered_json::array();
  for (const Face& f : d.faces()) {
    std::string signs;
    ordered_json labels = ordered_json::array();
    for (const Incidence& i : region_incidences(d, f.id)) {
      signs += to_char(i.sign);
      labels.push_back(d.edge(i.edge).label);
    }
    faces.push_back({{"id", f.id}, {"signs", signs}, {"edges", std::move(labels)}});
  }
  j["faces"] = std::move(faces);
  return j;
}

void write_dot(const AugmentedDiagram& ad, int line, std::ostream& os) {
  const Diagram& d = ad.diagram();
  os << "graph record_" << line << " {\n";
  for (CrossingId c = 0; c < d.num_crossings(); ++c) {
    os << "  c" << c << " [over=" << (d.over_axis(c) == Axis::Even ? "even" : "odd") << "];\n";
  }
  for (const Edge& e : d.edges()) {
    os << "  c" << Diagram::crossing_of(e.darts[0]) << " -- c" << Diagram::crossing_of(e.darts[1])
       << " [label=" << e.label << ", tailport=s" << Diagram::slot_of(e.darts[0])
       << ", headport=s" << Diagram::slot_of(e.darts[1]);
    if (e.tag == EdgeTag::Augment) os << ", color=red, circle=" << ad.circle_of(e.darts[0]);
    os << "];\n";
  }
  os << "}\n";
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AugmentedDiagram parse_result(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return AugmentedDiagram(parse_pd(text), std::nullopt);
}

}  // namespace

std::vector<Record> read_records(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    records.push_back({n, std::move(text)});
  }
  return records;
}

int cmd_label(std::istream& in, std::ostream& out, std::ostream& err, Format format) {
  int code = 0;
  bool first = true;
  for (const Record& r : read_records(in)) {
    try {
      const Diagram d = parse_pd(r.text, r.line);
      if (format == Format::Json) {
        out << label_json(d, r.text).dump() << '\n';
      } else {
        if (!first) out << '\n';
        label_text(d, out);
      }
      first = false;
    } catch (const Error& e) {
      err << "line " << r.line << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  return code;
}

int cmd_run(std::istream& in, std::ostream& out, std::ostream& err, const RunOptions& opts) {
  std::ofstream graph;
  if (!opts.emit_graph.empty()) {
    graph.open(opts.emit_graph);
    if (!graph) {
      err << "cannot write " << opts.emit_graph << '\n';
      return 2;
    }
  }

  int code = 0;
  for (const Record& r : read_records(in)) {
    try {
      const Diagram original = parse_pd(r.text, r.line);
      if (is_alternating(original)) {
        if (opts.strict) {
          err << "line " << r.line << ": input is already alternating\n";
          code = worse(code, 3);
          continue;
        }
        err << "line " << r.line << ": input is already alternating; passed through\n";
      }
      const AugmentedDiagram result =
          opts.no_merge ? augment_regions(original) : full_pipeline(original);

      std::optional<Report> report;
      if (opts.verify) {
        const int expected = opts.no_merge ? result.num_circles() : expected_for(original);
        report = verify(original, result, expected);
        if (!report->all_pass()) code = worse(code, 1);
      }

      if (opts.format == Format::Json) {
        ordered_json j;
        j["input"] = r.text;
        j.update(to_json(result, report ? &*report : nullptr));
        out << j.dump() << '\n';
      } else {
        out << emit_pd(result.diagram()) << '\n';
        if (report) out << "# verify: " << summary(*report) << '\n';
      }
      if (graph.is_open()) write_dot(result, r.line, graph);
    } catch (const Error& e) {
      err << "line " << r.line << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  return code;
}

int cmd_gen(int strands, int length, int count, std::uint64_t seed, std::ostream& out,
            std::ostream& err) {
  if (strands < 2 || length < strands - 1 || count < 0) {
    err << "need strands >= 2, length >= strands - 1 and count >= 0\n";
    return 2;
  }
  for (int i = 0; i < count; ++i) {
    out << emit_pd(random_diagram(strands, length, seed + static_cast<std::uint64_t>(i))) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& original, const std::string& result, std::ostream& out,
               std::ostream& err, std::optional<int> expected_circles) {
  try {
    const Diagram d = parse_pd(original);
    const AugmentedDiagram ad = parse_result(result);
    const Report report = verify(d, ad, expected_circles.value_or(expected_for(d)));
    out << report_to_json(report).dump() << '\n';
    return report.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
}

int cmd_verify_stream(std::istream& in, std::ostream& out, std::ostream& err,
                      std::optional<int> expected_circles) {
  int code = 0;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (trim(line).empty()) continue;
    try {
      const nlohmann::json doc = [&] {
        try {
          return nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::FormatError, e.what());
        }
      }();
      if (!doc.is_object() || !doc.contains("input") || !doc["input"].is_string()) {
        throw Error(ErrorCode::FormatError, "record has no \"input\"");
      }
      const Diagram d = parse_pd(doc["input"].get<std::string>());
      const Report report = verify(d, from_json(doc), expected_circles.value_or(expected_for(d)));
      out << report_to_json(report).dump() << '\n';
      if (!report.all_pass()) code = worse(code, 1);
    } catch (const Error& e) {
      err << "line " << n << ": " << e.what() << '\n';
      code = worse(code, 2);
    }
  }
  return code;
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Alternating augmentation of link projections"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"pd", Format::Pd}, {"json", Format::Json}};

  std::string label_input = "-";
  Format label_format = Format::Pd;
  auto* label = app.add_subcommand("label", "Classify edges and list face sign sequences");
  label->add_option("input", label_input, "PD file, '-' for standard input");
  label->add_option("--format", label_format, "pd (text) or json")
      ->transform(CLI::CheckedTransformer(formats));

  std::string run_input = "-";
  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Augment to an alternating projection");
  run->add_option("input", run_input, "PD file, '-' for standard input");
  run->add_flag("--no-merge", run_opts.no_merge, "Stop after the region augmentation");
  run->add_option("--format", run_opts.format, "pd or json")
      ->transform(CLI::CheckedTransformer(formats));
  run->add_flag("--verify", run_opts.verify, "Check every result; exit 1 on failure");
  run->add_flag("--strict", run_opts.strict, "Exit 3 on inputs that are already alternating");
  run->add_option("--emit-graph", run_opts.emit_graph, "Write the results as DOT graphs");

  int strands = 3;
  int length = 10;
  int count = 1;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Random braid-closure diagrams");
  gen->add_option("--strands", strands);
  gen->add_option("--length", length);
  gen->add_option("--count", count);
  gen->add_option("--seed", seed);

  std::vector<std::string> verify_files;
  std::optional<int> expected;
  auto* ver = app.add_subcommand(
      "verify", "Check a result against its original; with no files, read `run --format json` "
                "records from standard input");
  ver->add_option("files", verify_files, "ORIGINAL RESULT")->expected(0, 2);
  ver->add_option("--circles", expected, "Expected circle count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  auto with_input = [&](const std::string& path, auto&& fn) {
    if (path == "-") return fn(in);
    std::ifstream file(path);
    if (!file) {
      err << "cannot read " << path << '\n';
      return 2;
    }
    return fn(file);
  };

  if (*label) {
    return with_input(label_input, [&](std::istream& s) { return cmd_label(s, out, err, label_format); });
  }
  if (*run) {
    return with_input(run_input, [&](std::istream& s) { return cmd_run(s, out, err, run_opts); });
  }
  if (*gen) return cmd_gen(strands, length, count, seed, out, err);

  if (verify_files.empty()) return cmd_verify_stream(in, out, err, expected);
  if (verify_files.size() != 2) {
    err << "verify takes ORIGINAL and RESULT, or no files\n";
    return 2;
  }
  std::string texts[2];
  for (int k = 0; k < 2; ++k) {
    const int rc = with_input(verify_files[k], [&](std::istream& s) {
      texts[k] = slurp(s);
      return 0;
    });
    if (rc != 0) return rc;
  }
  return cmd_verify(texts[0], texts[1], out, err, expected);
}

}  // namespace alternator::cli
