// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "alternator/codec.hpp"
#include "alternator/error.hpp"
#include "alternator/gen.hpp"
#include "alternator/merge.hpp"
#include "alternator/moves.hpp"
#include "alternator/verify.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace alternator;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
};

bool report(int n, const char* title, Result& r) {
  std::cout << (r.pass ? "PASS" : "FAIL") << " [" << n << "] " << title << ": " << r.note.str()
            << std::endl;
  return r.pass;
}

const char* const kFixtures[] = {"flipped_trefoil", "granny", "doubled_granny",
                                 "8_19",            "8_20",   "8_21"};

// The exhaustive 3-strand universe up to length 6 and 1000 random 4-strand
// words of length 30.
std::vector<Diagram> corpus() {
  std::vector<Diagram> out;
  for (int length = 1; length <= 6; ++length) {
    WordStream s = enumerate_words(3, length);
    while (auto d = s.next()) out.push_back(std::move(*d));
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) out.push_back(random_diagram(4, 30, seed));
  return out;
}

void region_alternation(Result& r) {
  const auto t0 = Clock::now();
  const std::vector<Diagram> all = corpus();
  long faces = 0;
  for (const Diagram& d : all) {
    try {
      for (const Face& f : d.faces()) {
        const auto inc = region_incidences(d, f.id);
        int plus = 0;
        for (std::size_t i = 0; i < inc.size(); ++i) {
          plus += inc[i].sign == Sign::Plus;
          if (inc[i].sign == inc[(i + 1) % inc.size()].sign) r.fail("adjacent equal signs");
        }
        if (2 * plus != static_cast<int>(inc.size())) r.fail("unequal counts");
        ++faces;
      }
    } catch (const Error& e) {
      r.fail(e.what());
    }
    if (!oracle::regions_alternate(d.map())) r.fail("oracle disagrees: " + emit_pd(d));
  }
  const double secs = seconds_since(t0);
  if (secs >= 30) r.fail("took " + std::to_string(secs) + " s");
  r.note << all.size() << " diagrams, " << faces << " faces, " << secs << " s";
}

void construction(Result& r) {
  const std::vector<Diagram> all = corpus();
  int non_alt = 0;
  for (const Diagram& d : all) {
    try {
      const AugmentedDiagram ad = augment_regions(d);
      const int expected = d.num_crossings() + oracle::non_alternating(d.map());
      if (!is_alternating(ad.diagram()) || !oracle::alternating(ad.diagram().map())) {
        r.fail("not alternating: " + emit_pd(d));
      }
      if (ad.diagram().num_crossings() != expected) r.fail("crossing count: " + emit_pd(d));
      non_alt += !is_alternating(d);
    } catch (const Error& e) {
      r.fail(e.what());
    }
  }
  r.note << all.size() << " diagrams (" << non_alt << " non-alternating) alternating with exact counts";
}

void check_move(Result& r, const Diagram& original, const AugmentedDiagram& out) {
  const RawMap& m = out.diagram().map();
  if (!oracle::alternating(m)) r.fail("alternation lost");
  if (oracle::euler(m) != 2) r.fail("Euler characteristic");
  if (!oracle::augment_crossings_ok(m)) r.fail("augmenting circles cross");
  try {
    circles_of(out);
    if (restriction(out).map() != original.map()) r.fail("restriction changed");
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

std::vector<MoveSite> push_sites(const AugmentedDiagram& ad) {
  std::vector<MoveSite> sites;
  for (const Face& f : ad.diagram().faces()) {
    for (DartId x : f.darts) {
      if (ad.circle_of(x) < 0) continue;
      for (DartId y : f.darts) {
        if (ad.diagram().tag_of(y) == EdgeTag::Original) sites.push_back({f.id, x, y});
      }
    }
  }
  return sites;
}

std::vector<MoveSite> band_sites(const AugmentedDiagram& ad) {
  std::vector<MoveSite> sites;
  for (const Face& f : ad.diagram().faces()) {
    for (DartId x : f.darts) {
      for (DartId y : f.darts) {
        const int cx = ad.circle_of(x);
        const int cy = ad.circle_of(y);
        if (cx >= 0 && cy >= 0 && cx != cy) sites.push_back({f.id, x, y});
      }
    }
  }
  return sites;
}

void moves(Result& r) {
  std::mt19937_64 rng(2024);
  int type_i = 0;
  int type_ii = 0;
  int no_assignment = 0;
  int by_assignment[4] = {0, 0, 0, 0};

  auto push = [&](const Diagram& d, const AugmentedDiagram& ad) -> std::optional<AugmentedDiagram> {
    const auto sites = push_sites(ad);
    if (sites.empty()) return std::nullopt;
    try {
      const PushResult p = type_ii_push(ad, sites[rng() % sites.size()]);
      if (p.diagram.diagram().num_crossings() != ad.diagram().num_crossings() + 2) {
        r.fail("push did not add two crossings");
      }
      if (p.diagram.num_circles() != ad.num_circles()) r.fail("push changed the circle count");
      check_move(r, d, p.diagram);
      ++by_assignment[p.assignment];
      return p.diagram;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoAlternatingAssignment) ++no_assignment;
      r.fail(e.what());
      return std::nullopt;
    }
  };

  for (std::uint64_t seed = 0; type_i < 500 || type_ii < 500; ++seed) {
    const Diagram d = random_diagram(4, 30, seed);
    AugmentedDiagram ad = augment_regions(d);
    if (ad.num_circles() == 0) continue;

    // Up to three successive pushes, so later sites sit on pushed fingers.
    for (int k = 0; k < 3 && type_ii < 500; ++k) {
      auto next = push(d, ad);
      if (!next) break;
      ad = std::move(*next);
      ++type_ii;
    }

    if (type_i >= 500) continue;
    const auto sites = band_sites(ad);
    if (sites.empty()) continue;
    try {
      const AugmentedDiagram out = type_i_merge(ad, sites[rng() % sites.size()]);
      if (out.diagram().num_crossings() != ad.diagram().num_crossings()) {
        r.fail("band merge changed the crossing count");
      }
      if (out.num_circles() != ad.num_circles() - 1) r.fail("band merge did not join two circles");
      check_move(r, d, out);
    } catch (const Error& e) {
      r.fail(e.what());
    }
    ++type_i;
  }
  if (no_assignment != 0) r.fail("NoAlternatingAssignment fired");
  r.note << type_i << " Type I, " << type_ii << " Type II sites; NoAlternatingAssignment "
         << no_assignment << "; assignments used";
  for (int k = 0; k < 4; ++k) r.note << ' ' << k << ':' << by_assignment[k];
}

void pipeline(Result& r) {
  std::vector<std::pair<std::string, Diagram>> inputs;
  for (const char* name : kFixtures) inputs.emplace_back(name, parse_pd(oracle::fixture(name)));
  for (Diagram& d : corpus()) {
    if (!is_alternating(d)) inputs.emplace_back("", std::move(d));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    inputs.emplace_back("", random_diagram(5, 100, seed));
  }

  double slowest = 0;
  int max_crossings = 0;
  long pushes = 0;
  for (const auto& [name, d] : inputs) {
    const std::string id = name.empty() ? emit_pd(d) : name;
    if (is_alternating(d)) {
      r.fail("alternating input " + id);
      continue;
    }
    try {
      const auto t0 = Clock::now();
      const AugmentedDiagram out = full_pipeline(d);
      const double secs = seconds_since(t0);
      slowest = std::max(slowest, secs);
      if (secs >= 1.0 && d.num_crossings() <= 100) r.fail("slow: " + id);
      max_crossings = std::max(max_crossings, d.num_crossings());
      pushes += out.stats().type_ii;

      const RawMap& m = out.diagram().map();
      int circles = 0;
      oracle::augment_walks(m, &circles);
      if (!oracle::alternating(m)) r.fail("not alternating: " + id);
      if (circles != 1) r.fail("circle count: " + id);
      if (!oracle::augment_crossings_ok(m)) r.fail("augment crossing: " + id);
      if (restriction(out).map() != d.map()) r.fail("restriction: " + id);
      const int expected =
          d.num_crossings() + oracle::non_alternating(d.map()) + 2 * out.stats().type_ii;
      if (out.diagram().num_crossings() != expected) r.fail("crossing accounting: " + id);
      if (!verify(d, out, 1).all_pass()) r.fail("verify: " + id);
    } catch (const Error& e) {
      r.fail(id + ": " + e.what());
    }
  }
  r.note << inputs.size() << " diagrams up to " << max_crossings << " crossings, " << pushes
         << " pushes, slowest " << slowest << " s";
}

void tampering(Result& r) {
  std::mt19937_64 rng(77);
  int caught = 0;
  int tries = 0;
  for (std::uint64_t seed = 0; tries < 100; ++seed) {
    const Diagram d = seed < 6 ? parse_pd(oracle::fixture(kFixtures[seed]))
                               : random_diagram(4, 30, seed);
    const AugmentedDiagram out = full_pipeline(d);
    if (!verify(d, out, 1).all_pass()) {
      r.fail("untampered output fails");
      continue;
    }
    const Diagram& g = out.diagram();
    const bool toggle = rng() % 2 == 0;
    const Diagram bad = toggle ? g.with_toggled_axis(static_cast<int>(rng() % g.num_crossings()))
                               : g.with_flipped_tag(static_cast<int>(rng() % g.num_edges()));
    ++tries;
    if (!verify(d, out.with_diagram(bad), 1).all_pass()) {
      ++caught;
    } else {
      r.fail(std::string(toggle ? "axis toggle" : "tag flip") + " missed");
    }
  }
  r.note << caught << "/" << tries << " detected";
}

std::string run_in_process(const std::string& input, cli::Format format) {
  std::istringstream in(input);
  std::ostringstream out, err;
  cli::RunOptions opts;
  opts.verify = true;
  opts.format = format;
  cli::cmd_run(in, out, err, opts);
  return out.str();
}

std::string run_process(const std::string& args) {
  std::string out;
  FILE* p = popen((std::string(ALTERNATOR_BIN) + " " + args).c_str(), "r");
  if (!p) return "popen failed";
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  pclose(p);
  return out;
}

void determinism(Result& r) {
  std::ostringstream gen_a, gen_b, err;
  cli::cmd_gen(4, 30, 200, 12345, gen_a, err);
  cli::cmd_gen(4, 30, 200, 12345, gen_b, err);
  if (gen_a.str() != gen_b.str()) r.fail("gen output differs");

  std::string input = gen_a.str();
  for (const char* name : kFixtures) input += oracle::fixture(name);
  for (cli::Format f : {cli::Format::Pd, cli::Format::Json}) {
    if (run_in_process(input, f) != run_in_process(input, f)) r.fail("run output differs");
  }

  // Separate processes.
  const std::string gen_args = "gen --strands 4 --length 30 --count 50 --seed 9";
  if (run_process(gen_args) != run_process(gen_args)) r.fail("gen differs across processes");
  for (const char* name : kFixtures) {
    const std::string args =
        std::string("run --verify --format json ") + FIXTURE_DIR + "/" + name + ".pd";
    const std::string a = run_process(args);
    if (a.empty() || a != run_process(args)) r.fail(std::string("run differs across processes: ") + name);
  }
  r.note << "gen and run byte-identical in process and across processes";
}

}  // namespace

int main() {
  bool ok = true;
  struct Criterion {
    const char* title;
    void (*fn)(Result&);
  };
  const Criterion criteria[] = {
      {"region alternation", region_alternation},
      {"augmentation is alternating with exact crossing count", construction},
      {"Type I and Type II moves preserve the invariants", moves},
      {"full pipeline yields one circle and a passing certificate", pipeline},
      {"tampering is detected", tampering},
      {"determinism", determinism},
  };
  int n = 1;
  for (const Criterion& c : criteria) {
    Result r;
    try {
      c.fn(r);
    } catch (const std::exception& e) {
      r.fail(e.what());
    }
    ok = report(n++, c.title, r) && ok;
  }
  return ok ? 0 : 1;
}
