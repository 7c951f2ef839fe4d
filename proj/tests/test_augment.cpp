#include "doctest.h"

#include "alternator/augment.hpp"
#include "alternator/codec.hpp"
#include "alternator/error.hpp"
#include "alternator/gen.hpp"
#include "alternator/verify.hpp"
#include "oracles.hpp"

using namespace alternator;

TEST_CASE("flipped trefoil") {
  const Diagram d = parse_pd(oracle::fixture("flipped_trefoil"));
  // Hand trace: the four arcs run e4-e1, e2-e4, e5-e2 and e1-e5, one closed curve.
  REQUIRE(oracle::arc_traced_circles(d.map()) == 1);

  const AugmentedDiagram ad = augment_regions(d);
  CHECK(ad.diagram().num_crossings() == 7);
  CHECK(is_alternating(ad.diagram()));
  CHECK(ad.num_circles() == 1);
  CHECK(circles_of(ad).size() == 1);
  CHECK(ad.circles()[0].edges.size() == 4);
  CHECK(ad.stats().midpoints == 4);

  // Each face at the switched crossing sees one ++ and one -- edge.
  for (int s = 0; s < 4; ++s) {
    const auto inc = region_incidences(d, d.face_of(Diagram::dart_at(0, s)));
    REQUIRE(inc.size() == 2);
    CHECK(inc[0].sign != inc[1].sign);
  }
}

TEST_CASE("alternating input is left alone") {
  const Diagram d = parse_pd(oracle::fixture("trefoil"));
  for (const Face& f : d.faces()) CHECK(region_incidences(d, f.id).empty());
  const AugmentedDiagram ad = augment_regions(d);
  CHECK(ad.diagram() == d);
  CHECK(ad.num_circles() == 0);
  CHECK(circles_of(ad).empty());
}

TEST_CASE("granny") {
  const Diagram d = parse_pd(oracle::fixture("granny"));
  const ClassCounts c = count_classes(d);
  CHECK(c.positive == 1);
  CHECK(c.negative == 1);
  const AugmentedDiagram ad = augment_regions(d);
  CHECK(ad.diagram().num_crossings() == 8);
  REQUIRE(ad.num_circles() == 1);
  CHECK(ad.circles()[0].edges.size() == 2);
}

TEST_CASE("augmentation over a random corpus") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Diagram d = random_diagram(4, 24, seed);
    const AugmentedDiagram ad = augment_regions(d);
    const RawMap& m = ad.diagram().map();
    const int non_alt = oracle::non_alternating(d.map());

    CHECK(oracle::alternating(m));
    CHECK(ad.diagram().num_crossings() == d.num_crossings() + non_alt);
    CHECK(oracle::euler(m) == 2);
    CHECK(oracle::augment_crossings_ok(m));
    CHECK(ad.num_circles() == oracle::arc_traced_circles(d.map()));
    CHECK(circles_of(ad).size() == static_cast<std::size_t>(ad.num_circles()));
    CHECK(restriction(ad).map() == d.map());

    int mixed = 0;
    for (std::size_t c = 0; c < m.over.size(); ++c) {
      int aug = 0;
      for (int s = 0; s < 4; ++s) aug += m.tag[4 * c + s] == EdgeTag::Augment;
      mixed += aug == 2;
    }
    CHECK(mixed == non_alt);
  }
}

TEST_CASE("circles_of rejects crossing circles") {
  const std::vector<CrossingTuple> t{{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}};
  std::map<int, EdgeTag> tags;
  for (int l = 1; l <= 6; ++l) tags[l] = EdgeTag::Augment;
  const AugmentedDiagram ad(build_diagram(t, tags), std::nullopt);
  try {
    circles_of(ad);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CircleNotSimple);
  }
}
