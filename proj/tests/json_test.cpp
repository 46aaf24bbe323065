#include <random>

#include "doctest.h"
#include "json_io.hpp"
#include "test_util.hpp"

using namespace warrow;
namespace tu = warrow::testutil;

TEST_CASE("presentation JSON round trip is canonical") {
  std::mt19937 rng(12);
  tu::GenOptions opt;
  opt.open_strands = 3;
  opt.max_trees = 3;
  for (int i = 0; i < 30; ++i) {
    Presentation p = tu::random_presentation(rng, opt);
    Json j = presentation_to_json(p);
    Presentation q = presentation_from_json(j);
    CHECK(presentation_to_json(q) == j);
  }
}

TEST_CASE("gauss JSON and text round trips") {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    GaussCode g = tu::random_long_code(rng, 4);
    CHECK(gauss_to_json(gauss_from_json(gauss_to_json(g))) == gauss_to_json(g));
    GaussCode h = gauss_from_text(gauss_to_text(g));
    CHECK(gauss_to_json(h) == gauss_to_json(g));
  }
}

TEST_CASE("bare gauss string is one closed strand") {
  GaussCode g = gauss_from_text("O1+U1+");
  REQUIRE(g.strands.size() == 1);
  CHECK(g.strands[0].kind == StrandKind::Closed);
  REQUIRE(g.passages[0].size() == 2);
  CHECK(g.passages[0][0].over);
  CHECK(validate(g).empty());
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_WITH_AS(gauss_from_text("open: O1+X"), doctest::Contains("line 1"),
                       CalcError);
  Json bad = Json::parse(R"({"type":"presentation","strands":[{"id":0}],
      "trees":[{"head":[0,1],"root":{"kind":"leaf","twist":2,"site":[0,0]}}]})");
  CHECK_THROWS_WITH_AS(presentation_from_json(bad), doctest::Contains("twist"), CalcError);
  CHECK_THROWS_AS(parse_input("{\"type\":\"nope\"}"), CalcError);
}

TEST_CASE("parse_input dispatches by shape") {
  auto a = parse_input("closed: O1+U1+");
  CHECK(a.gauss.has_value());
  auto b = parse_input(dump_json(presentation_to_json(
      canonical_arrow_presentation(tu::trefoil_code(true)))));
  CHECK(b.presentation.has_value());
}

TEST_CASE("parse_input rejects invariant violations") {
  // two endpoints stacked on one site
  Presentation bad;
  bad.diagram = StrandDiagram::string_link(1);
  bad.trees.push_back(WTree::arrow({0, 0}, {0, 0}));
  CHECK_THROWS_WITH_AS(parse_input(dump_json(presentation_to_json(bad))),
                       doctest::Contains("site collision"), CalcError);
  // Gauss JSON with an unpaired crossing
  GaussCode g;
  g.strands = {{0, StrandKind::Open}};
  g.passages = {{{1, true, 1}}};
  CHECK_THROWS_AS(parse_input(dump_json(gauss_to_json(g))), CalcError);
}
