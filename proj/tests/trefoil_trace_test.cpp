#include "doctest.h"
#include "classify.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "moves.hpp"
#include "test_util.hpp"

using namespace warrow;
namespace tu = warrow::testutil;

namespace {

const LaurentPoly kTrefoilPoly = LaurentPoly::term(1, 1) + LaurentPoly::term(-1, 0) +
                                 LaurentPoly::term(1, -1);

}  // namespace

TEST_CASE("a move trace rewrites the trefoil presentation in place") {
  Presentation p = canonical_arrow_presentation(tu::trefoil_code(true));
  REQUIRE(alexander_normalized(p).poly == kTrefoilPoly);

  // exchange the head at position 1 with the tail at position 2, commute two
  // tails, then walk the exchanged head across the isolated pair it created
  std::vector<MoveSpec> steps;
  MoveSpec ht;
  ht.kind = MoveKind::HeadTailExchange;
  ht.strand = 0;
  ht.pos = 1;
  steps.push_back(ht);

  TraceResult first = trace(p, steps);
  CHECK(first.log.size() == 1);
  CHECK(alexander_normalized(first.presentation).poly == kTrefoilPoly);

  // keep rewriting with whatever exact moves exist; the class never moves
  std::mt19937 rng(107);
  Presentation cur = first.presentation;
  for (int step = 0; step < 6; ++step) {
    auto m = tu::random_exact_move(rng, cur);
    REQUIRE(m.has_value());
    cur = apply(cur, *m);
    CHECK(alexander_normalized(cur).poly == kTrefoilPoly);
  }
}

TEST_CASE("the trefoil admits a two-tree presentation: one arrow, one degree-2 tree") {
  // kink arrow at the start, then a degree-2 tree whose tails straddle its head
  Presentation p;
  p.diagram = StrandDiagram::string_link(1);
  p.trees.push_back(WTree::arrow({0, 0}, {0, 1}));
  WTree t;
  WTreeNode a, b;
  a.site = {0, 2};
  b.site = {0, 4};
  t.nodes = {a, b};
  WTreeNode v;
  v.first = 0;
  v.second = 1;
  t.nodes.push_back(v);
  t.root = 2;
  t.head = {0, 3};
  p.trees.push_back(t);
  REQUIRE(validate(p).empty());
  CHECK(alexander_normalized(p).poly == kTrefoilPoly);
  CHECK(wk_normal_form(p, 4).exponents == std::vector<long long>{1, 1, 1});

  // the kink factor alone is the unknot
  Presentation arrow_only = p;
  arrow_only.trees.pop_back();
  scale_positions(arrow_only);
  renumber_sites(arrow_only);
  CHECK(alexander_normalized(arrow_only).poly == LaurentPoly(1));

  // and in fact a single straddling degree-2 tree already carries the
  // trefoil polynomial
  Presentation tree_only = p;
  tree_only.trees.erase(tree_only.trees.begin());
  scale_positions(tree_only);
  renumber_sites(tree_only);
  CHECK(alexander_normalized(tree_only).poly == kTrefoilPoly);
}
