#include <random>

#include "doctest.h"
#include "classify.hpp"
#include "moves.hpp"
#include "test_util.hpp"

using namespace warrow;
namespace tu = warrow::testutil;

TEST_CASE("generator guards") {
  CHECK_THROWS_AS(make_Lk(1, false), CalcError);
  CHECK_THROWS_AS(make_TI({1, 1}, 2, false), CalcError);
  CHECK_THROWS_AS(make_TI({1, 3}, 2, false), CalcError);
  CHECK_THROWS_AS(make_TI({1}, 2, false), CalcError);
}

TEST_CASE("wk normal form: pinned examples") {
  Presentation unknot;
  unknot.diagram = StrandDiagram::string_link(1);
  LongKnotNormalForm nf = wk_normal_form(unknot, 5);
  CHECK(nf.exponents == std::vector<long long>{0, 0, 0, 0});
  CHECK(nf.representative.trees.empty());

  LongKnotNormalForm l3 = wk_normal_form(make_Lk(3, false), 5);
  CHECK(l3.exponents == std::vector<long long>{0, 1, 0, 0});

  Presentation trefoil = canonical_arrow_presentation(tu::trefoil_code(true));
  LongKnotNormalForm t = wk_normal_form(trefoil, 4);
  CHECK(t.exponents == std::vector<long long>{1, 1, 1});
  CHECK(validate(t.representative).empty());

  // representative realizes the same coefficients
  auto a = alpha_coeffs(alexander_normalized(trefoil).poly, 4);
  auto b = alpha_coeffs(alexander_normalized(t.representative).poly, 4);
  CHECK(a == b);
}

TEST_CASE("wk decisions") {
  CHECK(!decide_wk(make_Lk(2, false), make_Lk(2, true), 2).equal);
  CHECK(decide_wk(make_Lk(2, false), make_Lk(2, true), 2).witness == 2);

  Presentation trefoil = canonical_arrow_presentation(tu::trefoil_code(true));
  CHECK(decide_wk(trefoil, trefoil, 6).equal);

  Presentation prod = concat(concat(make_Lk(2, false), make_Lk(3, false)),
                             make_Lk(4, false));
  CHECK(decide_wk(trefoil, prod, 4).equal);
  // the product polynomial has no u^8 term, so they first differ at alpha_8
  CHECK(decide_wk(trefoil, prod, 7).equal);
  WkDecision d8 = decide_wk(trefoil, prod, 8);
  CHECK(!d8.equal);
  CHECK(d8.witness == 8);
  CHECK(decide_wk(trefoil, prod, 8, /*include_top=*/false).equal);
}

TEST_CASE("wk normal form is stable under exact moves") {
  std::mt19937 rng(61);
  tu::GenOptions opt;
  opt.open_strands = 1;
  opt.max_trees = 2;
  opt.max_expanded = 14;
  int done = 0;
  while (done < 20) {
    Presentation p = tu::random_presentation(rng, opt);
    auto m = tu::random_exact_move(rng, p);
    if (!m) continue;
    Presentation q = apply(p, *m);
    CHECK(wk_normal_form(p, 4).exponents == wk_normal_form(q, 4).exponents);
    ++done;
  }
}

TEST_CASE("homotopy reduction") {
  Presentation p;
  p.diagram = StrandDiagram::string_link(2);
  p.trees.push_back(WTree::arrow({0, 0}, {0, 1}));
  p.trees.push_back(WTree::arrow({1, 0}, {1, 1}));
  CHECK(homotopy_reduce(p).trees.empty());

  Presentation ti = make_TI({1, 2, 3}, 3, false);
  CHECK(homotopy_reduce(ti).trees.size() == 1);

  // mixed: the repeated tree goes, non-repeated invariants stay
  Presentation mixed = make_TI({1, 2}, 2, false);
  mixed.trees.push_back(WTree::arrow({0, 1}, {0, 2}));
  auto before = milnor_all_nonrepeated(mixed, 2);
  Presentation red = homotopy_reduce(mixed);
  CHECK(red.trees.size() == 1);
  CHECK(milnor_all_nonrepeated(red, 2) == before);
}

TEST_CASE("homotopy normal form: pinned examples") {
  Presentation trivial;
  trivial.diagram = StrandDiagram::string_link(3);
  StringLinkNormalForm nf0 = homotopy_normal_form(trivial);
  for (const auto& [key, v] : nf0.exponents) {
    (void)key;
    CHECK(v == 0);
  }
  CHECK(nf0.representative.trees.empty());

  StringLinkNormalForm nf = homotopy_normal_form(make_TI({1, 2}, 2, false));
  CHECK(nf.exponents.at("12") == 1);
  CHECK(nf.exponents.at("21") == 0);
  CHECK(nf.representative.trees.size() == 1);
}

TEST_CASE("homotopy normal form matches all non-repeated invariants") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    tu::GenOptions opt;
    opt.open_strands = 2 + trial % 2;
    opt.max_trees = 3;
    opt.max_expanded = 18;
    Presentation p = tu::random_presentation(rng, opt);
    StringLinkNormalForm nf = homotopy_normal_form(p);
    int n = opt.open_strands;
    CHECK(validate(nf.representative).empty());
    CHECK(milnor_all_nonrepeated(p, n) == milnor_all_nonrepeated(nf.representative, n));
    // idempotence
    StringLinkNormalForm again = homotopy_normal_form(nf.representative);
    CHECK(again.exponents == nf.exponents);
  }
}

TEST_CASE("homotopy decisions") {
  Presentation a = make_TI({1, 2}, 2, false);
  Presentation b = make_TI({1, 2}, 2, true);
  HomotopyDecision d = decide_homotopy(a, b);
  CHECK(!d.equal);
  CHECK(d.witness == "12");
  CHECK(decide_homotopy(a, a).equal);
  StringLinkNormalForm nf = homotopy_normal_form(a);
  CHECK(decide_homotopy(a, nf.representative).equal);

  Presentation c;
  c.diagram = StrandDiagram::string_link(3);
  CHECK_THROWS_AS(decide_homotopy(a, c), CalcError);
}
