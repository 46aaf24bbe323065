#include <random>

#include "doctest.h"
#include "classify.hpp"
#include "expand.hpp"
#include "group.hpp"
#include "milnor.hpp"
#include "test_util.hpp"

using namespace warrow;
namespace tu = warrow::testutil;

namespace {

// Lone random tree; long knot when strands == 1, string link otherwise.
Presentation lone_random_tree(std::mt19937& rng, int strands, int degree) {
  tu::GenOptions opt;
  opt.open_strands = strands;
  opt.min_trees = 1;
  opt.max_trees = 1;
  opt.max_degree = degree;
  for (;;) {
    Presentation p = tu::random_presentation(rng, opt);
    if (p.trees[0].degree() == degree) return p;
  }
}

bool trivial_invariants(const Presentation& p) {
  if (p.diagram.strands.size() == 1)
    return alexander_normalized(p).poly == LaurentPoly(1);
  int n = static_cast<int>(p.diagram.strands.size());
  for (const auto& [key, v] : milnor_all_nonrepeated(p, n)) {
    (void)key;
    if (v != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("deleting any tail group of a lone tree trivializes the surgery") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    int strands = 1 + trial % 3;
    int degree = 2 + trial % 3;
    Presentation p = lone_random_tree(rng, strands, degree);
    for (int tail = 0; tail < degree; ++tail) {
      Presentation q = delete_tail_group(p, 0, tail);
      CHECK(validate(q).empty());
      CHECK(trivial_invariants(q));
    }
  }
}

TEST_CASE("degree-3 tree on a long knot: every tail deletion gives polynomial 1") {
  std::mt19937 rng(103);
  Presentation p = lone_random_tree(rng, 1, 3);
  for (int tail = 0; tail < 3; ++tail) {
    Presentation q = delete_tail_group(p, 0, tail);
    CHECK(alexander_normalized(q).poly == LaurentPoly(1));
  }
}
