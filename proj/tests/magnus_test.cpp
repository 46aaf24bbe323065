#include <random>

#include "doctest.h"
#include "magnus.hpp"

using namespace warrow;

namespace {

FreeWord random_word(std::mt19937& rng, int vars, int len) {
  FreeWord w;
  std::uniform_int_distribution<int> g(0, vars - 1);
  std::uniform_int_distribution<int> s(0, 1);
  for (int i = 0; i < len; ++i) w.push(g(rng), s(rng) ? 1 : -1);
  return w;
}

}  // namespace

TEST_CASE("generator expansions") {
  TruncatedSeries g = TruncatedSeries::generator(1, 2, 3);
  CHECK(g.coefficient({}) == 1);
  CHECK(g.coefficient({1}) == 1);
  CHECK(g.coefficient({2}) == 0);

  FreeWord cancel = FreeWord::generator(0);
  cancel.append(FreeWord::generator(0, -1));
  CHECK(magnus(cancel, 2, 4) == TruncatedSeries::one(2, 4));

  TruncatedSeries inv = TruncatedSeries::generator_inverse(1, 1, 4);
  CHECK(inv.coefficient({1, 1}) == 1);
  CHECK(inv.coefficient({1, 1, 1}) == -1);
  CHECK((TruncatedSeries::generator(1, 1, 4) * inv) == TruncatedSeries::one(1, 4));
}

TEST_CASE("commutator expansion to degree two") {
  // m1 m2^-1 m1^-1 m2
  FreeWord w = FreeWord::generator(0);
  w.append(FreeWord::generator(1, -1));
  w.append(FreeWord::generator(0, -1));
  w.append(FreeWord::generator(1));
  TruncatedSeries s = magnus(w, 2, 2);
  CHECK(s.coefficient({}) == 1);
  CHECK(s.coefficient({1}) == 0);
  CHECK(s.coefficient({2}) == 0);
  CHECK(s.coefficient({1, 2}) == -1);
  CHECK(s.coefficient({2, 1}) == 1);
  CHECK(s.to_string() == "1 - X1X2 + X2X1");
}

TEST_CASE("the expansion is a homomorphism") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    FreeWord u = random_word(rng, 3, 6);
    FreeWord v = random_word(rng, 3, 6);
    FreeWord uv = u;
    uv.append(v);
    CHECK(magnus(uv, 3, 4) == magnus(u, 3, 4) * magnus(v, 3, 4));
    CHECK(magnus(u, 3, 4) * magnus(u.inverse(), 3, 4) == TruncatedSeries::one(3, 4));
  }
}

TEST_CASE("series inverse really inverts") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    TruncatedSeries s = magnus(random_word(rng, 3, 5), 3, 4);
    CHECK(s * s.inverse() == TruncatedSeries::one(3, 4));
    CHECK(s.inverse() * s == TruncatedSeries::one(3, 4));
  }
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(TruncatedSeries::generator(0, 2, 3), CalcError);
  CHECK_THROWS_AS(TruncatedSeries(2, 0), CalcError);
  TruncatedSeries s = TruncatedSeries::one(2, 2);
  CHECK_THROWS_AS(s.coefficient({1, 2, 1}), CalcError);
}
