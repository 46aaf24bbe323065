#include <random>
#include "doctest.h"
#include "freeword.hpp"

using namespace warrow;

TEST_CASE("words stay reduced") {
  FreeWord w;
  w.push(0, 1);
  w.push(0, -1);
  CHECK(w.empty());
  w.push(1, 1);
  w.push(2, 1);
  w.push(2, -1);
  w.push(1, -1);
  CHECK(w.empty());
}

TEST_CASE("commutator spells a b^-1 a^-1 b") {
  FreeWord a = FreeWord::generator(0);
  FreeWord b = FreeWord::generator(1);
  FreeWord c = FreeWord::commutator(a, b);
  CHECK(c.to_string() == "x0 x1^-1 x0^-1 x1");
  FreeWord cc = c;
  cc.append(c.inverse());
  CHECK(cc.empty());
}

TEST_CASE("bracket word identities behind the exchange moves") {
  // random words A, B
  std::mt19937 rng(113);
  std::uniform_int_distribution<int> g(0, 2), s(0, 1);
  auto rand_word = [&]() {
    FreeWord w;
    for (int i = 0; i < 5; ++i) w.push(g(rng), s(rng) ? 1 : -1);
    return w;
  };
  auto mul = [](std::initializer_list<FreeWord> ws) {
    FreeWord out;
    for (const auto& w : ws) out.append(w);
    return out;
  };
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord a = rand_word(), b = rand_word();
    FreeWord ab = mul({a, b});
    // exchanging heads: A B = B [B^-1, A^-1] A
    CHECK(ab == mul({b, FreeWord::commutator(b.inverse(), a.inverse()), a}));
    // variants
    CHECK(ab == mul({b, FreeWord::commutator(a, b).inverse(), a}));
    CHECK(ab == mul({b, a, FreeWord::commutator(a.inverse(), b)}));
    CHECK(ab == mul({FreeWord::commutator(a, b.inverse()), b, a}));
    // vertex flip: [B, A] = [A^-1, B^-1]^-1
    CHECK(FreeWord::commutator(b, a) ==
          FreeWord::commutator(a.inverse(), b.inverse()).inverse());
  }
}

TEST_CASE("conjugation and exponent sums") {
  FreeWord u = FreeWord::generator(0);
  u.append(FreeWord::generator(1, -1));
  FreeWord m = FreeWord::generator(2);
  FreeWord conj = u.conjugate_of(m);  // u^-1 m u
  CHECK(conj.to_string() == "x1 x0^-1 x2 x0 x1^-1");
  CHECK(conj.exponent_sum(2) == 1);
  CHECK(conj.exponent_sum(0) == 0);
  CHECK(FreeWord::commutator(u, m).exponent_sum(0) == 0);
}
