#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "laurent.hpp"

using namespace warrow;

TEST_CASE("BigInt arithmetic against native 128-bit") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000007LL, 1000000007LL);
  for (int i = 0; i < 2000; ++i) {
    long long a = dist(rng), b = dist(rng);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    __int128 prod = static_cast<__int128>(a) * b;
    BigInt p = BigInt(a) * BigInt(b);
    __int128 back = 0;
    bool neg = p.signum() < 0;
    // reconstruct through the decimal form
    for (char c : p.to_string())
      if (c != '-') back = back * 10 + (c - '0');
    if (neg) back = -back;
    CHECK(back == prod);
    if (b != 0) {
      BigInt q, r;
      BigInt::divrem(BigInt(a), BigInt(b), q, r);
      CHECK(q.to_int64() == a / b);
      CHECK(r.to_int64() == a % b);
    }
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_int64() == std::gcd(a, b));
  }
}

TEST_CASE("BigInt multi-limb division round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(1, 1LL << 62);
  for (int i = 0; i < 300; ++i) {
    BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
    BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
    if (i % 2) a = -a;
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
  }
}

TEST_CASE("Laurent basics and printing") {
  LaurentPoly p = LaurentPoly::term(1, 1) + LaurentPoly::term(-1, 0) +
                  LaurentPoly::term(1, -1);  // t - 1 + t^-1
  CHECK(p.eval_at_one() == BigInt(1));
  CHECK(p.derivative_at_one() == BigInt(0));
  CHECK(p.to_string() == "t^-1 - 1 + t");
  CHECK((p * LaurentPoly(1)) == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("Laurent exact division and gcd") {
  LaurentPoly u = LaurentPoly(1) - LaurentPoly::term(1, 1);  // 1-t
  LaurentPoly a = u.pow(3) * LaurentPoly::term(2, -2);
  LaurentPoly b = u.pow(5) * LaurentPoly::term(3, 4);
  CHECK(a.divexact(u.pow(3)) == LaurentPoly::term(2, -2));
  LaurentPoly g = LaurentPoly::gcd(a, b);
  // canonical unit form of (1-t)^3 has positive lowest coefficient
  CHECK(g == u.pow(3).unit_canonical());
  CHECK_THROWS(a.divexact(u.pow(4)));
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(-1, 1);
  auto rand_poly = [&]() {
    LaurentPoly p;
    for (int i = 0; i < 2; ++i) p += LaurentPoly::term(coef(rng), expo(rng));
    return p;
  };
  std::function<LaurentPoly(const std::vector<std::vector<LaurentPoly>>&)> cofactor =
      [&](const std::vector<std::vector<LaurentPoly>>& m) -> LaurentPoly {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly det;
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<LaurentPoly>> sub;
      for (size_t i = 1; i < n; ++i) {
        std::vector<LaurentPoly> row;
        for (size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[i][k]);
        sub.push_back(row);
      }
      LaurentPoly term = m[0][j] * cofactor(sub);
      det = j % 2 ? det - term : det + term;
    }
    return det;
  };
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 1 + trial % 4;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = rand_poly();
    CHECK(laurent_det(m) == cofactor(m));
  }
}
