#pragma once

#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace warrow {

// Exact integer Laurent polynomial in one variable t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c) { set(0, BigInt(c)); }
  static LaurentPoly term(long long c, int exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }
  void set(int exp, BigInt c);
  BigInt coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shifted(int d) const;  // multiply by t^d

  BigInt eval_at_one() const;
  BigInt derivative_at_one() const;

  // Division known to be exact in Z[t, t^-1]; throws on failure.
  LaurentPoly divexact(const LaurentPoly& den) const;

  // Greatest common divisor, canonicalized up to units: min exponent 0 and
  // positive lowest coefficient.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly unit_canonical() const;

  // x^k for k >= 0.
  LaurentPoly pow(int k) const;

  std::string to_string() const;  // sparse c*t^e form, ascending exponents

 private:
  std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient
};

// Fraction-free determinant (Bareiss) of a square matrix over Z[t, t^-1].
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace warrow
