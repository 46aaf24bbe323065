#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace warrow {

// Arbitrary-precision signed integer; coefficient type for the exact Laurent
// arithmetic. Magnitude is stored as base-2^32 limbs, least significant first,
// with no trailing zero limbs; zero has an empty magnitude.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return mag_.empty(); }
  int signum() const { return mag_.empty() ? 0 : sign_; }

  bool fits_int64() const;
  long long to_int64() const;
  std::string to_string() const;

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division, |r| < |den|, sign(r) = sign(num).
  static void divrem(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);
  // Division known to be exact; throws std::domain_error on a nonzero remainder.
  BigInt divexact(const BigInt& den) const;

  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b);

 private:
  int sign_ = 1;  // meaningful only when mag_ is nonempty
  std::vector<uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divrem_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace warrow
