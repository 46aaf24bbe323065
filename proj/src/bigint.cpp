#include "bigint.hpp"

#include <algorithm>

namespace warrow {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // avoid UB on LLONG_MIN
  uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  while (u) {
    mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void BigInt::divrem_mag(const std::vector<uint32_t>& num, const std::vector<uint32_t>& den,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (den.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(num, den) < 0) {
    q.clear();
    r = num;
    return;
  }
  if (den.size() == 1) {
    uint64_t d = den[0];
    q.assign(num.size(), 0);
    uint64_t rem = 0;
    for (size_t i = num.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | num[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // Knuth algorithm D with normalization.
  int shift = 0;
  uint32_t top = den.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  auto shl = [&](const std::vector<uint32_t>& v) {
    std::vector<uint32_t> out(v.size() + 1, 0);
    uint32_t carry = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      out[i] = (v[i] << shift) | carry;
      carry = shift ? static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift)) : 0;
    }
    out[v.size()] = carry;
    return out;
  };
  std::vector<uint32_t> u = shl(num);
  std::vector<uint32_t> v = shl(den);
  while (!v.empty() && v.back() == 0) v.pop_back();
  size_t n = v.size(), m = u.size() - n;
  q.assign(m, 0);
  const uint64_t vtop = v[n - 1];
  const uint64_t vsec = n >= 2 ? v[n - 2] : 0;
  for (size_t j = m; j-- > 0;) {
    uint64_t hi = u[j + n];
    uint64_t lo = u[j + n - 1];
    uint64_t qhat = (hi * kBase + lo) / vtop;
    uint64_t rhat = (hi * kBase + lo) % vtop;
    if (qhat >= kBase) qhat = kBase - 1, rhat = hi * kBase + lo - qhat * vtop;
    while (rhat < kBase && qhat * vsec > rhat * kBase + (n >= 2 ? u[j + n - 2] : 0)) {
      --qhat;
      rhat += vtop;
    }
    // multiply-subtract
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (d < 0) {
        d += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(d);
    }
    int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (d < 0) {
      // qhat was one too large; add back
      d += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      d += static_cast<int64_t>(c2);
      d &= static_cast<int64_t>(kBase) - 1;
    }
    u[j + n] = static_cast<uint32_t>(d);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // denormalize remainder
  r.assign(u.begin(), u.begin() + n);
  if (shift) {
    uint32_t carry = 0;
    for (size_t i = r.size(); i-- > 0;) {
      uint32_t cur = r[i];
      r[i] = (cur >> shift) | carry;
      carry = static_cast<uint32_t>(static_cast<uint64_t>(cur) << (32 - shift));
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t v = (static_cast<uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= 0x7fffffffffffffffull;
  return v <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value exceeds int64");
  uint64_t v = 0;
  if (mag_.size() >= 1) v = mag_[0];
  if (mag_.size() >= 2) v |= static_cast<uint64_t>(mag_[1]) << 32;
  if (sign_ < 0) return static_cast<long long>(~v + 1);
  return static_cast<long long>(v);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.mag_.empty()) out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.sign_ == b.sign_) {
    out.sign_ = a.sign_;
    out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.sign_ = a.sign_;
      out.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      out.sign_ = b.sign_;
      out.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  if (a.is_zero() || b.is_zero()) return out;
  out.sign_ = a.sign_ * b.sign_;
  out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  out.trim();
  return out;
}

void BigInt::divrem(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divrem_mag(num.mag_, den.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = num.signum() * den.signum() >= 0 ? 1 : -1;
  r.sign_ = num.sign_;
  q.trim();
  r.trim();
}

BigInt BigInt::divexact(const BigInt& den) const {
  BigInt q, r;
  divrem(*this, den, q, r);
  if (!r.is_zero()) throw std::domain_error("BigInt: inexact division");
  return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.sign_ = 1;
  b.sign_ = 1;
  while (!b.is_zero()) {
    BigInt q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.signum() == b.signum() && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.signum() != b.signum()) return a.signum() < b.signum();
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  return a.signum() >= 0 ? c < 0 : c > 0;
}

}  // namespace warrow
