#include "laurent.hpp"

#include <stdexcept>

namespace warrow {

LaurentPoly LaurentPoly::term(long long c, int exp) {
  LaurentPoly p;
  p.set(exp, BigInt(c));
  return p;
}

void LaurentPoly::set(int exp, BigInt c) {
  if (c.is_zero())
    terms_.erase(exp);
  else
    terms_[exp] = std::move(c);
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt() : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero has no min_exp");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("LaurentPoly: zero has no max_exp");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.set(e, out.coeff(e) + c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.set(e, out.coeff(e) - c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int e = ea + eb;
      out.set(e, out.coeff(e) + ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e + d] = c;
  return out;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BigInt LaurentPoly::derivative_at_one() const {
  BigInt s;
  for (const auto& [e, c] : terms_) s += BigInt(e) * c;
  return s;
}

namespace {

// Dense polynomial view with exponent offset zero; coefficients ascending.
struct Dense {
  std::vector<BigInt> c;
  int deg() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  int lo = p.min_exp(), hi = p.max_exp();
  d.c.assign(hi - lo + 1, BigInt());
  for (const auto& [e, coef] : p.terms()) d.c[e - lo] = coef;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly p;
  for (size_t i = 0; i < d.c.size(); ++i) p.set(static_cast<int>(i) + shift, d.c[i]);
  return p;
}

BigInt content(const Dense& d) {
  BigInt g;
  for (const auto& x : d.c) {
    if (!x.is_zero()) g = BigInt::gcd(g, x);
    if (g == BigInt(1)) break;
  }
  return g;
}

Dense divide_by_content(const Dense& d, const BigInt& g) {
  Dense out = d;
  for (auto& x : out.c)
    if (!x.is_zero()) x = x.divexact(g);
  return out;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Dense prem(Dense a, const Dense& b) {
  const BigInt lc = b.c.back();
  int db = b.deg();
  while (a.deg() >= db && !a.c.empty()) {
    BigInt top = a.c.back();
    int shift = a.deg() - db;
    for (auto& x : a.c) x *= lc;
    for (int i = 0; i <= db; ++i) a.c[i + shift] -= top * b.c[i];
    a.trim();
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::divexact(const LaurentPoly& den) const {
  if (den.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  Dense num = to_dense(*this);
  Dense d = to_dense(den);
  int shift = min_exp() - den.min_exp();
  std::vector<BigInt> q(num.c.size() - d.c.size() + 1, BigInt());
  const BigInt lc = d.c.back();
  while (num.deg() >= d.deg() && !num.c.empty()) {
    BigInt qc = num.c.back().divexact(lc);
    int pos = num.deg() - d.deg();
    q[pos] = qc;
    for (int i = 0; i <= d.deg(); ++i) num.c[i + pos] -= qc * d.c[i];
    num.trim();
  }
  if (!num.c.empty()) throw std::domain_error("LaurentPoly: inexact division");
  Dense qd{std::move(q)};
  qd.trim();
  return from_dense(qd, shift);
}

LaurentPoly LaurentPoly::unit_canonical() const {
  if (is_zero()) return *this;
  LaurentPoly out = shifted(-min_exp());
  if (out.terms_.begin()->second.signum() < 0) out = -out;
  return out;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.unit_canonical();
  if (b.is_zero()) return a.unit_canonical();
  Dense da = to_dense(a);
  Dense db = to_dense(b);
  BigInt ca = content(da), cb = content(db);
  Dense pa = divide_by_content(da, ca);
  Dense pb = divide_by_content(db, cb);
  if (pa.deg() < pb.deg()) std::swap(pa, pb);
  // primitive polynomial remainder sequence
  while (!pb.c.empty()) {
    Dense r = prem(pa, pb);
    if (!r.c.empty()) r = divide_by_content(r, content(r));
    pa = std::move(pb);
    pb = std::move(r);
  }
  BigInt cg = BigInt::gcd(ca, cb);
  for (auto& x : pa.c) x *= cg;
  return from_dense(pa, 0).unit_canonical();
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::domain_error("LaurentPoly: negative power");
  LaurentPoly out(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt ac = c.abs();
    if (first) {
      if (c.signum() < 0) s += "-";
      first = false;
    } else {
      s += c.signum() < 0 ? " - " : " + ";
    }
    std::string mag = ac.to_string();
    if (e == 0) {
      s += mag;
    } else {
      if (mag != "1") s += mag + "*";
      s += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  return s;
}

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = v.divexact(prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace warrow
