#include "magnus.hpp"

#include <algorithm>

namespace warrow {

TruncatedSeries::TruncatedSeries(int vars, int max_degree) : vars_(vars), k_(max_degree) {
  if (max_degree < 1) throw CalcError(ErrorKind::Usage, "truncation degree must be >= 1");
  if (vars < 1) throw CalcError(ErrorKind::Usage, "variable count must be >= 1");
}

TruncatedSeries TruncatedSeries::one(int vars, int max_degree) {
  TruncatedSeries s(vars, max_degree);
  s.c_[""] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator(int i, int vars, int max_degree) {
  if (i < 1 || i > vars) throw CalcError(ErrorKind::Usage, "variable index out of range");
  TruncatedSeries s = one(vars, max_degree);
  s.c_[std::string(1, static_cast<char>(i))] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generator_inverse(int i, int vars, int max_degree) {
  if (i < 1 || i > vars) throw CalcError(ErrorKind::Usage, "variable index out of range");
  TruncatedSeries s(vars, max_degree);
  long long sign = 1;
  std::string w;
  for (int d = 0; d <= max_degree; ++d) {
    s.c_[w] = sign;
    sign = -sign;
    w.push_back(static_cast<char>(i));
  }
  return s;
}

long long TruncatedSeries::checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("TruncatedSeries: coefficient overflow");
  return r;
}

long long TruncatedSeries::checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("TruncatedSeries: coefficient overflow");
  return r;
}

void TruncatedSeries::add_term(const std::string& w, long long v) {
  if (v == 0) return;
  auto it = c_.find(w);
  if (it == c_.end()) {
    c_[w] = v;
  } else {
    it->second = checked_add(it->second, v);
    if (it->second == 0) c_.erase(it);
  }
}

long long TruncatedSeries::coefficient(const std::vector<int>& word) const {
  std::string w;
  for (int i : word) {
    if (i < 1 || i > vars_) throw CalcError(ErrorKind::Usage, "variable index out of range");
    w.push_back(static_cast<char>(i));
  }
  if (static_cast<int>(w.size()) > k_)
    throw CalcError(ErrorKind::Usage, "word longer than truncation degree");
  auto it = c_.find(w);
  return it == c_.end() ? 0 : it->second;
}

void TruncatedSeries::set_coefficient(const std::vector<int>& word, long long v) {
  std::string w;
  for (int i : word) w.push_back(static_cast<char>(i));
  if (v == 0)
    c_.erase(w);
  else
    c_[w] = v;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(a.vars_, a.k_);
  for (const auto& [wa, ca] : a.c_) {
    int room = a.k_ - static_cast<int>(wa.size());
    for (const auto& [wb, cb] : b.c_) {
      if (static_cast<int>(wb.size()) > room) continue;
      out.add_term(wa + wb, TruncatedSeries::checked_mul(ca, cb));
    }
  }
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  for (const auto& [w, cb] : b.c_) out.add_term(w, cb);
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  for (const auto& [w, cb] : b.c_) out.add_term(w, -cb);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.vars_ == b.vars_ && a.k_ == b.k_ && a.c_ == b.c_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  auto it = c_.find("");
  if (it == c_.end() || it->second != 1)
    throw CalcError(ErrorKind::Domain, "series inverse needs constant term 1");
  TruncatedSeries delta = *this;  // s - 1
  delta.c_.erase("");
  TruncatedSeries out = one(vars_, k_);
  TruncatedSeries pw = one(vars_, k_);
  for (int d = 1; d <= k_; ++d) {
    pw = pw * delta;
    if (pw.c_.empty()) break;
    long long sign = d % 2 ? -1 : 1;
    for (const auto& [w, c] : pw.c_) out.add_term(w, checked_mul(sign, c));
  }
  return out;
}

std::string TruncatedSeries::to_string() const {
  if (c_.empty()) return "0";
  // order by degree, then lexicographically
  std::vector<std::pair<std::string, long long>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::string s;
  for (const auto& [w, c] : terms) {
    long long mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (w.empty()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      for (char ch : w) s += "X" + std::to_string(static_cast<int>(ch));
    }
  }
  return s;
}

TruncatedSeries magnus(const FreeWord& w, int vars, int max_degree) {
  TruncatedSeries out = TruncatedSeries::one(vars, max_degree);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= vars)
      throw CalcError(ErrorKind::Usage, "word uses a generator outside 1..n");
    out = out * (l.sign > 0
                     ? TruncatedSeries::generator(l.gen + 1, vars, max_degree)
                     : TruncatedSeries::generator_inverse(l.gen + 1, vars, max_degree));
  }
  return out;
}

}  // namespace warrow
