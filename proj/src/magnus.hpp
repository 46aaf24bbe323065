#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeword.hpp"
#include "model.hpp"

namespace warrow {

// Degree-truncated series in noncommuting variables X_1..X_n with integer
// coefficients. Words are keyed by packed index strings (one byte per index,
// 1-based), the empty string being the constant term.
class TruncatedSeries {
 public:
  TruncatedSeries(int vars, int max_degree);
  static TruncatedSeries one(int vars, int max_degree);
  // 1 + X_i
  static TruncatedSeries generator(int i, int vars, int max_degree);
  // 1 - X_i + X_i^2 - ...
  static TruncatedSeries generator_inverse(int i, int vars, int max_degree);

  int vars() const { return vars_; }
  int max_degree() const { return k_; }
  const std::map<std::string, long long>& coefficients() const { return c_; }

  long long coefficient(const std::vector<int>& word) const;
  void set_coefficient(const std::vector<int>& word, long long v);

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse; requires constant term 1.
  TruncatedSeries inverse() const;

  std::string to_string() const;

 private:
  int vars_;
  int k_;
  std::map<std::string, long long> c_;
  void add_term(const std::string& w, long long v);
  static long long checked_mul(long long a, long long b);
  static long long checked_add(long long a, long long b);
};

// Magnus expansion of a word in meridian generators 0..n-1: generator i maps
// to 1 + X_{i+1}, truncated at the given degree.
TruncatedSeries magnus(const FreeWord& w, int vars, int max_degree);

}  // namespace warrow
