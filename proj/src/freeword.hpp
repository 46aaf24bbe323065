#pragma once

#include <string>
#include <vector>

namespace warrow {

// A letter of a free group word: generator id with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
};

// Word in a free group, stored fully reduced (no adjacent g g^-1).
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord generator(int gen, int sign = 1);

  void push(int gen, int sign);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);

  FreeWord inverse() const;
  // a b^-1 a^-1 b
  static FreeWord commutator(const FreeWord& a, const FreeWord& b);
  // w^-1 . m . w
  FreeWord conjugate_of(const FreeWord& m) const;

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  long long exponent_sum(int gen) const;
  int max_gen() const;  // -1 when empty

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }

  // Letters as e.g. "x0 x1^-1"; generator names are x<gen>.
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

}  // namespace warrow
