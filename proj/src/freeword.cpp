#include "freeword.hpp"

#include <algorithm>

namespace warrow {

FreeWord FreeWord::generator(int gen, int sign) {
  FreeWord w;
  w.push(gen, sign);
  return w;
}

void FreeWord::push(int gen, int sign) {
  if (!letters_.empty() && letters_.back().gen == gen && letters_.back().sign == -sign) {
    letters_.pop_back();
    return;
  }
  letters_.push_back({gen, sign});
}

void FreeWord::append(const FreeWord& w) {
  for (const Letter& l : w.letters_) push(l.gen, l.sign);
}

void FreeWord::append_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(it->gen, -it->sign);
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, -it->sign});
  return out;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.append_inverse(b);
  out.append_inverse(a);
  out.append(b);
  return out;
}

FreeWord FreeWord::conjugate_of(const FreeWord& m) const {
  FreeWord out = inverse();
  out.append(m);
  out.append(*this);
  return out;
}

long long FreeWord::exponent_sum(int gen) const {
  long long s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.sign;
  return s;
}

int FreeWord::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const Letter& l : letters_) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

}  // namespace warrow
