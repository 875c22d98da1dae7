#pragma once

#include <string>
#include <vector>

namespace rosecover {

/// One letter a_i^{+-1} of a word in the free group F_n. Petals are 1-based.
struct Letter {
  int petal = 1;
  int exponent = 1;

  Letter inverse() const { return {petal, -exponent}; }
  bool operator==(const Letter &) const = default;
};

struct Word {
  std::vector<Letter> letters;

  static Word generator(int petal, int exponent = 1) { return Word{{Letter{petal, exponent}}}; }

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  bool uses_petal(int petal) const;
  int max_petal() const;

  Word inverse() const;
  Word power(long long k) const;

  bool operator==(const Word &) const = default;
};

Word operator*(const Word &lhs, const Word &rhs);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word &w);

/// Dot-separated letters, e.g. "a2.a3^-1". Also accepts "a2^k" for any
/// nonzero integer k. The empty string (or "1") is the empty word.
Word parse_word(const std::string &text);
std::string format_word(const Word &w);

} // namespace rosecover
