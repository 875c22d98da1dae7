#include <doctest.h>

#include <random>

#include "rosecover/error.hpp"
#include "rosecover/word.hpp"

using namespace rosecover;

namespace {

Word random_word(std::mt19937_64 &rng, int n, std::size_t max_len) {
  Word w;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back(Letter{1 + int(rng() % std::uint64_t(n)), rng() % 2 ? 1 : -1});
  return w;
}

bool is_reduced(const Word &w) {
  for (std::size_t i = 1; i < w.letters.size(); ++i)
    if (w.letters[i] == w.letters[i - 1].inverse())
      return false;
  return true;
}

} // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_word("a1.a1^-1")).empty());
  CHECK(free_reduce(parse_word("a1.a2.a2^-1.a1")) == parse_word("a1.a1"));
  const Word w = parse_word("a1.a1.a1.a2^-1.a1.a2");
  CHECK(free_reduce(w) == w);
  CHECK(free_reduce(parse_word("a2.a1.a3.a3^-1.a1^-1.a2^-1")).empty());
}

TEST_CASE("reduction properties on random words") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = random_word(rng, 3, 12), v = random_word(rng, 3, 12);
    const Word r = free_reduce(u);
    CHECK(is_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(free_reduce(u * u.inverse()).empty());
    CHECK(free_reduce(u * v) == free_reduce(free_reduce(u) * free_reduce(v)));
    CHECK(parse_word(format_word(u)) == u);
  }
}

TEST_CASE("word syntax") {
  CHECK(parse_word("").empty());
  CHECK(parse_word("1").empty());
  CHECK(format_word(parse_word("a2.a3^-1")) == "a2.a3^-1");
  CHECK(parse_word("a1^3") == parse_word("a1.a1.a1"));
  CHECK(parse_word("a2^-2") == parse_word("a2^-1.a2^-1"));
  CHECK(parse_word("a12").letters.front().petal == 12);
  for (const char *bad : {"b1", "a", "a0", "a1^0", "a1^x", "a1..a2", "a-1", "a1^"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(bad), Error);
  }
}

TEST_CASE("inverse and powers") {
  const Word w = parse_word("a1.a2^-1");
  CHECK(w.inverse() == parse_word("a2.a1^-1"));
  CHECK(w.power(0).empty());
  CHECK(w.power(2) == parse_word("a1.a2^-1.a1.a2^-1"));
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.uses_petal(2));
  CHECK_FALSE(w.uses_petal(3));
}
