#include "rosecover/word.hpp"

#include <algorithm>
#include <sstream>

#include "rosecover/error.hpp"

namespace rosecover {

bool Word::uses_petal(int petal) const {
  return std::any_of(letters.begin(), letters.end(), [&](const Letter &l) { return l.petal == petal; });
}

int Word::max_petal() const {
  int m = 0;
  for (const auto &l : letters)
    m = std::max(m, l.petal);
  return m;
}

Word Word::inverse() const {
  Word out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return out;
}

Word Word::power(long long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  return out;
}

Word operator*(const Word &lhs, const Word &rhs) {
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

Word free_reduce(const Word &w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto &l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l.inverse())
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

Word parse_word(const std::string &text) {
  Word w;
  if (text.empty() || text == "1")
    return w;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '.')) {
    auto bad = [&] { throw Error(Errc::Parse, "bad letter '" + token + "' in word '" + text + "'"); };
    if (token.size() < 2 || token[0] != 'a')
      bad();
    const auto caret = token.find('^');
    const std::string index = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (index.empty() || !std::all_of(index.begin(), index.end(), [](char c) { return c >= '0' && c <= '9'; }))
      bad();
    int petal = 0;
    long long exponent = 1;
    try {
      petal = std::stoi(index);
      if (caret != std::string::npos) {
        std::size_t used = 0;
        const std::string exp = token.substr(caret + 1);
        exponent = std::stoll(exp, &used);
        if (used != exp.size())
          bad();
      }
    } catch (const std::logic_error &) {
      bad();
    }
    if (petal < 1 || exponent == 0)
      bad();
    const Word letter = Word::generator(petal).power(exponent);
    w.letters.insert(w.letters.end(), letter.letters.begin(), letter.letters.end());
  }
  return w;
}

std::string format_word(const Word &w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i)
      out += '.';
    out += 'a' + std::to_string(w.letters[i].petal);
    if (w.letters[i].exponent < 0)
      out += "^-1";
  }
  return out;
}

} // namespace rosecover
