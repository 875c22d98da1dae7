#include "rosecover/battery.hpp"

#include <algorithm>

namespace rosecover {

std::string describe(const GroupFamily &family) {
  std::string out = family.name;
  for (std::size_t i = 0; i < family.params.size(); ++i)
    out += (i ? "," : ":") + std::to_string(family.params[i]);
  return out;
}

std::vector<Element> standard_generators(const GroupFamily &family, const FiniteGroup &group) {
  const auto &p = family.params;
  if (family.name == "trivial" || group.order() == 1)
    return {};
  if (family.name == "cyclic")
    return {1};
  if (family.name == "elementary_abelian") {
    std::vector<Element> gens;
    Element place = 1;
    for (int i = 0; i < p[1]; ++i, place *= p[0])
      gens.push_back(place);
    return gens;
  }
  if (family.name == "dihedral")
    return p[0] == 1 ? std::vector<Element>{1} : std::vector<Element>{1, p[0]}; // r, s
  if (family.name == "symmetric") {
    const int k = p[0];
    if (k == 2)
      return {group.find_label("(1 2)")};
    std::string cycle = "(";
    for (int i = 1; i <= k; ++i)
      cycle += (i > 1 ? " " : "") + std::to_string(i);
    cycle += ")";
    return {group.find_label("(1 2)"), group.find_label(cycle)};
  }
  return {};
}

std::optional<GeneratorImages> standard_images(const GroupFamily &family, const FiniteGroup &group, int n) {
  auto gens = standard_generators(family, group);
  if (int(gens.size()) > n)
    return std::nullopt;
  GeneratorImages images{gens};
  if (!gens.empty() && int(images.images.size()) < n)
    images.images.push_back(gens.front());
  while (int(images.images.size()) < n)
    images.images.push_back(FiniteGroup::identity());
  return images;
}

std::vector<BatteryCase> standard_battery() {
  std::vector<GroupFamily> families{{"trivial", {}}};
  for (int m = 2; m <= 6; ++m)
    families.push_back({"cyclic", {m}});
  families.push_back({"elementary_abelian", {2, 2}});
  families.push_back({"elementary_abelian", {2, 3}});
  families.push_back({"dihedral", {4}});
  families.push_back({"symmetric", {3}});
  families.push_back({"symmetric", {4}});

  std::vector<BatteryCase> cases;
  for (const auto &family : families) {
    const FiniteGroup group = builtin_group(family);
    for (int n = 2; n <= 4; ++n) {
      auto images = standard_images(family, group, n);
      if (!images)
        continue;
      cases.push_back(BatteryCase{describe(family) + " n=" + std::to_string(n), family, n, CoverSpec{group, *images}});
    }
  }
  return cases;
}

Word random_lifting_loop(const CoverGraph &cover, int petal, std::mt19937_64 &rng) {
  std::vector<int> allowed;
  for (int i = 1; i <= cover.n(); ++i)
    if (i != petal)
      allowed.push_back(i);
  if (allowed.empty())
    return {};
  auto pick = [&](std::uint64_t bound) { return std::size_t(rng() % bound); };
  auto random_word = [&](std::size_t min_len, std::size_t max_len) {
    Word w;
    const std::size_t len = min_len + pick(max_len - min_len + 1);
    for (std::size_t i = 0; i < len; ++i)
      w.letters.push_back(Letter{allowed[pick(allowed.size())], pick(2) ? 1 : -1});
    return w;
  };
  Word ell;
  const std::size_t factors = 1 + pick(3);
  for (std::size_t f = 0; f < factors; ++f) {
    const Word conj = random_word(0, 3);
    const Word u = random_word(1, 3);
    const int k = cover.group().element_order(cover.evaluate(u));
    ell = ell * conj * u.power(k) * conj.inverse();
  }
  return free_reduce(ell);
}

} // namespace rosecover
