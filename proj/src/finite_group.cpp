#include "rosecover/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "rosecover/error.hpp"

namespace rosecover {

const char *errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::NotAGroup: return "NotAGroup";
  case Errc::UnsupportedFamily: return "UnsupportedFamily";
  case Errc::Disconnected: return "Disconnected";
  case Errc::NotACycle: return "NotACycle";
  case Errc::PetalInLoop: return "PetalInLoop";
  case Errc::DoesNotLift: return "DoesNotLift";
  case Errc::ZeroVector: return "ZeroVector";
  case Errc::RankTooSmall: return "RankTooSmall";
  case Errc::SearchExhausted: return "SearchExhausted";
  case Errc::UnsupportedGroup: return "UnsupportedGroup";
  case Errc::WrongRank: return "WrongRank";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void not_a_group(const std::string &what) { throw Error(Errc::NotAGroup, what); }

std::string triple(int x, int y, int z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

} // namespace

FiniteGroup FiniteGroup::from_mul_table(const std::vector<std::vector<int>> &table, std::vector<std::string> labels,
                                        bool trusted) {
  const std::size_t m = table.size();
  if (m == 0)
    not_a_group("empty table");
  for (std::size_t x = 0; x < m; ++x) {
    if (table[x].size() != m)
      not_a_group("row " + std::to_string(x) + " has length " + std::to_string(table[x].size()) + ", expected " +
                  std::to_string(m));
    for (std::size_t y = 0; y < m; ++y)
      if (table[x][y] < 0 || static_cast<std::size_t>(table[x][y]) >= m)
        not_a_group("entry " + triple(int(x), int(y), table[x][y]) + " out of range");
  }
  if (!labels.empty() && labels.size() != m)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(m) + " labels, got " + std::to_string(labels.size()));

  // Latin square.
  std::vector<char> seen(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < m; ++y) {
      const int z = table[x][y];
      if (seen[z])
        not_a_group("row " + std::to_string(x) + " is not a permutation (value " + std::to_string(z) +
                    " repeated at column " + std::to_string(y) + ")");
      seen[z] = 1;
    }
  }
  for (std::size_t y = 0; y < m; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < m; ++x) {
      const int z = table[x][y];
      if (seen[z])
        not_a_group("column " + std::to_string(y) + " is not a permutation (value " + std::to_string(z) +
                    " repeated at row " + std::to_string(x) + ")");
      seen[z] = 1;
    }
  }

  int e = -1;
  for (std::size_t c = 0; c < m && e < 0; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x)
      ok = table[c][x] == int(x) && table[x][c] == int(x);
    if (ok)
      e = int(c);
  }
  if (e < 0)
    not_a_group("no two-sided identity element");

  if (m > kAssociativityCheckBound && !trusted)
    not_a_group("order " + std::to_string(m) + " exceeds the associativity check bound; pass trusted = true");
  if (m <= kAssociativityCheckBound)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z)
          if (table[table[x][y]][z] != table[x][table[y][z]])
            not_a_group("associativity fails at " + triple(int(x), int(y), int(z)));

  // Relabel so that the identity sits at index 0.
  std::vector<int> relabel(m);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[static_cast<std::size_t>(e)]);

  FiniteGroup g;
  g.order_ = m;
  g.table_.assign(m * m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      g.table_[static_cast<std::size_t>(relabel[x]) * m + static_cast<std::size_t>(relabel[y])] =
          relabel[static_cast<std::size_t>(table[x][y])];

  g.labels_.resize(m);
  for (std::size_t x = 0; x < m; ++x)
    g.labels_[static_cast<std::size_t>(relabel[x])] = labels.empty() ? std::to_string(x) : labels[x];

  g.inv_.assign(m, -1);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y)
      if (g.mul(int(x), int(y)) == 0) {
        g.inv_[x] = int(y);
        break;
      }
    if (g.mul(g.inv_[x], int(x)) != 0)
      not_a_group("element " + std::to_string(x) + " has no two-sided inverse");
  }
  return g;
}

Element FiniteGroup::pow(Element x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element result = identity();
  Element base = x;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(Element x) const {
  int k = 1;
  for (Element y = x; y != identity(); y = mul(y, x))
    ++k;
  return k;
}

Element FiniteGroup::find_label(const std::string &label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : Element(it - labels_.begin());
}

std::vector<std::vector<int>> FiniteGroup::mul_table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y)
      t[x][y] = mul(int(x), int(y));
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (mul(int(x), int(y)) != mul(int(y), int(x)))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Builtin families

namespace {

constexpr std::size_t kMaxBuiltinOrder = 2048;

[[noreturn]] void unsupported(const std::string &what) { throw Error(Errc::UnsupportedFamily, what); }

std::string power_label(const std::string &base, int k) {
  if (k == 0)
    return "";
  if (k == 1)
    return base;
  return base + "^" + std::to_string(k);
}

FiniteGroup make(const std::vector<std::vector<int>> &table, std::vector<std::string> labels) {
  return FiniteGroup::from_mul_table(table, std::move(labels), table.size() > FiniteGroup::kAssociativityCheckBound);
}

FiniteGroup cyclic(int m) {
  if (m < 1 || std::size_t(m) > kMaxBuiltinOrder)
    unsupported("cyclic(" + std::to_string(m) + ")");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x = 0; x < m; ++x) {
    labels[x] = x == 0 ? "e" : power_label("x", x);
    for (int y = 0; y < m; ++y)
      t[x][y] = (x + y) % m;
  }
  return make(t, std::move(labels));
}

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

FiniteGroup elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 1)
    unsupported("elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")");
  std::size_t m = 1;
  for (int i = 0; i < k; ++i) {
    m *= std::size_t(p);
    if (m > kMaxBuiltinOrder)
      unsupported("elementary_abelian order exceeds " + std::to_string(kMaxBuiltinOrder));
  }
  // Element index = sum_i c_i p^i.
  auto digits = [&](std::size_t x) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, x /= std::size_t(p))
      d[i] = int(x % std::size_t(p));
    return d;
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto dx = digits(x);
    for (int i = 0; i < k; ++i)
      labels[x] += power_label("x" + std::to_string(i + 1), dx[i]);
    if (labels[x].empty())
      labels[x] = "e";
    for (std::size_t y = 0; y < m; ++y) {
      const auto dy = digits(y);
      std::size_t z = 0, place = 1;
      for (int i = 0; i < k; ++i, place *= std::size_t(p))
        z += std::size_t((dx[i] + dy[i]) % p) * place;
      t[x][y] = int(z);
    }
  }
  return make(t, std::move(labels));
}

FiniteGroup dihedral(int m) {
  if (m < 1 || std::size_t(2 * m) > kMaxBuiltinOrder)
    unsupported("dihedral(" + std::to_string(m) + ")");
  // r^i s^f has index i + m f; s r = r^-1 s.
  const int order = 2 * m;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const int i = x % m, f = x / m;
    labels[x] = power_label("r", i) + (f ? "s" : "");
    if (labels[x].empty())
      labels[x] = "e";
    for (int y = 0; y < order; ++y) {
      const int j = y % m, h = y / m;
      const int rot = ((f ? i - j : i + j) % m + m) % m;
      t[x][y] = rot + m * ((f + h) % 2);
    }
  }
  return make(t, std::move(labels));
}

std::string cycle_notation(const std::vector<int> &perm) {
  std::string out;
  std::vector<char> done(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (done[s] || perm[s] == int(s))
      continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      out += (first ? "" : " ") + std::to_string(x + 1);
      first = false;
      x = std::size_t(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

FiniteGroup symmetric(int k) {
  if (k < 1 || k > 5)
    unsupported("symmetric(" + std::to_string(k) + "): only k <= 5 is supported");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  auto index_of = [&](const std::vector<int> &q) {
    return int(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  std::vector<int> composed(k);
  for (std::size_t x = 0; x < m; ++x) {
    labels[x] = cycle_notation(perms[x]);
    for (std::size_t y = 0; y < m; ++y) {
      // (x y)(i) = x(y(i))
      for (int i = 0; i < k; ++i)
        composed[i] = perms[x][perms[y][i]];
      t[x][y] = index_of(composed);
    }
  }
  return make(t, std::move(labels));
}

} // namespace

FiniteGroup builtin_group(const GroupFamily &family) {
  const auto &p = family.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count)
      unsupported(family.name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family.name == "trivial") {
    want(0);
    return cyclic(1);
  }
  if (family.name == "cyclic") {
    want(1);
    return cyclic(p[0]);
  }
  if (family.name == "elementary_abelian") {
    want(2);
    return elementary_abelian(p[0], p[1]);
  }
  if (family.name == "dihedral") {
    want(1);
    return dihedral(p[0]);
  }
  if (family.name == "symmetric") {
    want(1);
    return symmetric(p[0]);
  }
  unsupported("unknown family '" + family.name + "'");
}

GroupFamily parse_group_family(const std::string &text) {
  GroupFamily family;
  const auto colon = text.find(':');
  family.name = text.substr(0, colon);
  if (colon == std::string::npos)
    return family;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      family.params.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      unsupported("bad parameter '" + item + "' in '" + text + "'");
    }
  }
  return family;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup subgroup_generated(const FiniteGroup &group, const std::vector<Element> &gens) {
  std::vector<char> in(group.order());
  std::vector<Element> frontier{FiniteGroup::identity()};
  in[0] = 1;
  // In a finite group, closing under right multiplication by the generators
  // yields the generated subgroup.
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element y = group.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  Subgroup h;
  for (std::size_t x = 0; x < group.order(); ++x)
    if (in[x])
      h.members.push_back(Element(x));
  return h;
}

std::vector<std::vector<Element>> left_cosets(const FiniteGroup &group, const Subgroup &sub) {
  std::vector<char> assigned(group.order());
  std::vector<std::vector<Element>> blocks;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (assigned[g])
      continue;
    std::vector<Element> block;
    block.reserve(sub.order());
    for (Element h : sub.members) {
      const Element x = group.mul(Element(g), h);
      assigned[x] = 1;
      block.push_back(x);
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

} // namespace rosecover
