#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rosecover/cover.hpp"

namespace rosecover {

/// A named cover of the rose used by the self-test and acceptance runs.
struct BatteryCase {
  std::string name;
  GroupFamily family;
  int n = 2;
  CoverSpec spec;
};

/// Standard generating set of a builtin group, as element indices.
std::vector<Element> standard_generators(const GroupFamily &family, const FiniteGroup &group);

/// Images for rank n: the standard generators, padded first with a repeat of
/// the first generator and then with the identity. Empty if n is too small.
std::optional<GeneratorImages> standard_images(const GroupFamily &family, const FiniteGroup &group, int n);

/// trivial, cyclic(2..6), elementary_abelian(2,2), elementary_abelian(2,3),
/// dihedral(4), symmetric(3), symmetric(4), each for n in {2, 3, 4} where the
/// standard images fit.
std::vector<BatteryCase> standard_battery();

std::string describe(const GroupFamily &family);

/// Random word over the petals other than `petal` whose image in G is the
/// identity: a product of conjugates c u^k c^-1 with k the order of q(u).
/// Returns the empty word when n = 1.
Word random_lifting_loop(const CoverGraph &cover, int petal, std::mt19937_64 &rng);

} // namespace rosecover
