#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rosecover/cover.hpp"
#include "rosecover/homology.hpp"

namespace rosecover {

struct CharacterReport {
  std::size_t group_order = 0;
  std::size_t rank = 0;
  std::vector<Rational> traces; // indexed by element
  bool verdict = false;
};

/// Compares the character of G on H_1(Y; Q) with that of Q[G]^{n-1} + Q.
CharacterReport verify_chevalley_weil(const CoverGraph &cover, const HomologyBasis &basis);

/// A +-1 valued character of an elementary abelian 2-group.
struct SignCharacter {
  /// One sign per element of the chosen basis of G, e.g. "+-".
  std::string name;
  std::vector<int> values; // indexed by element
};

struct IsotypicReport {
  /// Basis of G as an F_2-vector space, chosen greedily by element index.
  std::vector<Element> group_basis;
  std::vector<SignCharacter> characters; // trivial first
  std::vector<std::size_t> dims;
  std::vector<QMatrix> projectors;
};

/// Projectors (1/|G|) sum_g chi(g) rho(g). Throws UnsupportedGroup unless
/// every element has order <= 2.
IsotypicReport isotypic_decomposition(const CoverGraph &cover, const HomologyBasis &basis);

/// Class of the closed lift of w^k at `start`, k the order of q(w).
HomologyClass elevation_class(const CoverGraph &cover, const HomologyBasis &basis, const Word &w, Element start);

struct ObstructionReport {
  std::size_t component_count = 0;
  std::size_t orbit_rank = 0;
  bool obstructed = false;
};

/// The full preimage of the loop w has [G : <q(w)>] components, which bounds
/// the orbit rank of any elevation.
ObstructionReport elevation_rank_obstruction(const CoverGraph &cover, const HomologyBasis &basis, const Word &w);

struct CommutatorReport {
  bool lifts = false;
  bool class_nonzero = false;
};

/// Rank-2 covers only (throws WrongRank otherwise).
CommutatorReport commutator_lift_check(const CoverGraph &cover, const HomologyBasis &basis);

} // namespace rosecover
