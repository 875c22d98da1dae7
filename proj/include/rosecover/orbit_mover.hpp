#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rosecover/cover.hpp"
#include "rosecover/edge_slide.hpp"
#include "rosecover/homology.hpp"

namespace rosecover {

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t max_candidates = 10000;
};

struct MoveOptions {
  SearchOptions search;
  int depth = 10;
};

/// Output of the main construction: a slide of petal j along ell whose lift
/// moves v on an infinite orbit, with everything needed to re-check it.
struct MoveCertificate {
  int petal = 1;
  Edge pairing_edge;
  Word ell;
  HomologyClass ell_class;
  std::size_t orbit_rank_value = 0;
  HomologyClass increment;
  QMatrix matrix;
  int iterates_checked = 0;
};

/// Smallest petal j, then smallest g, with xi_{(g,j)}(v) != 0.
/// Throws ZeroVector.
Edge find_pairing_edge(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v);

/// Based loop at the root of `component_basis` spelling the fundamental cycle
/// of the non-tree edge e.
Word fundamental_loop_word(const CoverGraph &cover, const HomologyBasis &component_basis, const Edge &e);

/// A loop ell avoiding petal j, lifting closed at the identity vertex inside
/// the complement component Y_0, whose class has a linearly independent
/// G-orbit. Throws RankTooSmall for n <= 2 and SearchExhausted when the
/// candidate budget runs out.
Word find_slide_loop(const CoverGraph &cover, const HomologyBasis &basis, int petal,
                     const SearchOptions &options = {});

/// Throws ZeroVector, RankTooSmall, SearchExhausted.
MoveCertificate move_vector(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                            const MoveOptions &options = {});

struct VerificationResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-derives every claim of the certificate from the cover alone.
VerificationResult verify_certificate(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                                      const MoveCertificate &cert);

} // namespace rosecover
