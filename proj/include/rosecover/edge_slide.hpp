#pragma once

#include <vector>

#include "rosecover/cover.hpp"
#include "rosecover/homology.hpp"
#include "rosecover/matrix.hpp"
#include "rosecover/word.hpp"

namespace rosecover {

/// The automorphism a_j -> ell * a_j of F_n fixing every other generator:
/// drag the initial point of petal j around the loop ell.
struct SlideAutomorphism {
  int n = 0;
  int petal = 1;
  Word ell;
};

/// Throws PetalInLoop if ell uses petal j, InvalidArgument on bad indices.
SlideAutomorphism make_slide(int n, int petal, Word ell);

/// Image of w under the slide, freely reduced.
Word apply_automorphism(const SlideAutomorphism &slide, const Word &w);

/// True iff q(ell) is the identity, i.e. the slide lifts to the cover.
bool lifts_to_cover(const SlideAutomorphism &slide, const CoverGraph &cover);

/// Lift F of the slide that fixes the identity vertex, described by its
/// action on H_1.
struct LiftedSlide {
  SlideAutomorphism slide;
  /// Class of the lift of ell at the identity vertex.
  HomologyClass ell_class;
  /// translate_classes[g] = class of g . (lift of ell).
  std::vector<HomologyClass> translate_classes;
  QMatrix matrix;
};

/// F_*(w) = w + sum_g xi_{(g,j)}(w) [g . ell~], assembled column by column.
/// Throws DoesNotLift.
LiftedSlide lifted_action_formula(const SlideAutomorphism &slide, const CoverGraph &cover,
                                  const HomologyBasis &basis);

/// Chain map F_# on every edge of the cover, computed by path lifting:
/// edge (g, i) goes to the lift at g of the image of a_i. Indexed by edge id.
std::vector<Chain1> lifted_chain_map(const SlideAutomorphism &slide, const CoverGraph &cover);

Chain1 apply_chain_map(const CoverGraph &cover, const std::vector<Chain1> &chain_map, const Chain1 &z);

/// The same matrix as lifted_action_formula, computed from lifted_chain_map.
/// Throws DoesNotLift.
QMatrix lifted_action_oracle(const SlideAutomorphism &slide, const CoverGraph &cover, const HomologyBasis &basis);

/// sum_g xi_{(g,j)}(w) [g . ell~]
HomologyClass slide_increment(const LiftedSlide &lifted, const CoverGraph &cover, const HomologyBasis &basis,
                              const HomologyClass &w);

/// F^d(w) = w + d * increment(w). Negative d gives the inverse slide.
HomologyClass iterate_closed_form(const LiftedSlide &lifted, const CoverGraph &cover, const HomologyBasis &basis,
                                  long long d, const HomologyClass &w);

} // namespace rosecover
