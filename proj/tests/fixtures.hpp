#pragma once

#include <string>
#include <vector>

#include "rosecover/cover.hpp"
#include "rosecover/homology.hpp"

namespace fixtures {

inline rosecover::CoverGraph make_cover(const rosecover::GroupFamily &family, std::vector<int> images) {
  return rosecover::build_cover(rosecover::CoverSpec{rosecover::builtin_group(family), {std::move(images)}});
}

/// Mod-2 homology cover of the two-petal rose: q(a) = x1, q(b) = x2.
inline rosecover::CoverGraph klein() { return make_cover({"elementary_abelian", {2, 2}}, {1, 2}); }
/// Klein four cover of the three-petal rose with q(a3) = e.
inline rosecover::CoverGraph klein3() { return make_cover({"elementary_abelian", {2, 2}}, {1, 2, 0}); }
inline rosecover::CoverGraph cyclic3() { return make_cover({"cyclic", {3}}, {1, 1, 0}); }
inline rosecover::CoverGraph trivial(int n) { return make_cover({"cyclic", {1}}, std::vector<int>(std::size_t(n), 0)); }

inline rosecover::HomologyClass lift_class(const rosecover::CoverGraph &cover, const rosecover::HomologyBasis &basis,
                                           const std::string &word, rosecover::Element start = 0) {
  return rosecover::path_class(cover, basis, rosecover::lift_word(cover, rosecover::parse_word(word), start));
}

} // namespace fixtures
