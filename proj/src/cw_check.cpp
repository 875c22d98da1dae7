#include "rosecover/cw_check.hpp"

#include <stdexcept>

#include "rosecover/error.hpp"

namespace rosecover {

CharacterReport verify_chevalley_weil(const CoverGraph &cover, const HomologyBasis &basis) {
  CharacterReport report;
  report.group_order = cover.vertex_count();
  report.rank = basis.rank();
  report.traces.reserve(report.group_order);
  for (std::size_t g = 0; g < report.group_order; ++g)
    report.traces.push_back(character(cover, basis, Element(g)));

  const Rational expected_identity = Rational(long(cover.n() - 1) * long(report.group_order) + 1);
  report.verdict = report.traces[0] == expected_identity;
  for (std::size_t g = 1; g < report.group_order; ++g)
    report.verdict = report.verdict && report.traces[g] == 1;
  return report;
}

IsotypicReport isotypic_decomposition(const CoverGraph &cover, const HomologyBasis &basis) {
  const auto &group = cover.group();
  const std::size_t order = group.order();
  for (std::size_t g = 0; g < order; ++g)
    if (group.element_order(Element(g)) > 2)
      throw Error(Errc::UnsupportedGroup, "element " + group.label(Element(g)) + " has order " +
                                              std::to_string(group.element_order(Element(g))) +
                                              "; only exponent-2 groups have rational sign characters");

  // Greedy F_2-basis; coords[g] is the bitmask of g in that basis.
  IsotypicReport report;
  std::vector<long> coords(order, -1);
  coords[0] = 0;
  std::vector<Element> span{FiniteGroup::identity()};
  for (std::size_t x = 0; x < order; ++x) {
    if (coords[x] >= 0)
      continue;
    const long bit = 1L << report.group_basis.size();
    report.group_basis.push_back(Element(x));
    const std::size_t before = span.size();
    for (std::size_t i = 0; i < before; ++i) {
      const Element y = group.mul(span[i], Element(x));
      coords[y] = coords[span[i]] | bit;
      span.push_back(y);
    }
  }

  const std::size_t k = report.group_basis.size();
  const auto rho = deck_action_matrices(cover, basis);
  const Rational inv_order(1, static_cast<unsigned long>(order));
  for (long mask = 0; mask < (1L << k); ++mask) {
    SignCharacter chi;
    for (std::size_t i = 0; i < k; ++i)
      chi.name += (mask >> i) & 1 ? '-' : '+';
    QMatrix projector(basis.rank(), basis.rank());
    for (std::size_t g = 0; g < order; ++g) {
      const int value = __builtin_popcountl(static_cast<unsigned long>(coords[g] & mask)) % 2 ? -1 : 1;
      chi.values.push_back(value);
      projector = value > 0 ? projector + rho[g] : projector - rho[g];
    }
    projector *= inv_order;
    report.dims.push_back(rank_of(projector));
    report.projectors.push_back(std::move(projector));
    report.characters.push_back(std::move(chi));
  }
  return report;
}

HomologyClass elevation_class(const CoverGraph &cover, const HomologyBasis &basis, const Word &w, Element start) {
  const int k = cover.group().element_order(cover.evaluate(w));
  return path_class(cover, basis, lift_word(cover, w.power(k), start));
}

ObstructionReport elevation_rank_obstruction(const CoverGraph &cover, const HomologyBasis &basis, const Word &w) {
  if (w.empty())
    throw Error(Errc::InvalidArgument, "elevation of the empty word");
  ObstructionReport report;
  const std::size_t order = cover.vertex_count();
  report.component_count = order / std::size_t(cover.group().element_order(cover.evaluate(w)));
  report.orbit_rank = orbit_rank(cover, basis, elevation_class(cover, basis, w, FiniteGroup::identity()));
  if (report.orbit_rank > report.component_count)
    throw std::logic_error("orbit rank of an elevation exceeds the number of elevations");
  report.obstructed = report.component_count < order;
  return report;
}

CommutatorReport commutator_lift_check(const CoverGraph &cover, const HomologyBasis &basis) {
  if (cover.n() != 2)
    throw Error(Errc::WrongRank, "commutator check needs a rose with 2 petals, got " + std::to_string(cover.n()));
  const Word a = Word::generator(1), b = Word::generator(2);
  const Word commutator = a * b * a.inverse() * b.inverse();
  CommutatorReport report;
  report.lifts = cover.evaluate(commutator) == FiniteGroup::identity();
  if (report.lifts)
    report.class_nonzero = !is_zero(path_class(cover, basis, lift_word(cover, commutator, FiniteGroup::identity())));
  return report;
}

} // namespace rosecover
