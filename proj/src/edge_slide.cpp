#include "rosecover/edge_slide.hpp"

#include "rosecover/error.hpp"

namespace rosecover {

SlideAutomorphism make_slide(int n, int petal, Word ell) {
  if (n < 1 || petal < 1 || petal > n)
    throw Error(Errc::InvalidArgument, "petal " + std::to_string(petal) + " out of range for n = " + std::to_string(n));
  for (const auto &l : ell.letters)
    if (l.petal < 1 || l.petal > n)
      throw Error(Errc::InvalidArgument, "loop uses a" + std::to_string(l.petal) + ", not a petal of the rose");
  if (ell.uses_petal(petal))
    throw Error(Errc::PetalInLoop, "loop '" + format_word(ell) + "' uses the slid petal a" + std::to_string(petal));
  return SlideAutomorphism{n, petal, std::move(ell)};
}

Word apply_automorphism(const SlideAutomorphism &slide, const Word &w) {
  Word out;
  const Word ell_inv = slide.ell.inverse();
  for (const auto &l : w.letters) {
    if (l.petal != slide.petal) {
      out.letters.push_back(l);
    } else if (l.exponent > 0) {
      out = out * slide.ell;
      out.letters.push_back(l);
    } else {
      out.letters.push_back(l);
      out = out * ell_inv;
    }
  }
  return free_reduce(out);
}

bool lifts_to_cover(const SlideAutomorphism &slide, const CoverGraph &cover) {
  return cover.evaluate(slide.ell) == FiniteGroup::identity();
}

namespace {

void require_lift(const SlideAutomorphism &slide, const CoverGraph &cover) {
  if (slide.n != cover.n())
    throw Error(Errc::InvalidArgument, "slide is on a rose with " + std::to_string(slide.n) + " petals, cover has " +
                                           std::to_string(cover.n()));
  if (!lifts_to_cover(slide, cover))
    throw Error(Errc::DoesNotLift, "q(" + format_word(slide.ell) + ") = " +
                                       cover.group().label(cover.evaluate(slide.ell)) + " is not the identity");
}

} // namespace

LiftedSlide lifted_action_formula(const SlideAutomorphism &slide, const CoverGraph &cover,
                                  const HomologyBasis &basis) {
  require_lift(slide, cover);
  LiftedSlide lifted;
  lifted.slide = slide;
  const EdgePath ell_lift = lift_word(cover, slide.ell, FiniteGroup::identity());
  lifted.ell_class = path_class(cover, basis, ell_lift);
  const std::size_t order = cover.vertex_count();
  lifted.translate_classes.reserve(order);
  for (std::size_t g = 0; g < order; ++g)
    lifted.translate_classes.push_back(path_class(cover, basis, deck_translate_path(cover, Element(g), ell_lift)));

  const std::size_t rank = basis.rank();
  lifted.matrix = QMatrix::identity(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const Chain1 &z = basis.cycles()[k];
    for (std::size_t g = 0; g < order; ++g) {
      const Rational xi = cocycle_eval(Edge{Element(g), slide.petal}, z);
      if (sgn(xi) == 0)
        continue;
      for (std::size_t r = 0; r < rank; ++r)
        lifted.matrix(r, k) += xi * lifted.translate_classes[g][r];
    }
  }
  return lifted;
}

std::vector<Chain1> lifted_chain_map(const SlideAutomorphism &slide, const CoverGraph &cover) {
  require_lift(slide, cover);
  std::vector<Chain1> map;
  map.reserve(cover.edge_count());
  for (std::size_t id = 0; id < cover.edge_count(); ++id) {
    const Edge e = cover.edge_from_id(id);
    const Word image = apply_automorphism(slide, Word::generator(e.petal));
    map.push_back(Chain1::of_path(lift_word(cover, image, e.vertex)));
  }
  return map;
}

Chain1 apply_chain_map(const CoverGraph &cover, const std::vector<Chain1> &chain_map, const Chain1 &z) {
  Chain1 out;
  for (const auto &[e, c] : z.terms())
    out += c * chain_map.at(cover.edge_id(e));
  return out;
}

QMatrix lifted_action_oracle(const SlideAutomorphism &slide, const CoverGraph &cover, const HomologyBasis &basis) {
  const auto chain_map = lifted_chain_map(slide, cover);
  std::vector<QVector> columns;
  columns.reserve(basis.rank());
  for (const auto &z : basis.cycles())
    columns.push_back(chain_to_class(cover, basis, apply_chain_map(cover, chain_map, z)));
  return QMatrix::from_columns(columns, basis.rank());
}

HomologyClass slide_increment(const LiftedSlide &lifted, const CoverGraph &cover, const HomologyBasis &basis,
                              const HomologyClass &w) {
  const Chain1 z = class_to_chain(basis, w);
  HomologyClass delta(basis.rank());
  for (std::size_t g = 0; g < cover.vertex_count(); ++g) {
    const Rational xi = cocycle_eval(Edge{Element(g), lifted.slide.petal}, z);
    if (sgn(xi) != 0)
      delta = delta + xi * lifted.translate_classes[g];
  }
  return delta;
}

HomologyClass iterate_closed_form(const LiftedSlide &lifted, const CoverGraph &cover, const HomologyBasis &basis,
                                  long long d, const HomologyClass &w) {
  return w + Rational(static_cast<long>(d)) * slide_increment(lifted, cover, basis, w);
}

} // namespace rosecover
