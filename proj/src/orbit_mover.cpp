#include "rosecover/orbit_mover.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "rosecover/error.hpp"

namespace rosecover {

Edge find_pairing_edge(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v) {
  if (is_zero(v))
    throw Error(Errc::ZeroVector, "cannot move the zero class");
  const Chain1 z = class_to_chain(basis, v);
  for (int j = 1; j <= cover.n(); ++j)
    for (std::size_t g = 0; g < cover.vertex_count(); ++g)
      if (sgn(cocycle_eval(Edge{Element(g), j}, z)) != 0)
        return Edge{Element(g), j};
  // A nonzero cycle has nonzero coefficient on some edge.
  throw std::logic_error("nonzero class with empty support");
}

Word fundamental_loop_word(const CoverGraph &cover, const HomologyBasis &component_basis, const Edge &e) {
  if (!component_basis.cotree_index(e))
    throw Error(Errc::InvalidArgument, "edge (" + std::to_string(e.vertex) + ", " + std::to_string(e.petal) +
                                           ") is not a non-tree edge of the subgraph");
  Word w;
  for (const auto &step : component_basis.tree_path_from_root(cover.tail(e)))
    w.letters.push_back(Letter{step.edge.petal, step.forward ? 1 : -1});
  w.letters.push_back(Letter{e.petal, 1});
  const auto back = component_basis.tree_path_from_root(cover.head(e));
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    w.letters.push_back(Letter{it->edge.petal, it->forward ? -1 : 1});
  return free_reduce(w);
}

namespace {

/// Orbit data of the fundamental cycles of Y_0, expressed in H_1(Y).
class LoopSearch {
public:
  LoopSearch(const CoverGraph &cover, const HomologyBasis &basis, int petal)
      : cover_(cover), basis_(basis),
        component_(petal_complement_components(cover, petal).front()),
        component_basis_(cycle_basis(cover, component_)) {
    const std::size_t order = cover.vertex_count();
    orbit_.resize(order);
    for (std::size_t g = 0; g < order; ++g)
      for (const auto &z : component_basis_.cycles())
        orbit_[g].push_back(chain_to_class(cover, basis, z.translated(cover, Element(g))));
  }

  std::size_t size() const { return component_basis_.rank(); }

  bool full_orbit(const std::vector<long long> &coeffs) const {
    std::vector<QVector> vectors;
    vectors.reserve(orbit_.size());
    for (const auto &images : orbit_) {
      QVector x(basis_.rank());
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
          x = x + Rational(static_cast<long>(coeffs[k])) * images[k];
      if (is_zero(x))
        return false;
      vectors.push_back(std::move(x));
    }
    return rank_of(std::move(vectors)) == orbit_.size();
  }

  Word loop(const std::vector<long long> &coeffs) const {
    Word ell;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0)
        ell = ell * fundamental_loop_word(cover_, component_basis_, component_basis_.cotree()[k]).power(coeffs[k]);
    return free_reduce(ell);
  }

private:
  const CoverGraph &cover_;
  const HomologyBasis &basis_;
  ComplementComponent component_;
  HomologyBasis component_basis_;
  std::vector<std::vector<QVector>> orbit_; // [g][k] = g . z_k
};

constexpr std::size_t kRandomRoundSize = 64;

} // namespace

Word find_slide_loop(const CoverGraph &cover, const HomologyBasis &basis, int petal, const SearchOptions &options) {
  if (petal < 1 || petal > cover.n())
    throw Error(Errc::InvalidArgument, "petal " + std::to_string(petal) + " out of range");
  if (cover.n() <= 2)
    throw Error(Errc::RankTooSmall, "no slide loop with a free orbit exists on a rose with " +
                                        std::to_string(cover.n()) + " petals");
  const LoopSearch search(cover, basis, petal);
  const std::size_t m = search.size();
  std::size_t tried = 0;
  std::vector<long long> c(m);

  auto attempt = [&]() -> bool {
    if (tried >= options.max_candidates)
      throw Error(Errc::SearchExhausted, "no loop found among " + std::to_string(tried) + " candidates");
    ++tried;
    return search.full_orbit(c);
  };

  // Single fundamental cycles, then 0/1 vectors of weight 2 and 3.
  for (std::size_t weight = 1; weight <= 3 && weight <= m; ++weight) {
    std::vector<std::size_t> idx(weight);
    for (std::size_t i = 0; i < weight; ++i)
      idx[i] = i;
    while (true) {
      std::fill(c.begin(), c.end(), 0);
      for (auto i : idx)
        c[i] = 1;
      if (attempt())
        return search.loop(c);
      // Next combination in lexicographic order.
      std::size_t i = weight;
      while (i > 0 && idx[i - 1] == m - weight + (i - 1))
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t k = i; k < weight; ++k)
        idx[k] = idx[k - 1] + 1;
    }
  }

  // Seeded random integer vectors with entries in [-bound, bound].
  std::mt19937_64 rng(options.seed);
  for (long long bound = 1;; bound = bound < (1LL << 40) ? bound * 2 : bound) {
    for (std::size_t r = 0; r < kRandomRoundSize; ++r) {
      for (auto &x : c)
        x = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      if (attempt())
        return search.loop(c);
    }
  }
}

MoveCertificate move_vector(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                            const MoveOptions &options) {
  if (v.size() != basis.rank())
    throw Error(Errc::InvalidArgument, "vector has " + std::to_string(v.size()) + " coordinates, H_1 has rank " +
                                           std::to_string(basis.rank()));
  const Edge pairing = find_pairing_edge(cover, basis, v);
  const Word ell = find_slide_loop(cover, basis, pairing.petal, options.search);
  const LiftedSlide lifted = lifted_action_formula(make_slide(cover.n(), pairing.petal, ell), cover, basis);

  MoveCertificate cert;
  cert.petal = pairing.petal;
  cert.pairing_edge = pairing;
  cert.ell = ell;
  cert.ell_class = lifted.ell_class;
  cert.orbit_rank_value = orbit_rank(cover, basis, lifted.ell_class);
  cert.increment = slide_increment(lifted, cover, basis, v);
  cert.matrix = lifted.matrix;
  cert.iterates_checked = options.depth;

  const auto check = verify_certificate(cover, basis, v, cert);
  if (!check.ok) {
    std::string what = "constructed certificate failed verification:";
    for (const auto &f : check.failures)
      what += " [" + f + "]";
    throw std::logic_error(what);
  }
  return cert;
}

VerificationResult verify_certificate(const CoverGraph &cover, const HomologyBasis &basis, const HomologyClass &v,
                                      const MoveCertificate &cert) {
  VerificationResult result;
  auto fail = [&](const std::string &what) {
    result.ok = false;
    result.failures.push_back(what);
  };
  const std::size_t rank = basis.rank();
  const std::size_t order = cover.vertex_count();
  if (v.size() != rank) {
    fail("vector length");
    return result;
  }
  if (cert.petal < 1 || cert.petal > cover.n()) {
    fail("petal range");
    return result;
  }

  const bool property1 = cert.ell.max_petal() <= cover.n() &&
                         std::all_of(cert.ell.letters.begin(), cert.ell.letters.end(),
                                     [](const Letter &l) { return l.petal >= 1; }) &&
                         !cert.ell.uses_petal(cert.petal);
  if (!property1)
    fail("property 1");
  const bool property2 = property1 && cover.evaluate(cert.ell) == FiniteGroup::identity();
  if (property1 && !property2)
    fail("property 2");

  if (property2) {
    const HomologyClass ell_class = path_class(cover, basis, lift_word(cover, cert.ell, FiniteGroup::identity()));
    if (ell_class != cert.ell_class)
      fail("ell class");
    if (orbit_rank(cover, basis, ell_class) != order)
      fail("property 3");
  }
  if (cert.orbit_rank_value != order)
    fail("orbit rank value");

  const Chain1 z = class_to_chain(basis, v);
  if (cert.pairing_edge.petal != cert.petal || cert.pairing_edge.vertex < 0 ||
      std::size_t(cert.pairing_edge.vertex) >= order || sgn(cocycle_eval(cert.pairing_edge, z)) == 0)
    fail("pairing edge");

  if (cert.increment.size() != rank) {
    fail("increment length");
    return result;
  }
  if (is_zero(cert.increment))
    fail("increment nonzero");

  if (cert.matrix.rows() != rank || cert.matrix.cols() != rank) {
    fail("matrix consistency");
    return result;
  }
  if (property2) {
    const SlideAutomorphism slide{cover.n(), cert.petal, cert.ell};
    const QMatrix oracle = lifted_action_oracle(slide, cover, basis);
    const QMatrix formula = lifted_action_formula(slide, cover, basis).matrix;
    if (oracle != formula || cert.matrix != oracle)
      fail("matrix consistency");
    if (oracle * v - v != cert.increment)
      fail("increment value");
  }

  if (cert.iterates_checked < 0) {
    fail("iterates");
    return result;
  }
  std::vector<QVector> iterates;
  QVector x = v;
  bool closed_form = true;
  for (int d = 0; d <= cert.iterates_checked; ++d) {
    if (x != v + Rational(d) * cert.increment)
      closed_form = false;
    iterates.push_back(x);
    x = cert.matrix * x;
  }
  if (!closed_form)
    fail("iterates closed form");
  for (std::size_t a = 0; a < iterates.size(); ++a)
    for (std::size_t b = a + 1; b < iterates.size(); ++b)
      if (iterates[a] == iterates[b]) {
        fail("iterates distinct");
        a = iterates.size();
        break;
      }
  return result;
}

} // namespace rosecover
