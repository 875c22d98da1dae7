#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rosecover/edge_slide.hpp"
#include "rosecover/error.hpp"
#include "rosecover/orbit_mover.hpp"

using namespace rosecover;

namespace {

bool has_failure(const VerificationResult &r, const std::string &name) {
  return std::find(r.failures.begin(), r.failures.end(), name) != r.failures.end();
}

} // namespace

TEST_CASE("find_pairing_edge") {
  const auto y = fixtures::klein();
  const auto b = cycle_basis(y);
  CHECK(find_pairing_edge(y, b, fixtures::lift_class(y, b, "a1.a1")) == Edge{0, 1});
  CHECK(find_pairing_edge(y, b, fixtures::lift_class(y, b, "a2.a2", y.image(1))) == Edge{y.image(1), 2});
  CHECK(find_pairing_edge(y, b, fixtures::lift_class(y, b, "a1.a1", y.image(2))) == Edge{y.image(2), 1});
  // the a-edges cancel, leaving b^2 at q(a)
  CHECK(find_pairing_edge(y, b, fixtures::lift_class(y, b, "a2.a1.a2.a2.a1^-1.a2^-1")) == Edge{y.image(1), 2});
  try {
    find_pairing_edge(y, b, HomologyClass(5));
    FAIL("paired the zero vector");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::ZeroVector);
  }
}

TEST_CASE("fundamental_loop_word") {
  SUBCASE("trivial group") {
    const auto y = fixtures::trivial(3);
    const auto comps = petal_complement_components(y, 1);
    const auto b0 = cycle_basis(y, comps.front());
    CHECK(format_word(fundamental_loop_word(y, b0, Edge{0, 2})) == "a2");
    CHECK(format_word(fundamental_loop_word(y, b0, Edge{0, 3})) == "a3");
  }
  SUBCASE("mod-2 cover, complement of a") {
    const auto y = fixtures::klein();
    const auto comps = petal_complement_components(y, 1);
    const auto b0 = cycle_basis(y, comps.front());
    REQUIRE(b0.rank() == 1);
    CHECK(format_word(fundamental_loop_word(y, b0, b0.cotree().front())) == "a2.a2");
  }
  SUBCASE("round trip over every non-tree edge") {
    for (const auto &y : {fixtures::klein3(), fixtures::cyclic3(),
                          fixtures::make_cover({"symmetric", {3}}, {1, 3, 1})}) {
      for (int j = 1; j <= y.n(); ++j) {
        const auto comps = petal_complement_components(y, j);
        const auto b0 = cycle_basis(y, comps.front());
        for (std::size_t k = 0; k < b0.rank(); ++k) {
          const Word w = fundamental_loop_word(y, b0, b0.cotree()[k]);
          CHECK_FALSE(w.uses_petal(j));
          const EdgePath p = lift_word(y, w, b0.root());
          CHECK(is_closed(y, p));
          CHECK(Chain1::of_path(p) == b0.cycles()[k]);
        }
      }
    }
  }
}

TEST_CASE("find_slide_loop") {
  SUBCASE("trivial group") {
    const auto y = fixtures::trivial(3);
    CHECK(format_word(find_slide_loop(y, cycle_basis(y), 1)) == "a2");
  }
  SUBCASE("rank two") {
    for (const auto &y : {fixtures::trivial(2), fixtures::klein()}) {
      try {
        find_slide_loop(y, cycle_basis(y), 1);
        FAIL("searched in rank 2");
      } catch (const Error &e) {
        CHECK(e.code() == Errc::RankTooSmall);
      }
    }
  }
  SUBCASE("loop properties") {
    for (const auto &y : {fixtures::klein3(), fixtures::cyclic3(),
                          fixtures::make_cover({"symmetric", {3}}, {1, 3, 1}),
                          fixtures::make_cover({"dihedral", {4}}, {1, 4, 0, 1})}) {
      const auto b = cycle_basis(y);
      for (int j = 1; j <= y.n(); ++j) {
        const Word ell = find_slide_loop(y, b, j);
        CHECK_FALSE(ell.uses_petal(j));
        CHECK(free_reduce(ell) == ell);
        CHECK(y.evaluate(ell) == 0);
        const EdgePath p = lift_word(y, ell, 0);
        CHECK(is_closed(y, p));
        const HomologyClass c = path_class(y, b, p);
        CHECK(orbit_rank(y, b, c) == y.vertex_count());
        CHECK(oracle::orbit_rank(y, Chain1::of_path(p)) == y.vertex_count());
      }
    }
  }
  SUBCASE("budget") {
    const auto y = fixtures::klein3();
    try {
      find_slide_loop(y, cycle_basis(y), 1, SearchOptions{0, 0});
      FAIL("searched with no budget");
    } catch (const Error &e) {
      CHECK(e.code() == Errc::SearchExhausted);
    }
  }
}

TEST_CASE("move_vector") {
  SUBCASE("trivial group") {
    const auto y = fixtures::trivial(3);
    const auto b = cycle_basis(y);
    const HomologyClass v = unit_vector(3, 0);
    const auto cert = move_vector(y, b, v);
    CHECK(cert.petal == 1);
    CHECK(cert.pairing_edge == Edge{0, 1});
    CHECK(format_word(cert.ell) == "a2");
    CHECK(cert.orbit_rank_value == 1);
    CHECK(cert.increment == unit_vector(3, 1));
    CHECK(verify_certificate(y, b, v, cert).ok);
  }
  SUBCASE("every basis vector of the Klein cover of rank 3") {
    const auto y = fixtures::klein3();
    const auto b = cycle_basis(y);
    for (std::size_t k = 0; k < b.rank(); ++k) {
      const HomologyClass v = unit_vector(b.rank(), k);
      const auto cert = move_vector(y, b, v);
      CHECK(cert.orbit_rank_value == 4);
      CHECK(cert.iterates_checked == 10);
      CHECK_FALSE(is_zero(cert.increment));
      const auto r = verify_certificate(y, b, v, cert);
      CHECK(r.ok);
      CHECK(r.failures.empty());
      HomologyClass x = v;
      for (int d = 0; d < 4; ++d) {
        CHECK(x == v + Rational(d) * cert.increment);
        x = cert.matrix * x;
      }
    }
  }
  SUBCASE("cyclic(3): the petal mapping to the identity") {
    const auto y = fixtures::cyclic3();
    const auto b = cycle_basis(y);
    const HomologyClass v = fixtures::lift_class(y, b, "a3");
    const auto cert = move_vector(y, b, v);
    CHECK(cert.petal == 3);
    CHECK(cert.pairing_edge == Edge{0, 3});
    CHECK(cert.orbit_rank_value == 3);
    CHECK(verify_certificate(y, b, v, cert).ok);
  }
  SUBCASE("errors") {
    const auto y = fixtures::klein3();
    const auto b = cycle_basis(y);
    CHECK_THROWS_AS(move_vector(y, b, HomologyClass(b.rank())), Error);
    const auto y2 = fixtures::klein();
    try {
      move_vector(y2, cycle_basis(y2), unit_vector(5, 0));
      FAIL("moved in rank 2");
    } catch (const Error &e) {
      CHECK(e.code() == Errc::RankTooSmall);
    }
  }
}

TEST_CASE("verify_certificate rejects tampering") {
  const auto y = fixtures::klein3();
  const auto b = cycle_basis(y);
  const HomologyClass v = unit_vector(b.rank(), 0);
  const auto cert = move_vector(y, b, v);
  REQUIRE(verify_certificate(y, b, v, cert).ok);

  SUBCASE("loop no longer closed") {
    auto bad = cert;
    bad.ell = free_reduce(bad.ell * parse_word(bad.petal == 2 ? "a1" : "a2"));
    const auto r = verify_certificate(y, b, v, bad);
    CHECK_FALSE(r.ok);
    CHECK(has_failure(r, "property 2"));
  }
  SUBCASE("zero increment") {
    auto bad = cert;
    bad.increment = HomologyClass(b.rank());
    const auto r = verify_certificate(y, b, v, bad);
    CHECK_FALSE(r.ok);
    CHECK(has_failure(r, "increment nonzero"));
  }
  SUBCASE("wrong orbit rank") {
    auto bad = cert;
    bad.orbit_rank_value = 3;
    CHECK(has_failure(verify_certificate(y, b, v, bad), "orbit rank value"));
  }
  SUBCASE("wrong vector") {
    const auto r = verify_certificate(y, b, HomologyClass(b.rank()), cert);
    CHECK_FALSE(r.ok);
  }
}

TEST_CASE("move_vector is deterministic") {
  const auto y = fixtures::make_cover({"symmetric", {3}}, {1, 3, 1});
  const auto b = cycle_basis(y);
  const HomologyClass v = unit_vector(b.rank(), 4);
  const auto c1 = move_vector(y, b, v);
  const auto c2 = move_vector(y, b, v);
  CHECK(c1.ell == c2.ell);
  CHECK(c1.matrix == c2.matrix);
  CHECK(c1.increment == c2.increment);
}
