#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "rosecover/battery.hpp"
#include "rosecover/cover.hpp"
#include "rosecover/error.hpp"

using namespace rosecover;

namespace {

Word random_word(std::mt19937_64 &rng, int n, std::size_t max_len) {
  Word w;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back(Letter{1 + int(rng() % std::uint64_t(n)), rng() % 2 ? 1 : -1});
  return w;
}

} // namespace

TEST_CASE("build_cover") {
  SUBCASE("trivial group is the rose") {
    const auto y = fixtures::trivial(3);
    CHECK(y.vertex_count() == 1);
    CHECK(y.edge_count() == 3);
    for (int i = 1; i <= 3; ++i)
      CHECK(y.head(Edge{0, i}) == 0);
  }
  SUBCASE("mod-2 homology cover") {
    const auto y = fixtures::klein();
    CHECK(y.vertex_count() == 4);
    CHECK(y.edge_count() == 8);
  }
  SUBCASE("cyclic(3) with a loop petal") {
    const auto y = fixtures::cyclic3();
    CHECK(y.vertex_count() == 3);
    CHECK(y.edge_count() == 9);
    int loops = 0;
    for (std::size_t id = 0; id < y.edge_count(); ++id) {
      const Edge e = y.edge_from_id(id);
      if (y.head(e) == y.tail(e)) {
        ++loops;
        CHECK(e.petal == 3);
      }
    }
    CHECK(loops == 3);
  }
  SUBCASE("non-surjective images") {
    CHECK_THROWS_AS(fixtures::make_cover({"cyclic", {3}}, {0, 0}), Error);
    try {
      fixtures::make_cover({"elementary_abelian", {2, 2}}, {1, 1, 0});
      FAIL("accepted non-generating images");
    } catch (const Error &e) {
      CHECK(e.code() == Errc::Disconnected);
    }
    CHECK_THROWS_AS(fixtures::make_cover({"cyclic", {3}}, {1, 7}), Error);
  }
}

TEST_CASE("lift_word") {
  const auto y = fixtures::klein();
  const Element qa = y.image(1);

  const EdgePath empty = lift_word(y, Word{}, 2);
  CHECK(empty.steps.empty());
  CHECK(path_end(y, empty) == 2);

  const EdgePath a2 = lift_word(y, parse_word("a1.a1"), 0);
  CHECK(a2.steps.size() == 2);
  CHECK(is_closed(y, a2));
  CHECK(a2.steps[0].edge == Edge{0, 1});
  CHECK(a2.steps[1].edge == Edge{qa, 1});

  const EdgePath a = lift_word(y, parse_word("a1"), 0);
  CHECK_FALSE(is_closed(y, a));
  CHECK(path_end(y, a) == qa);

  const EdgePath back = lift_word(y, parse_word("a2^-1"), 0);
  CHECK(back.steps.front().edge == Edge{y.group().inv(y.image(2)), 2});
  CHECK_FALSE(back.steps.front().forward);
}

TEST_CASE("lifting laws on random words") {
  std::mt19937_64 rng(3);
  for (const auto &c : standard_battery()) {
    if (c.spec.group.order() > 8)
      continue;
    const CoverGraph y = build_cover(c.spec);
    const auto &g = y.group();
    for (int trial = 0; trial < 20; ++trial) {
      const Word u = random_word(rng, y.n(), 8), v = random_word(rng, y.n(), 8);
      for (std::size_t s = 0; s < y.vertex_count(); ++s) {
        const Element start = Element(s);
        const EdgePath lu = lift_word(y, u, start);
        REQUIRE(is_valid_path(y, lu));
        // endpoint law
        CHECK(path_end(y, lu) == g.mul(start, y.evaluate(u)));
        // equivariance
        const Element h = Element(rng() % y.vertex_count());
        CHECK(deck_translate_path(y, h, lu) == lift_word(y, u, g.mul(h, start)));
        // concatenation
        EdgePath cat = lu;
        const EdgePath lv = lift_word(y, v, path_end(y, lu));
        cat.steps.insert(cat.steps.end(), lv.steps.begin(), lv.steps.end());
        CHECK(lift_word(y, u * v, start) == cat);
      }
    }
  }
}

TEST_CASE("deck_translate_path") {
  const auto y = fixtures::klein();
  const Element qb = y.image(2);
  const EdgePath A = lift_word(y, parse_word("a1.a1"), 0);
  CHECK(deck_translate_path(y, 0, A) == A);
  CHECK(deck_translate_path(y, qb, A) == lift_word(y, parse_word("a1.a1"), qb));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Word w;
    for (int i = 0; i < 6; ++i)
      w.letters.push_back(Letter{1 + int(rng() % 2), rng() % 2 ? 1 : -1});
    const EdgePath p = lift_word(y, w, Element(rng() % 4));
    for (Element g = 0; g < 4; ++g)
      for (Element h = 0; h < 4; ++h)
        CHECK(deck_translate_path(y, h, deck_translate_path(y, g, p)) ==
              deck_translate_path(y, y.group().mul(h, g), p));
  }
}

TEST_CASE("petal_complement_components") {
  SUBCASE("trivial group") {
    const auto y = fixtures::trivial(3);
    const auto comps = petal_complement_components(y, 1);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices == std::vector<Element>{0});
    CHECK(comps[0].edges.size() == 2);
  }
  SUBCASE("mod-2 cover, petal a") {
    const auto y = fixtures::klein();
    const auto comps = petal_complement_components(y, 1);
    REQUIRE(comps.size() == 2);
    for (const auto &c : comps) {
      CHECK(c.vertices.size() == 2);
      CHECK(c.edges.size() == 2);
      for (const auto &e : c.edges)
        CHECK(e.petal == 2);
    }
    CHECK(comps[0].vertices == std::vector<Element>{0, y.image(2)});
  }
  SUBCASE("cyclic(3), petal 1") {
    const auto comps = petal_complement_components(fixtures::cyclic3(), 1);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices.size() == 3);
  }
  SUBCASE("components are the cosets of G_0 across the battery") {
    for (const auto &c : standard_battery()) {
      const CoverGraph y = build_cover(c.spec);
      for (int j = 1; j <= y.n(); ++j) {
        const auto comps = petal_complement_components(y, j);
        const auto cosets = left_cosets(y.group(), petal_complement_subgroup(y, j));
        REQUIRE(comps.size() == cosets.size());
        std::set<Edge> all;
        for (std::size_t k = 0; k < comps.size(); ++k) {
          CHECK(comps[k].vertices == cosets[k]);
          all.insert(comps[k].edges.begin(), comps[k].edges.end());
        }
        CHECK(comps.front().vertices.front() == 0);
        std::set<Edge> expected;
        for (std::size_t id = 0; id < y.edge_count(); ++id)
          if (y.edge_from_id(id).petal != j)
            expected.insert(y.edge_from_id(id));
        CHECK(all == expected);
      }
    }
  }
}

TEST_CASE("DOT export") {
  const auto y = fixtures::klein();
  const std::string dot = to_dot(y);
  CHECK(dot.rfind("digraph cover {", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1))
    ++arrows;
  CHECK(arrows == 8);
  CHECK(dot.find("label=\"x1x2\"") != std::string::npos);
  CHECK(dot.find("color=\"blue\"") != std::string::npos);
}
