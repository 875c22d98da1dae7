#include <doctest.h>

#include "fixtures.hpp"
#include "rosecover/error.hpp"
#include "rosecover/orbit_mover.hpp"
#include "rosecover/serialize.hpp"

using namespace rosecover;

TEST_CASE("rationals") {
  CHECK(rational_to_string(Rational(3)) == "3");
  CHECK(rational_to_string(Rational(-2, 4)) == "-1/2");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+4/2") == 2);
  for (const char *bad : {"", "1/0", "a", "1/", "/2", "1.5", "1 ", "--1", "1/-2"}) {
    try {
      parse_rational(bad);
      FAIL("accepted '" << bad << "'");
    } catch (const Error &e) {
      CHECK(e.code() == Errc::Parse);
    }
  }
  CHECK(parse_rational_list("1,0,-1/2") == QVector{1, 0, Rational(-1, 2)});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), Error);
}

TEST_CASE("vectors and matrices") {
  const QVector v{1, Rational(-5, 3), 0};
  CHECK(to_json(v).dump() == R"(["1","-5/3","0"])");
  CHECK(vector_from_json(to_json(v)) == v);
  const QMatrix m = QMatrix::from_rows({QVector{1, 2}, QVector{Rational(1, 2), 0}}, 2);
  CHECK(matrix_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(vector_from_json(json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"],["1","2"]])")), Error);
}

TEST_CASE("groups") {
  const FiniteGroup &g = builtin_group({"dihedral", {3}});
  const FiniteGroup h = group_from_json(to_json(g));
  CHECK(h.mul_table() == g.mul_table());
  CHECK(h.labels() == g.labels());
  CHECK(group_from_json(json::parse(R"({"order":2,"mul":[[0,1],[1,0]]})")).order() == 2);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order":3,"mul":[[0,1],[1,0]]})")), Error);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"mul":[[0,1],[1,1]]})")), Error);
}

TEST_CASE("edge paths") {
  const auto y = fixtures::klein();
  const EdgePath p = lift_word(y, parse_word("a1.a2^-1"), 0);
  const json j = to_json(p);
  CHECK(j["steps"].size() == 2);
  const EdgePath q = edge_path_from_json(j);
  CHECK(q.start == p.start);
  CHECK(Chain1::of_path(q) == Chain1::of_path(p));
  CHECK_THROWS_AS(edge_path_from_json(json::parse(R"({"start":0,"steps":[[0,1,2]]})")), Error);
}

TEST_CASE("certificates round trip") {
  const auto y = fixtures::klein3();
  const auto b = cycle_basis(y);
  const HomologyClass v = unit_vector(b.rank(), 2);
  const auto cert = move_vector(y, b, v);
  const json j = to_json(cert);
  const auto back = certificate_from_json(j);
  CHECK(back.petal == cert.petal);
  CHECK(back.pairing_edge == cert.pairing_edge);
  CHECK(back.ell == cert.ell);
  CHECK(back.ell_class == cert.ell_class);
  CHECK(back.orbit_rank_value == cert.orbit_rank_value);
  CHECK(back.increment == cert.increment);
  CHECK(back.matrix == cert.matrix);
  CHECK(back.iterates_checked == cert.iterates_checked);
  CHECK(to_json(back) == j);
  CHECK(verify_certificate(y, b, v, back).ok);

  json bad = j;
  bad.erase("matrix");
  CHECK_THROWS_AS(certificate_from_json(bad), std::exception);
}
