#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rosecover/matrix.hpp"

using namespace rosecover;

TEST_CASE("identity, products and powers") {
  QMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 1) = 1;
  CHECK(m * QMatrix::identity(2) == m);
  CHECK(m.pow(0) == QMatrix::identity(2));
  const QMatrix m5 = m.pow(5);
  CHECK(m5(0, 1) == 5);
  CHECK(m5(0, 0) == 1);
  CHECK(m.trace() == 2);
  CHECK(determinant(m) == 1);
  CHECK((m - QMatrix::identity(2)).pow(2).is_zero());
  const QVector v{Rational(1, 2), Rational(3)};
  CHECK(m * v == QVector{Rational(7, 2), Rational(3)});
}

TEST_CASE("rank of small configurations") {
  CHECK(rank_of(std::vector<QVector>{}) == 0);
  CHECK(rank_of({QVector{0, 0}, QVector{0, 0}}) == 0);
  CHECK(rank_of({QVector{1, 2}, QVector{2, 4}}) == 1);
  CHECK(rank_of({QVector{1, 2, 3}, QVector{0, 1, 1}, QVector{1, 3, 4}}) == 2);
  CHECK(rank_of({QVector{Rational(1, 3), 0}, QVector{0, Rational(-2, 7)}}) == 2);
  QMatrix sing(2, 2);
  sing(0, 0) = 2;
  sing(0, 1) = 4;
  sing(1, 0) = 1;
  sing(1, 1) = 2;
  CHECK(determinant(sing) == 0);
  CHECK(rank_of(sing) == 1);
}

TEST_CASE("rank agrees with the fraction-free oracle on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    std::vector<QVector> m(rows, QVector(cols));
    for (auto &r : m)
      for (auto &x : r)
        x = rng() % 3 == 0 ? Rational(0) : Rational(long(rng() % 7) - 3, 1 + rng() % 4);
    // Plant a dependency now and then.
    if (rows > 2 && trial % 3 == 0)
      m[2] = m[0] + Rational(2) * m[1];
    CHECK(rank_of(m) == oracle::rank(m));
  }
}
