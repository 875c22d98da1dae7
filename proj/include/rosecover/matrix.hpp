#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace rosecover {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. All operations are exact.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static QMatrix from_columns(const std::vector<QVector> &columns, std::size_t rows);
  static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector column(std::size_t c) const;
  QVector row(std::size_t r) const;

  QMatrix operator*(const QMatrix &rhs) const;
  QVector operator*(const QVector &v) const;
  QMatrix operator+(const QMatrix &rhs) const;
  QMatrix operator-(const QMatrix &rhs) const;
  QMatrix &operator*=(const Rational &s);

  bool operator==(const QMatrix &rhs) const = default;

  bool is_zero() const;
  Rational trace() const;
  QMatrix pow(unsigned exponent) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of the span of the given vectors (Gaussian elimination over Q).
std::size_t rank_of(std::vector<QVector> vectors);
std::size_t rank_of(const QMatrix &m);
Rational determinant(QMatrix m);

bool is_zero(const QVector &v);
QVector operator+(const QVector &a, const QVector &b);
QVector operator-(const QVector &a, const QVector &b);
QVector operator*(const Rational &s, const QVector &v);
QVector unit_vector(std::size_t size, std::size_t index);

} // namespace rosecover
