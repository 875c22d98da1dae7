#include "rosecover/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rosecover {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector> &columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

QMatrix QMatrix::operator*(const QMatrix &rhs) const {
  assert(cols_ == rhs.rows_);
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational &a = (*this)(i, k);
      if (sgn(a) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0)
          out(i, j) += a * rhs(k, j);
    }
  return out;
}

QVector QMatrix::operator*(const QVector &v) const {
  assert(cols_ == v.size());
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0)
        out[i] += (*this)(i, k) * v[k];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix &rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix &rhs) const {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix &QMatrix::operator*=(const Rational &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational &x) { return sgn(x) == 0; });
}

Rational QMatrix::trace() const {
  assert(rows_ == cols_);
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::pow(unsigned exponent) const {
  assert(rows_ == cols_);
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

std::size_t rank_of(std::vector<QVector> rows) {
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0)
        continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(rows[rank][k]) != 0)
          rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of(const QMatrix &m) {
  std::vector<QVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r));
  return rank_of(std::move(rows));
}

Rational determinant(QMatrix m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == n)
      return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(m(c, k), m(pivot, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0)
        continue;
      const Rational factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k)
        m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

bool is_zero(const QVector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return sgn(x) == 0; });
}

QVector operator+(const QVector &a, const QVector &b) {
  assert(a.size() == b.size());
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

QVector operator-(const QVector &a, const QVector &b) {
  assert(a.size() == b.size());
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

QVector operator*(const Rational &s, const QVector &v) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = s * v[i];
  return out;
}

QVector unit_vector(std::size_t size, std::size_t index) {
  QVector v(size);
  v[index] = 1;
  return v;
}

} // namespace rosecover
