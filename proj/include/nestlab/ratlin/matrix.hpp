#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/ratlin/rational.hpp"

namespace nestlab {

using Vector = std::vector<Rational>;

inline bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size())
    throw Error(Errc::dimension_mismatch, "dot product of lengths " + std::to_string(a.size()) +
                                              " and " + std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

/// Unit vector e_i (0-based) of length n.
inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(Errc::dimension_mismatch, "row " + std::to_string(i) + " has length " +
                                                  std::to_string(rows[i].size()) + ", expected " +
                                                  std::to_string(cols));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix unit with a single 1 at (i, j), 0-based.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  }

  /// Outer product column * row, i.e. the operator x -> (row . x) column.
  static Matrix outer(std::span<const Rational> column, std::span<const Rational> row) {
    Matrix m(column.size(), row.size());
    for (std::size_t i = 0; i < column.size(); ++i)
      if (column[i] != 0)
        for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = column[i] * row[j];
    return m;
  }

  /// Inverse of flatten().
  static Matrix unflatten(std::span<const Rational> flat, std::size_t rows, std::size_t cols) {
    if (flat.size() != rows * cols) throw Error(Errc::dimension_mismatch, "flat length mismatch");
    Matrix m(rows, cols);
    std::copy(flat.begin(), flat.end(), m.data_.begin());
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  Vector row_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
  }

  /// Row-major copy of the entries.
  const Vector& flatten() const noexcept { return data_; }

  bool is_zero() const { return nestlab::is_zero(data_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector operator*(std::span<const Rational> x) const {
    if (x.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const Rational& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(Errc::dimension_mismatch, "matrix sum shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

}  // namespace nestlab
