#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/ratlin/matrix.hpp"

namespace nestlab {

/// Incrementally maintained reduced row-echelon basis. Rows stay sorted by pivot column, each
/// pivot entry is 1 and every other row is zero in that column.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t n) : n_(n) {}

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after eliminating every pivot column.
  Vector reduce(Vector v) const {
    require_length(v.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p] == 0) continue;
      const Rational c = v[p];
      const Vector& r = rows_[k];
      for (std::size_t j = p; j < n_; ++j)
        if (r[j] != 0) v[j] -= c * r[j];
    }
    return v;
  }

  bool contains(std::span<const Rational> v) const {
    return is_zero(reduce(Vector(v.begin(), v.end())));
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(std::span<const Rational> v) {
    if (rows_.size() == n_) {
      require_length(v.size());
      return false;
    }
    Vector r = reduce(Vector(v.begin(), v.end()));
    auto lead = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (lead == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - r.begin());
    const Rational inv = 1 / r[p];
    for (std::size_t j = p; j < n_; ++j)
      if (r[j] != 0) r[j] *= inv;
    for (auto& row : rows_) {
      if (row[p] == 0) continue;
      const Rational c = row[p];
      for (std::size_t j = p; j < n_; ++j)
        if (r[j] != 0) row[j] -= c * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
  }

  Matrix to_matrix() const { return Matrix::from_rows(rows_, n_); }

 private:
  void require_length(std::size_t len) const {
    if (len != n_)
      throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(len) +
                                                " in ambient dimension " + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Unique reduced row-echelon form of m, zero rows dropped.
inline Matrix rref(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.to_matrix();
}

inline std::size_t rank(const Matrix& m) { return rref(m).rows(); }

/// Basis of { x : m x = 0 }, one vector per free column of rref(m).
inline std::vector<Vector> kernel(const Matrix& m) {
  EchelonBasis e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  const auto& piv = e.pivots();
  std::vector<Vector> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (k < piv.size() && piv[k] == j) {
      ++k;
      continue;
    }
    Vector x(m.cols(), Rational(0));
    x[j] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -e.rows()[r][j];
    out.push_back(std::move(x));
  }
  return out;
}

/// A subspace of Q^n held by its reduced row-echelon basis, so equality is representation
/// equality. Dual subspaces (of row functionals) use the same type.
class Subspace {
 public:
  static Subspace zero(std::size_t n) { return Subspace(EchelonBasis(n)); }
  static Subspace full(std::size_t n) {
    EchelonBasis e(n);
    for (std::size_t i = 0; i < n; ++i) e.insert(unit_vector(n, i));
    return Subspace(std::move(e));
  }
  static Subspace from_echelon(EchelonBasis e) { return Subspace(std::move(e)); }

  std::size_t ambient_dim() const noexcept { return basis_.ambient_dim(); }
  std::size_t dim() const noexcept { return basis_.dim(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const std::vector<Vector>& basis() const noexcept { return basis_.rows(); }
  const std::vector<std::size_t>& pivots() const noexcept { return basis_.pivots(); }
  Matrix basis_matrix() const { return basis_.to_matrix(); }
  const EchelonBasis& echelon() const noexcept { return basis_; }

  bool contains(std::span<const Rational> v) const { return basis_.contains(v); }

  /// Containment a ⊆ b.
  bool contains(const Subspace& other) const {
    require_same_ambient(other);
    if (other.dim() > dim()) return false;
    for (const auto& v : other.basis())
      if (!contains(v)) return false;
    return true;
  }

  void require_same_ambient(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
      throw Error(Errc::dimension_mismatch, "ambient dimensions " + std::to_string(ambient_dim()) +
                                                " and " + std::to_string(other.ambient_dim()));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

 private:
  explicit Subspace(EchelonBasis e) : basis_(std::move(e)) {}

  EchelonBasis basis_;
};

inline std::string describe(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) {
      if (j) out += ",";
      out += to_string(s.basis()[i][j]);
    }
    out += ")";
  }
  return out + "} in Q^" + std::to_string(s.ambient_dim());
}

inline Subspace span(const std::vector<Vector>& vectors, std::size_t n) {
  EchelonBasis e(n);
  for (const auto& v : vectors) e.insert(v);
  return Subspace::from_echelon(std::move(e));
}

inline Subspace join(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  EchelonBasis e = a.echelon();
  for (const auto& v : b.basis()) e.insert(v);
  return Subspace::from_echelon(std::move(e));
}

/// Functionals f (as row vectors) with f . v = 0 for every v in s. Applied to a dual subspace
/// it yields the pre-annihilator.
inline Subspace annihilator(const Subspace& s) {
  return span(kernel(s.basis_matrix()), s.ambient_dim());
}

inline Subspace meet(const Subspace& a, const Subspace& b) {
  a.require_same_ambient(b);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return annihilator(join(annihilator(a), annihilator(b)));
}

/// dim(b / a) for a ⊆ b.
inline std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!b.contains(a))
    throw Error(Errc::containment_violation, describe(a) + " is not contained in " + describe(b));
  return b.dim() - a.dim();
}

/// The subspace t(s) = span{ t b : b in basis(s) }.
inline Subspace image(const Matrix& t, const Subspace& s) {
  if (t.cols() != s.ambient_dim())
    throw Error(Errc::dimension_mismatch, "operator does not act on the ambient space");
  EchelonBasis e(t.rows());
  for (const auto& b : s.basis()) e.insert(t * b);
  return Subspace::from_echelon(std::move(e));
}

inline Subspace column_space(const Matrix& t) { return image(t, Subspace::full(t.cols())); }

}  // namespace nestlab
