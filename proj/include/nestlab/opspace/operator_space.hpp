#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/ratlin.hpp"

namespace nestlab {

/// A linear space of n×n rational matrices, stored as a canonical subspace of Q^{n²}
/// (matrices flattened row-major).
class OperatorSpace {
 public:
  static OperatorSpace zero(std::size_t n) { return OperatorSpace(n, Subspace::zero(n * n)); }
  static OperatorSpace full(std::size_t n) { return OperatorSpace(n, Subspace::full(n * n)); }

  static OperatorSpace span_of(const std::vector<Matrix>& matrices, std::size_t n) {
    EchelonBasis e(n * n);
    for (const auto& m : matrices) {
      require_shape(m, n);
      e.insert(m.flatten());
    }
    return OperatorSpace(n, Subspace::from_echelon(std::move(e)));
  }

  static OperatorSpace from_flat(Subspace flat, std::size_t n) {
    if (flat.ambient_dim() != n * n)
      throw Error(Errc::dimension_mismatch, "flat subspace is not in Q^{n^2}");
    return OperatorSpace(n, std::move(flat));
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return flat_.dim(); }
  const Subspace& flat() const noexcept { return flat_; }

  std::vector<Matrix> basis() const {
    std::vector<Matrix> out;
    out.reserve(flat_.dim());
    for (const auto& v : flat_.basis()) out.push_back(Matrix::unflatten(v, n_, n_));
    return out;
  }

  bool contains(const Matrix& m) const {
    require_shape(m, n_);
    return flat_.contains(m.flatten());
  }

  bool contains(const OperatorSpace& other) const { return flat_.contains(other.flat_); }

  friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
    return a.n_ == b.n_ && a.flat_ == b.flat_;
  }

  static void require_shape(const Matrix& m, std::size_t n) {
    if (m.rows() != n || m.cols() != n)
      throw Error(Errc::dimension_mismatch, "expected a " + std::to_string(n) + "×" +
                                                std::to_string(n) + " matrix, got " +
                                                std::to_string(m.rows()) + "×" + std::to_string(m.cols()));
  }

 private:
  OperatorSpace(std::size_t n, Subspace flat) : n_(n), flat_(std::move(flat)) {}

  std::size_t n_;
  Subspace flat_;
};

/// All T with T·E_i ⊆ targets[i] for every nest element, found by solving the linear system
/// f·T·b = 0 for b in basis(E_i), f in basis(targets[i]^⊥).
inline OperatorSpace operators_mapping_into(const Nest& nest, const std::vector<Subspace>& targets) {
  const std::size_t n = nest.ambient_dim();
  if (targets.size() != nest.size())
    throw Error(Errc::dimension_mismatch, "one target per nest element required");
  std::vector<Vector> constraints;
  for (std::size_t i = 0; i < nest.size(); ++i) {
    const Subspace& e = nest[i];
    if (e.is_zero()) continue;
    nest[i].require_same_ambient(targets[i]);
    const Subspace ann = annihilator(targets[i]);
    for (const auto& b : e.basis())
      for (const auto& f : ann.basis()) {
        // coefficient of T_{jk} in f·T·b is f_j b_k
        Vector row(n * n, Rational(0));
        for (std::size_t j = 0; j < n; ++j) {
          if (f[j] == 0) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (b[k] != 0) row[j * n + k] = f[j] * b[k];
        }
        constraints.push_back(std::move(row));
      }
  }
  if (constraints.empty()) return OperatorSpace::full(n);
  return OperatorSpace::from_flat(span(kernel(Matrix::from_rows(constraints, n * n)), n * n), n);
}

/// The nest algebra T(E) = { T : T E ⊆ E for all E in the nest }.
inline OperatorSpace nest_algebra(const Nest& nest) {
  return operators_mapping_into(nest, nest.elements());
}

/// Whether T E ⊆ E for every nest element, checked directly.
inline bool leaves_invariant(const Nest& nest, const Matrix& t) {
  OperatorSpace::require_shape(t, nest.ambient_dim());
  for (const auto& e : nest.elements())
    for (const auto& b : e.basis())
      if (!e.contains(t * b)) return false;
  return true;
}

/// Smallest operator space containing the generators that is closed under left and right
/// multiplication by the nest algebra. Alternates left and right closure passes; each pass only
/// multiplies the spanning vectors it has not seen yet, so it stops once a full round adds nothing.
inline OperatorSpace generate_bimodule(const Nest& nest, const std::vector<Matrix>& generators) {
  const std::size_t n = nest.ambient_dim();
  const std::size_t n2 = n * n;
  const std::vector<Matrix> alg = nest_algebra(nest).basis();
  EchelonBasis acc(n2);
  std::vector<Matrix> found;
  auto add = [&](const Matrix& m) {
    if (acc.insert(m.flatten())) found.push_back(m);
  };
  for (const auto& g : generators) {
    OperatorSpace::require_shape(g, n);
    add(g);
  }
  std::size_t left_done = 0, right_done = 0;
  while (acc.dim() < n2) {
    const std::size_t before = acc.dim();
    for (const std::size_t end = found.size(); left_done < end && acc.dim() < n2; ++left_done)
      for (const auto& a : alg) add(a * found[left_done]);
    for (const std::size_t end = found.size(); right_done < end && acc.dim() < n2; ++right_done)
      for (const auto& b : alg) add(found[right_done] * b);
    if (acc.dim() == before && left_done == found.size() && right_done == found.size()) break;
  }
  return OperatorSpace::from_flat(Subspace::from_echelon(std::move(acc)), n);
}

/// Whether A·S·B ∈ s for all A, B in the nest algebra and S in s. Since the algebra is unital it
/// is enough to test one-sided products against a basis.
inline bool is_bimodule(const Nest& nest, const OperatorSpace& s) {
  if (s.ambient_dim() != nest.ambient_dim())
    throw Error(Errc::dimension_mismatch, "operator space and nest live in different spaces");
  const std::vector<Matrix> alg = nest_algebra(nest).basis();
  for (const auto& m : s.basis())
    for (const auto& a : alg)
      if (!s.contains(a * m) || !s.contains(m * a)) return false;
  return true;
}

inline void require_bimodule(const Nest& nest, const OperatorSpace& j) {
  if (!is_bimodule(nest, j))
    throw Error(Errc::not_a_bimodule, "operator space of dimension " + std::to_string(j.dim()) +
                                          " is not a bimodule over the nest algebra");
}

}  // namespace nestlab
