#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace/operator_space.hpp"
#include "nestlab/opspace/support_fn.hpp"

namespace nestlab {

/// The rank-one operator f ⊗ w : x ↦ f(x) w, realized as the outer product w fᵀ.
struct RankOne {
  Vector functional;
  Vector vector;

  Matrix matrix() const { return Matrix::outer(vector, functional); }

  friend bool operator==(const RankOne&, const RankOne&) = default;
};

struct RankOneVerdict {
  bool member = false;
  std::optional<std::size_t> witness;  ///< nest index of a witnessing element
};

namespace detail {

inline void require_rank_one(const Nest& nest, const RankOne& r) {
  const std::size_t n = nest.ambient_dim();
  if (r.functional.size() != n || r.vector.size() != n)
    throw Error(Errc::dimension_mismatch, "rank-one factors must have length " + std::to_string(n));
  if (is_zero(r.functional) || is_zero(r.vector))
    throw Error(Errc::zero_vector, "rank-one factors must be nonzero");
}

inline bool annihilates(std::span<const Rational> f, const Subspace& s) {
  for (const auto& v : s.basis())
    if (dot(f, v) != 0) return false;
  return true;
}

}  // namespace detail

/// The three equivalent membership tests for f ⊗ w in the nest algebra, plus direct matrix
/// membership. Witnesses are the first element that works for each condition.
struct NestAlgebraConditions {
  bool direct = false;                   ///< T E ⊆ E for every E
  std::optional<std::size_t> exists_ii;  ///< w ∈ E and f ∈ (E_-)^⊥
  std::optional<std::size_t> exists_iii; ///< w ∈ E_+ and f ∈ E^⊥

  bool coherent() const { return direct == exists_ii.has_value() && direct == exists_iii.has_value(); }
};

inline NestAlgebraConditions rank_one_alg_conditions(const Nest& nest, const RankOne& r) {
  detail::require_rank_one(nest, r);
  NestAlgebraConditions c;
  c.direct = leaves_invariant(nest, r.matrix());
  for (std::size_t i = 0; i < nest.size(); ++i) {
    auto [lo, hi] = nest.adjacent_indices(i);
    if (!c.exists_ii && nest[i].contains(r.vector) && detail::annihilates(r.functional, nest[lo]))
      c.exists_ii = i;
    if (!c.exists_iii && nest[hi].contains(r.vector) && detail::annihilates(r.functional, nest[i]))
      c.exists_iii = i;
  }
  return c;
}

/// Membership of f ⊗ w in the nest algebra. The witness E satisfies w ∈ E and f ∈ (E_-)^⊥ and
/// is the smallest element containing w.
inline RankOneVerdict rank_one_in_alg(const Nest& nest, const RankOne& r) {
  const auto c = rank_one_alg_conditions(nest, r);
  if (!c.coherent()) throw std::logic_error("rank-one membership conditions disagree");
  return {c.direct, c.exists_ii};
}

/// Index of ∧_{E⊂F} Φ(F), i.e. Φ at the successor of E (X when E = X).
inline std::size_t meet_above(const Nest& nest, const SupportFn& phi, std::size_t e) {
  Subspace acc = Subspace::full(nest.ambient_dim());
  for (std::size_t f = e + 1; f < nest.size(); ++f) acc = meet(acc, nest[phi[f]]);
  return nest.index_of(acc);
}

/// Membership of f ⊗ w in M(Φ): direct matrix membership, cross-checked against the criterion
/// "f ∈ E^⊥ and w ∈ ∧_{E⊂F} Φ(F) for some E". The witness is the largest E annihilated by f.
inline RankOneVerdict rank_one_in_m(const Nest& nest, const SupportFn& phi, const RankOne& r) {
  detail::require_rank_one(nest, r);
  phi.require_nest(nest);
  const bool direct = m_of(nest, phi).contains(r.matrix());
  std::optional<std::size_t> witness;
  for (std::size_t i = nest.size(); i-- > 0;) {
    if (!detail::annihilates(r.functional, nest[i])) continue;
    if (nest[meet_above(nest, phi, i)].contains(r.vector)) {
      witness = i;
      break;
    }
  }
  if (direct != witness.has_value()) throw std::logic_error("rank-one criterion disagrees with M(Φ) membership");
  return {direct, witness};
}

/// Instance check of the absorption property: if some T ∈ J has T N ⊄ L_-, then every f ⊗ x
/// with f ∈ (N_-)^⊥ and x ∈ L lies in J.
inline bool absorption_check(const Nest& nest, const OperatorSpace& j, std::size_t n_idx,
                             std::size_t l_idx) {
  nest.require_index(n_idx);
  nest.require_index(l_idx);
  require_bimodule(nest, j);
  const Subspace& l_minus = nest[nest.adjacent_indices(l_idx).first];
  bool hypothesis = false;
  for (const auto& t : j.basis())
    if (!l_minus.contains(image(t, nest[n_idx]))) {
      hypothesis = true;
      break;
    }
  if (!hypothesis) return true;
  const Subspace fs = annihilator(nest[nest.adjacent_indices(n_idx).first]);
  for (const auto& f : fs.basis())
    for (const auto& x : nest[l_idx].basis())
      if (!j.contains(Matrix::outer(x, f))) return false;
  return true;
}

/// span{ f ⊗ w : w ∈ E, f ∈ (E_-)^⊥, E in the nest }, the span of the rank-one part of T(E).
inline OperatorSpace rank_one_span(const Nest& nest) {
  const std::size_t n = nest.ambient_dim();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < nest.size(); ++i) {
    const Subspace fs = annihilator(nest[nest.adjacent_indices(i).first]);
    for (const auto& f : fs.basis())
      for (const auto& w : nest[i].basis()) gens.push_back(Matrix::outer(w, f));
  }
  return OperatorSpace::span_of(gens, n);
}

}  // namespace nestlab
