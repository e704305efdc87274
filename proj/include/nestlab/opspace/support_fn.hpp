#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace/operator_space.hpp"

namespace nestlab {

/// An order-preserving map of a finite nest into itself, stored as element indices in chain order.
class SupportFn {
 public:
  static SupportFn make(const Nest& nest, std::vector<std::size_t> values) {
    if (values.size() != nest.size())
      throw Error(Errc::dimension_mismatch, "support function has " + std::to_string(values.size()) +
                                                " values for a nest of " + std::to_string(nest.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      nest.require_index(values[i]);
      if (i > 0 && values[i] < values[i - 1])
        throw Error(Errc::not_monotone, "value at element " + std::to_string(i) +
                                            " is below the value at element " + std::to_string(i - 1));
    }
    return SupportFn(std::move(values));
  }

  static SupportFn identity(const Nest& nest) {
    std::vector<std::size_t> v(nest.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    return SupportFn(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  std::size_t operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  void require_nest(const Nest& nest) const {
    if (values_.size() != nest.size())
      throw Error(Errc::dimension_mismatch, "support function does not belong to this nest");
  }

  friend bool operator==(const SupportFn&, const SupportFn&) = default;

  /// Pointwise order Φ ≤ Θ.
  friend bool pointwise_le(const SupportFn& a, const SupportFn& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.values_[i] > b.values_[i]) return false;
    return true;
  }

 private:
  explicit SupportFn(std::vector<std::size_t> v) : values_(std::move(v)) {}

  std::vector<std::size_t> values_;
};

/// Left continuity ∨_{E⊂N} Φ(E) = Φ(N_-) for every N ≠ {0}, evaluated with subspace joins.
/// On a finite nest this always holds; it is computed rather than assumed.
inline bool is_admissible(const Nest& nest, const SupportFn& phi) {
  phi.require_nest(nest);
  for (std::size_t i = 1; i < nest.size(); ++i) {
    Subspace below = Subspace::zero(nest.ambient_dim());
    for (std::size_t k = 0; k < i; ++k) below = join(below, nest[phi[k]]);
    if (!(below == nest[phi[nest.adjacent_indices(i).first]])) return false;
  }
  return true;
}

/// Φ_-(E) = ∨_{F_- ⊂ E} Φ(F) for E ≠ {0}, Φ_-({0}) = Φ({0}).
inline SupportFn lower_regularization(const Nest& nest, const SupportFn& phi) {
  phi.require_nest(nest);
  std::vector<std::size_t> out(nest.size());
  out[0] = phi[0];
  for (std::size_t e = 1; e < nest.size(); ++e) {
    Subspace acc = Subspace::zero(nest.ambient_dim());
    for (std::size_t f = 0; f < nest.size(); ++f) {
      const Subspace& f_minus = nest[nest.adjacent_indices(f).first];
      if (nest[e].contains(f_minus) && !(f_minus == nest[e])) acc = join(acc, nest[phi[f]]);
    }
    out[e] = nest.index_of(acc);
  }
  return SupportFn::make(nest, std::move(out));
}

/// M(Φ) = { T : T E ⊆ Φ(E) for every nest element E }.
inline OperatorSpace m_of(const Nest& nest, const SupportFn& phi) {
  phi.require_nest(nest);
  std::vector<Subspace> targets;
  targets.reserve(nest.size());
  for (std::size_t i = 0; i < nest.size(); ++i) targets.push_back(nest[phi[i]]);
  return operators_mapping_into(nest, targets);
}

/// The closed span [J E] of J applied to a nest element.
inline Subspace apply_to(const OperatorSpace& j, const Subspace& e) {
  EchelonBasis acc(e.ambient_dim());
  for (const auto& t : j.basis())
    for (const auto& b : e.basis()) acc.insert(t * b);
  return Subspace::from_echelon(std::move(acc));
}

/// Φ_J(E) = [J E], located in the nest.
inline SupportFn support_of(const Nest& nest, const OperatorSpace& j) {
  require_bimodule(nest, j);
  std::vector<std::size_t> values(nest.size());
  for (std::size_t i = 0; i < nest.size(); ++i) {
    const Subspace je = apply_to(j, nest[i]);
    auto idx = nest.find(je);
    if (!idx)
      throw Error(Errc::not_in_nest, "[J E_" + std::to_string(i) + "] = " + describe(je) +
                                         " is not a nest element");
    values[i] = *idx;
  }
  return SupportFn::make(nest, std::move(values));
}

/// J = M(Φ_J).
inline bool is_reflexive(const Nest& nest, const OperatorSpace& j) {
  return j == m_of(nest, support_of(nest, j));
}

/// Φ^e_J(N) = ∧{ L : dim(T N / L) < ∞ for all T in J }, read literally. Every quotient here is
/// finite-dimensional, so every L qualifies and the meet is {0}.
inline SupportFn essential_support_of(const Nest& nest, const OperatorSpace& j) {
  require_bimodule(nest, j);
  const auto basis = j.basis();
  std::vector<std::size_t> values(nest.size());
  for (std::size_t ni = 0; ni < nest.size(); ++ni) {
    Subspace acc = Subspace::full(nest.ambient_dim());
    for (std::size_t li = 0; li < nest.size(); ++li) {
      bool all_finite = true;
      for (const auto& t : basis) {
        // dim(T N / L) = dim(T N + L) - dim L, a natural number
        const Subspace tn = image(t, nest[ni]);
        const std::size_t q = join(tn, nest[li]).dim() - nest[li].dim();
        all_finite = all_finite && q <= nest.ambient_dim();
      }
      if (all_finite) acc = meet(acc, nest[li]);
    }
    values[ni] = nest.index_of(acc);
  }
  return SupportFn::make(nest, std::move(values));
}

}  // namespace nestlab
