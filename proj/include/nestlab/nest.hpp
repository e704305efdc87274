#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/ratlin.hpp"

namespace nestlab {

/// A finite chain {0} = E_0 ⊂ E_1 ⊂ ... ⊂ E_m = Q^n. Elements are addressed by chain index.
class Nest {
 public:
  /// Sorts by dimension, drops duplicates, checks the chain condition and adds the endpoints.
  static Nest validate(std::vector<Subspace> subspaces, std::size_t n) {
    for (const auto& s : subspaces)
      if (s.ambient_dim() != n)
        throw Error(Errc::dimension_mismatch, describe(s) + " does not live in Q^" + std::to_string(n));
    subspaces.push_back(Subspace::zero(n));
    subspaces.push_back(Subspace::full(n));
    std::stable_sort(subspaces.begin(), subspaces.end(),
                     [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    std::vector<Subspace> chain;
    for (auto& s : subspaces) {
      if (!chain.empty()) {
        if (chain.back() == s) continue;
        if (!s.contains(chain.back()))
          throw Error(Errc::incomparable_pair, describe(chain.back()) + " and " + describe(s));
      }
      chain.push_back(std::move(s));
    }
    return Nest(n, std::move(chain));
  }

  /// The complete flag span{e1} ⊂ span{e1,e2} ⊂ ... in Q^n.
  static Nest standard_flag(std::size_t n) {
    std::vector<Subspace> s;
    for (std::size_t k = 1; k < n; ++k) {
      std::vector<Vector> b;
      for (std::size_t i = 0; i < k; ++i) b.push_back(unit_vector(n, i));
      s.push_back(span(b, n));
    }
    return validate(std::move(s), n);
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t top() const noexcept { return elements_.size() - 1; }
  const Subspace& operator[](std::size_t i) const { return elements_.at(i); }
  const std::vector<Subspace>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Subspace& s) const {
    if (s.ambient_dim() != n_) return std::nullopt;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].dim() == s.dim()) {
        if (elements_[i] == s) return i;
        return std::nullopt;
      }
    return std::nullopt;
  }

  std::size_t index_of(const Subspace& s) const {
    if (auto i = find(s)) return *i;
    throw Error(Errc::not_an_element, describe(s) + " is not an element of the nest");
  }

  void require_index(std::size_t i) const {
    if (i >= elements_.size())
      throw Error(Errc::not_an_element, "nest has no element with index " + std::to_string(i));
  }

  /// dim E_i - dim E_{i-1}; zero for the bottom element.
  std::size_t gap(std::size_t i) const {
    require_index(i);
    return i == 0 ? 0 : elements_[i].dim() - elements_[i - 1].dim();
  }

  /// Indices of (E_-, E_+). {0}_- = {0} and X_+ = X.
  std::pair<std::size_t, std::size_t> adjacent_indices(std::size_t i) const {
    require_index(i);
    return {i == 0 ? 0 : i - 1, i == top() ? top() : i + 1};
  }

  friend bool operator==(const Nest& a, const Nest& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  Nest(std::size_t n, std::vector<Subspace> chain) : n_(n), elements_(std::move(chain)) {}

  std::size_t n_;
  std::vector<Subspace> elements_;
};

inline Nest validate_nest(std::vector<Subspace> subspaces, std::size_t n) {
  return Nest::validate(std::move(subspaces), n);
}

inline std::pair<Subspace, Subspace> adjacent(const Nest& nest, const Subspace& e) {
  auto [lo, hi] = nest.adjacent_indices(nest.index_of(e));
  return {nest[lo], nest[hi]};
}

/// Index of the meet of all elements N with N ∩ w ≠ {0}.
inline std::size_t smallest_intersecting_index(const Nest& nest, const Subspace& w) {
  if (w.ambient_dim() != nest.ambient_dim())
    throw Error(Errc::dimension_mismatch, "subspace and nest live in different spaces");
  if (w.is_zero()) throw Error(Errc::zero_subspace, "smallest_intersecting needs w ≠ {0}");
  // On a chain the meet of an up-closed family is its first member.
  for (std::size_t i = 0; i < nest.size(); ++i)
    if (!meet(nest[i], w).is_zero()) return i;
  return nest.top();
}

inline Subspace smallest_intersecting(const Nest& nest, const Subspace& w) {
  return nest[smallest_intersecting_index(nest, w)];
}

/// Whether join{ N^⊥ : N_+ ⊃ E } equals E^⊥. Always true in finite dimension.
inline bool perp_span_check(const Nest& nest, const Subspace& e) {
  const std::size_t idx = nest.index_of(e);
  Subspace acc = Subspace::zero(nest.ambient_dim());
  for (std::size_t i = 0; i < nest.size(); ++i) {
    const Subspace& succ = nest[nest.adjacent_indices(i).second];
    if (succ.contains(e) && !(succ == e)) acc = join(acc, annihilator(nest[i]));
  }
  return acc == annihilator(nest[idx]);
}

/// Evaluates E = ∨{N_+ : N ⊂ E} = ∨{N : N_- ⊂ E} = ∧{N_- : E ⊂ N} = ∧{N : E ⊂ N_+}
/// with joins and meets taken over nest elements (empty join {0}, empty meet X).
inline bool adjacency_identities_hold(const Nest& nest, std::size_t idx) {
  nest.require_index(idx);
  const std::size_t n = nest.ambient_dim();
  const Subspace& e = nest[idx];
  auto strictly_in = [](const Subspace& a, const Subspace& b) { return b.contains(a) && !(a == b); };
  Subspace j1 = Subspace::zero(n), j2 = Subspace::zero(n);
  Subspace m1 = Subspace::full(n), m2 = Subspace::full(n);
  for (std::size_t i = 0; i < nest.size(); ++i) {
    auto [lo, hi] = nest.adjacent_indices(i);
    const Subspace& ni = nest[i];
    if (strictly_in(ni, e)) j1 = join(j1, nest[hi]);
    if (strictly_in(nest[lo], e)) j2 = join(j2, ni);
    if (strictly_in(e, ni)) m1 = meet(m1, nest[lo]);
    if (strictly_in(e, nest[hi])) m2 = meet(m2, ni);
  }
  return j1 == e && j2 == e && m1 == e && m2 == e;
}

}  // namespace nestlab
