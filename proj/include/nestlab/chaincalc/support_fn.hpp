#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestlab/chaincalc/chain.hpp"
#include "nestlab/error.hpp"

namespace nestlab::chain {

/// A support function on an abstract chain. Values are node indices. At every node that is a
/// limit from below, left_limit names the node equal to ∨_{F⊂N} Φ(F); this join ranges over
/// unnamed elements, so it is part of the presentation rather than something computed.
class AbstractSupportFn {
 public:
  /// Checks monotonicity and value(pred) ⊆ left_limit ⊆ value at each limit node. A left limit
  /// that is omitted but squeezed between equal values is filled in; otherwise it stays unknown.
  static AbstractSupportFn make(AbstractNest chain, std::vector<std::size_t> values,
                                std::vector<std::optional<std::size_t>> left_limit) {
    const std::size_t m = chain.size();
    if (values.size() != m)
      throw Error(Errc::dimension_mismatch, "support function needs one value per node");
    if (left_limit.empty()) left_limit.resize(m);
    if (left_limit.size() != m)
      throw Error(Errc::dimension_mismatch, "left_limit needs one slot per node");
    for (std::size_t i = 0; i < m; ++i) {
      if (values[i] >= m) throw Error(Errc::not_an_element, "value index out of range");
      if (i > 0 && values[i] < values[i - 1])
        throw Error(Errc::not_monotone, "value at \"" + chain.label(i) + "\" is below the value at \"" +
                                            chain.label(i - 1) + "\"");
    }
    for (std::size_t i = 0; i < m; ++i) {
      auto& ll = left_limit[i];
      if (!chain.limit_from_below(i)) {
        if (ll)
          throw Error(Errc::invalid_annotation,
                      "left_limit declared at \"" + chain.label(i) + "\", which is not a limit from below");
        continue;
      }
      if (ll) {
        if (*ll >= m) throw Error(Errc::join_not_represented, "left_limit index out of range");
        if (*ll < values[i - 1] || *ll > values[i])
          throw Error(Errc::inconsistent_left_limit,
                      "left_limit at \"" + chain.label(i) + "\" must lie between the value at \"" +
                          chain.label(i - 1) + "\" and the value at \"" + chain.label(i) + "\"");
      } else if (values[i - 1] == values[i]) {
        ll = values[i];
      }
    }
    return AbstractSupportFn(std::move(chain), std::move(values), std::move(left_limit));
  }

  static AbstractSupportFn identity(const AbstractNest& chain) {
    std::vector<std::size_t> v(chain.size());
    std::vector<std::optional<std::size_t>> ll(chain.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = i;
      if (chain.limit_from_below(i)) ll[i] = i;
    }
    return make(chain, std::move(v), std::move(ll));
  }

  static AbstractSupportFn constant(const AbstractNest& chain, std::size_t node) {
    return make(chain, std::vector<std::size_t>(chain.size(), node), {});
  }

  const AbstractNest& chain() const noexcept { return chain_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::size_t value(std::size_t i) const { return values_.at(i); }
  const std::vector<std::size_t>& values() const noexcept { return values_; }
  const std::optional<std::size_t>& left_limit(std::size_t i) const { return left_limit_.at(i); }
  const std::vector<std::optional<std::size_t>>& left_limits() const noexcept { return left_limit_; }

  /// The declared join at a limit node; throws when the presentation does not name it.
  std::size_t require_left_limit(std::size_t i) const {
    if (!left_limit_.at(i))
      throw Error(Errc::join_not_represented,
                  "the join below \"" + chain_.label(i) + "\" is not named by the presentation");
    return *left_limit_[i];
  }

  friend bool operator==(const AbstractSupportFn&, const AbstractSupportFn&) = default;

 private:
  AbstractSupportFn(AbstractNest c, std::vector<std::size_t> v, std::vector<std::optional<std::size_t>> ll)
      : chain_(std::move(c)), values_(std::move(v)), left_limit_(std::move(ll)) {}

  AbstractNest chain_;
  std::vector<std::size_t> values_;
  std::vector<std::optional<std::size_t>> left_limit_;
};

/// Pointwise order on named nodes, with the declared joins compared as well.
inline bool pointwise_le(const AbstractSupportFn& a, const AbstractSupportFn& b) {
  if (!(a.chain() == b.chain())) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.value(i) > b.value(i)) return false;
    if (a.left_limit(i) && b.left_limit(i) && *a.left_limit(i) > *b.left_limit(i)) return false;
  }
  return true;
}

/// Left continuity: the declared join below every limit node equals the value there.
inline bool check_left_continuous(const AbstractSupportFn& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.chain().limit_from_below(i) && f.require_left_limit(i) != f.value(i)) return false;
  return true;
}

/// Φ_-: keeps Φ at "0" and at attained nodes, replaces the value at each limit node by the join
/// of the values strictly below it.
inline AbstractSupportFn lower_regularization(const AbstractSupportFn& f) {
  const AbstractNest& c = f.chain();
  std::vector<std::size_t> v = f.values();
  std::vector<std::optional<std::size_t>> ll(c.size());
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c.limit_from_below(i)) v[i] = *(ll[i] = f.require_left_limit(i));
  return AbstractSupportFn::make(c, std::move(v), std::move(ll));
}

/// Essential-support axioms: values in E_f are limits from above, and the function is constant
/// across every finite-dimensional stretch of the chain.
inline bool check_essential(const AbstractSupportFn& f) {
  const AbstractNest& c = f.chain();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t v = f.value(i);
    if (c.in_finite_part(v) && !c.equals_successor(v)) return false;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.quotient_dim(i, j) && f.value(i) != f.value(j)) return false;
  return true;
}

/// (Φ, Ψ): Φ admissible with Φ("0") = "0", Ψ essential, Ψ ≤ Φ, both on the same chain.
class SupportPair {
 public:
  static SupportPair make(AbstractSupportFn phi, AbstractSupportFn psi) {
    if (!(phi.chain() == psi.chain())) throw Error(Errc::invalid_pair, "Φ and Ψ live on different chains");
    if (phi.value(0) != 0) throw Error(Errc::invalid_pair, "Φ must fix \"0\"");
    if (!check_left_continuous(phi)) throw Error(Errc::invalid_pair, "Φ is not left continuous");
    if (!check_essential(psi)) throw Error(Errc::invalid_pair, "Ψ is not an essential support function");
    for (std::size_t i = 0; i < phi.size(); ++i)
      if (psi.value(i) > phi.value(i))
        throw Error(Errc::invalid_pair, "Ψ exceeds Φ at \"" + phi.chain().label(i) + "\"");
    return SupportPair(std::move(phi), std::move(psi));
  }

  const AbstractSupportFn& phi() const noexcept { return phi_; }
  const AbstractSupportFn& psi() const noexcept { return psi_; }
  const AbstractNest& chain() const noexcept { return phi_.chain(); }

  friend bool operator==(const SupportPair&, const SupportPair&) = default;

 private:
  SupportPair(AbstractSupportFn phi, AbstractSupportFn psi) : phi_(std::move(phi)), psi_(std::move(psi)) {}

  AbstractSupportFn phi_;
  AbstractSupportFn psi_;
};

/// Admissibility of the pair: Ψ(N) ∈ E_f forces Ψ(N) ⊂ Φ(N) strictly.
inline bool check_pair(const SupportPair& p) {
  for (std::size_t i = 0; i < p.chain().size(); ++i) {
    const std::size_t s = p.psi().value(i);
    if (p.chain().in_finite_part(s) && !(s < p.phi().value(i))) return false;
  }
  return true;
}

}  // namespace nestlab::chain
