#pragma once

#include "nestlab/chaincalc/chain.hpp"
#include "nestlab/chaincalc/support_fn.hpp"
#include "nestlab/error.hpp"

// Guarded predictions. The bimodules M^e(Ψ), M(Φ,Ψ), M^0(Ψ) and M^0(Φ,Ψ) are built
// from infinite series of rank-one operators; what can be executed is the statement of which
// support data they carry, under the hypotheses those statements need.

namespace nestlab::chain {

namespace detail {

inline void require_p_property(const AbstractNest& c) {
  if (!check_p_property(c))
    throw Error(Errc::p_property_violation, "the chain has a limit without a countable approach");
}

inline void require_p_infinity(const AbstractNest& c) {
  if (!check_p_infinity(c).holds)
    throw Error(Errc::p_infinity_violation, "the chain has a finite-dimensional jump");
}

}  // namespace detail

/// Essential support function of M^e(Ψ): Ψ itself, on chains with the p-property.
inline AbstractSupportFn predict_me_support(const AbstractSupportFn& psi) {
  detail::require_p_property(psi.chain());
  if (!check_essential(psi)) throw Error(Errc::not_essential, "Ψ is not an essential support function");
  return psi;
}

/// Support function pair of M(Φ,Ψ) = M(Φ) ∩ M^e(Ψ): (Φ, Ψ), on chains with the p-property.
inline SupportPair predict_max_pair(const SupportPair& p) {
  detail::require_p_property(p.chain());
  if (!check_pair(p)) throw Error(Errc::pair_inadmissible, "Ψ(N) ∈ E_f without Ψ(N) ⊂ Φ(N)");
  return p;
}

/// Support function pair of M^0(Ψ): (Ψ_-, Ψ_-), on chains with the p∞-property.
inline SupportPair predict_m0(const AbstractSupportFn& psi) {
  detail::require_p_infinity(psi.chain());
  if (psi.value(0) != 0) throw Error(Errc::nonzero_at_zero, "Ψ(\"0\") must be \"0\"");
  AbstractSupportFn reg = lower_regularization(psi);
  return SupportPair::make(reg, reg);
}

/// Support function pair of M^0(Φ,Ψ): (Φ, Ψ_-), on chains with the p∞-property.
inline SupportPair predict_m0_pair(const SupportPair& p) {
  detail::require_p_infinity(p.chain());
  if (!check_pair(p)) throw Error(Errc::pair_inadmissible, "Ψ(N) ∈ E_f without Ψ(N) ⊂ Φ(N)");
  return SupportPair::make(p.phi(), lower_regularization(p.psi()));
}

}  // namespace nestlab::chain
