#pragma once

#include <stdexcept>
#include <vector>

#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace/rank_one.hpp"
#include "nestlab/opspace/support_fn.hpp"

namespace nestlab {

/// Splits t ∈ M(Φ) of rank r into exactly r rank-one operators of M(Φ) summing to t.
///
/// Each step takes W = range(t), L = the smallest nest element meeting W nontrivially, x = the
/// first echelon basis vector of L ∩ W and g = e_p* for the pivot column p of x (so g(x) = 1).
/// The factor is (g∘t) ⊗ x and the recursion continues on t - (g∘t) ⊗ x, whose rank is one less.
inline std::vector<RankOne> decompose(const Nest& nest, const SupportFn& phi, Matrix t) {
  OperatorSpace::require_shape(t, nest.ambient_dim());
  if (!m_of(nest, phi).contains(t))
    throw Error(Errc::not_a_member, "operator does not lie in M(Φ)");
  std::vector<RankOne> out;
  std::size_t r = rank(t);
  while (r > 0) {
    const Subspace w = column_space(t);
    const Subspace lw = meet(smallest_intersecting(nest, w), w);
    const Vector& x = lw.basis().front();
    const std::size_t p = lw.pivots().front();
    // f(y) = g(t y) = (row p of t) . y
    RankOne factor{t.row_vector(p), x};
    t = t - factor.matrix();
    out.push_back(std::move(factor));
    const std::size_t next = rank(t);
    if (next + 1 != r) throw std::logic_error("rank did not drop by one during decomposition");
    r = next;
  }
  return out;
}

}  // namespace nestlab
