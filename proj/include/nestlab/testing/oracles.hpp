#pragma once

// Independent reference computations used by the property suites and the test binaries. None of
// these go through the code paths they are used to check.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nestlab/chaincalc.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace.hpp"
#include "nestlab/ratlin.hpp"

namespace nestlab::testing {

/// Rank by plain forward elimination with partial pivot search (no reduced form, no EchelonBasis).
inline std::size_t elimination_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// dim M(Φ) = Σ_i (dim E_i - dim E_{i-1}) · dim Φ(E_i).
inline std::size_t m_dimension_formula(const Nest& nest, const SupportFn& phi) {
  std::size_t d = 0;
  for (std::size_t i = 1; i < nest.size(); ++i) d += nest.gap(i) * nest[phi[i]].dim();
  return d;
}

/// Every nondecreasing map {0..m-1} -> {0..m-1}, optionally with 0 ↦ 0.
inline std::vector<std::vector<std::size_t>> monotone_maps(std::size_t m, bool fix_zero) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(m, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t lo) -> void {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    const std::size_t hi = (i == 0 && fix_zero) ? 0 : m - 1;
    for (std::size_t v = lo; v <= hi; ++v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
  };
  if (m > 0) rec(rec, 0, 0);
  return out;
}

/// Chains of 2..max_nodes nodes. Each non-bottom node is reached by a jump of dimension 1, a jump
/// of infinite dimension, or a limit; with_marks adds uncountable marks on limits.
inline std::vector<chain::AbstractNest> small_chains(std::size_t max_nodes, bool with_marks) {
  using namespace chain;
  std::vector<NodeSpec::BelowSpec> belows = {
      {Gap::of(1), std::nullopt}, {Gap::inf(), std::nullopt}, {std::nullopt, Mark::countable}};
  if (with_marks) belows.push_back({std::nullopt, Mark::uncountable});
  std::vector<NodeSpec::AboveSpec> aboves = {{std::nullopt}, {Mark::countable}};
  if (with_marks) aboves.push_back({Mark::uncountable});

  std::vector<AbstractNest> out;
  for (std::size_t size = 2; size <= max_nodes; ++size) {
    std::vector<NodeSpec> spec(size);
    spec.front().label = "0";
    spec.back().label = "X";
    for (std::size_t i = 1; i + 1 < size; ++i) spec[i].label = "N" + std::to_string(i);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == size) {
        try {
          out.push_back(validate_chain(spec));
        } catch (const Error&) {
          // inconsistent adjacency, skipped
        }
        return;
      }
      if (i > 0) {
        for (const auto& b : belows) {
          spec[i].below = b;
          if (i + 1 < size) {
            for (const auto& a : aboves) {
              spec[i].above = a;
              self(self, i + 1);
            }
          } else {
            spec[i].above.reset();
            self(self, i + 1);
          }
        }
      } else {
        for (const auto& a : aboves) {
          spec[0].above = a;
          self(self, 1);
        }
      }
    };
    rec(rec, 0);
  }
  return out;
}

/// Every support function on c: each monotone node map with each consistent choice of declared
/// joins at limit nodes.
inline std::vector<chain::AbstractSupportFn> all_support_fns(const chain::AbstractNest& c) {
  std::vector<chain::AbstractSupportFn> out;
  for (const auto& values : monotone_maps(c.size(), false)) {
    std::vector<std::optional<std::size_t>> ll(c.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == c.size()) {
        out.push_back(chain::AbstractSupportFn::make(c, values, ll));
        return;
      }
      if (!c.limit_from_below(i)) {
        self(self, i + 1);
        return;
      }
      for (std::size_t v = values[i - 1]; v <= values[i]; ++v) {
        ll[i] = v;
        self(self, i + 1);
      }
      ll[i].reset();
    };
    rec(rec, 0);
  }
  return out;
}

/// Greatest left-continuous support function g ≤ f, found by enumerating every monotone node map.
/// A candidate g takes its own value as declared join at each limit node and must stay below f
/// both at the node and at f's declared join there (which bounds g on the unnamed elements).
/// Returns nullopt if the candidates have no greatest element.
inline std::optional<std::vector<std::size_t>> brute_force_greatest_minorant(const chain::AbstractSupportFn& f) {
  const auto& c = f.chain();
  std::vector<std::vector<std::size_t>> candidates;
  for (const auto& g : monotone_maps(c.size(), false)) {
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) {
      ok = g[i] <= f.value(i);
      if (ok && c.limit_from_below(i)) ok = g[i] <= f.require_left_limit(i);
    }
    if (ok) candidates.push_back(g);
  }
  if (candidates.empty()) return std::nullopt;
  std::vector<std::size_t> top(c.size(), 0);
  for (const auto& g : candidates)
    for (std::size_t i = 0; i < c.size(); ++i) top[i] = std::max(top[i], g[i]);
  for (const auto& g : candidates)
    if (g == top) return top;
  return std::nullopt;
}

}  // namespace nestlab::testing
