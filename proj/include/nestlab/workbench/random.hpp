#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nestlab/nest.hpp"
#include "nestlab/opspace.hpp"
#include "nestlab/ratlin.hpp"

namespace nestlab::workbench {

/// Seeded sampler for desk-scale instances: ambient dimension 2..5, entries in {-2..2}, nests
/// with at most four proper elements, at most three bimodule generators.
class InstanceGenerator {
 public:
  /// Each (seed, stream, index) triple gets its own independent engine, so a case can be
  /// regenerated without replaying the ones before it.
  InstanceGenerator(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Rational entry() { return Rational(std::uniform_int_distribution<int>(-2, 2)(rng_)); }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = entry();
    return v;
  }

  Vector nonzero_vector(std::size_t n) {
    for (;;) {
      Vector v = vector(n);
      if (!is_zero(v)) return v;
    }
  }

  std::size_t dimension() { return uniform(2, 5); }

  Subspace subspace(std::size_t n) {
    std::vector<Vector> vs;
    const std::size_t k = uniform(0, n);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(vector(n));
    return span(vs, n);
  }

  /// A chain span{v1..vk} for a random basis v1..vn and a random set of cut points k.
  Nest nest(std::size_t n) {
    EchelonBasis probe(n);
    std::vector<Vector> basis;
    while (basis.size() < n) {
      Vector v = vector(n);
      if (probe.insert(v)) basis.push_back(std::move(v));
    }
    std::vector<std::size_t> cuts;
    for (std::size_t k = 1; k < n; ++k) cuts.push_back(k);
    std::shuffle(cuts.begin(), cuts.end(), rng_);
    cuts.resize(uniform(0, std::min<std::size_t>(4, cuts.size())));
    std::vector<Subspace> elems;
    for (std::size_t k : cuts) elems.push_back(span(std::vector<Vector>(basis.begin(), basis.begin() + k), n));
    return validate_nest(std::move(elems), n);
  }

  Nest nest() { return nest(dimension()); }

  /// A matrix with entries in {-2..2}; sparse so that generated bimodules vary in size.
  Matrix matrix(std::size_t n) {
    Matrix m(n, n);
    const double density = chance(0.5) ? 0.2 : 0.5;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (chance(density)) m(i, j) = entry();
    return m;
  }

  std::vector<Matrix> generators(std::size_t n) {
    std::vector<Matrix> g;
    const std::size_t k = uniform(1, 3);
    for (std::size_t i = 0; i < k; ++i) g.push_back(matrix(n));
    return g;
  }

  /// A monotone map of the nest into itself; fix_zero pins {0} ↦ {0}.
  SupportFn support_fn(const Nest& nest, bool fix_zero) {
    std::vector<std::size_t> v(nest.size());
    for (auto& x : v) x = uniform(0, nest.top());
    std::sort(v.begin(), v.end());
    if (fix_zero) v[0] = 0;
    return SupportFn::make(nest, std::move(v));
  }

  /// A random combination of a random subset of the space's basis, with coefficients in {-2..2}.
  Matrix member(const OperatorSpace& s) {
    const std::size_t n = s.ambient_dim();
    Matrix t(n, n);
    for (const auto& b : s.basis())
      if (chance(0.5)) t = t + entry() * b;
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nestlab::workbench
