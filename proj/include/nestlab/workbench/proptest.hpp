#pragma once

// Seeded property suites over the concrete and abstract layers. Random cases draw from an
// InstanceGenerator keyed by (seed, property, case index); exhaustive parts ignore the case count.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nestlab/chaincalc.hpp"
#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"
#include "nestlab/opspace.hpp"
#include "nestlab/testing/oracles.hpp"
#include "nestlab/workbench/random.hpp"

namespace nestlab::workbench {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  ///< smallest failing input, empty when passed
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<PropertyResult> properties;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed) return false;
    return true;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice", "correspondence", "closedcar",
                                                 "decompose", "rankone", "chaincalc"};
  return names;
}

namespace detail {

/// Outcome of one case: nullopt on success, otherwise a description and a size used to pick the
/// smallest counterexample.
struct Failure {
  std::size_t size;
  std::string description;
};
using CaseResult = std::optional<Failure>;

inline std::string show(const Subspace& s) { return describe(s); }

inline std::string show(const Nest& nest) {
  std::string out = "nest[";
  for (std::size_t i = 1; i + 1 < nest.size(); ++i) out += (i > 1 ? "; " : "") + describe(nest[i]);
  return out + "] in Q^" + std::to_string(nest.ambient_dim());
}

inline std::string show(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline std::string show(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ";" : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + to_string(m(i, j));
  }
  return out + "]";
}

inline std::string show(const chain::AbstractSupportFn& f) {
  std::string out = "{";
  const auto& c = f.chain();
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += (i ? ", " : "") + c.label(i);
    if (c.limit_from_below(i)) out += "(lim)";
    out += "->" + c.label(f.value(i));
    if (f.left_limit(i)) out += "[ll " + c.label(*f.left_limit(i)) + "]";
  }
  return out + "}";
}

class Runner {
 public:
  Runner(std::uint64_t seed, std::size_t cases) : seed_(seed), cases_(cases) {}

  /// Runs body for case indices 0..count-1 with a fresh generator each.
  void random(const std::string& name, std::size_t count,
              const std::function<CaseResult(InstanceGenerator&)>& body) {
    PropertyResult r{prefix_ + name, true, count, {}};
    const std::uint64_t stream = fnv1a(r.name);
    std::optional<Failure> smallest;
    for (std::size_t i = 0; i < count; ++i) {
      InstanceGenerator gen(seed_, stream, i);
      record(run_case([&] { return body(gen); }), i, smallest);
    }
    finish(r, smallest);
  }

  /// Runs body once per element of an explicit case list.
  template <class T>
  void exhaustive(const std::string& name, const std::vector<T>& items,
                  const std::function<CaseResult(const T&)>& body) {
    PropertyResult r{prefix_ + name, true, items.size(), {}};
    std::optional<Failure> smallest;
    for (std::size_t i = 0; i < items.size(); ++i) record(run_case([&] { return body(items[i]); }), i, smallest);
    finish(r, smallest);
  }

  std::vector<PropertyResult> take() { return std::move(results_); }
  void set_prefix(std::string p) { prefix_ = std::move(p); }
  std::size_t cases() const { return cases_; }

 private:
  static CaseResult run_case(const std::function<CaseResult()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return Failure{0, std::string("unexpected exception: ") + e.what()};
    }
  }

  static void record(CaseResult res, std::size_t index, std::optional<Failure>& smallest) {
    if (!res) return;
    res->description = "case " + std::to_string(index) + ": " + res->description;
    if (!smallest || res->size < smallest->size) smallest = std::move(res);
  }

  void finish(PropertyResult r, const std::optional<Failure>& smallest) {
    if (smallest) {
      r.passed = false;
      r.counterexample = smallest->description;
    }
    results_.push_back(std::move(r));
  }

  // std::hash is not stable across standard libraries; the case streams must be.
  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
    return h;
  }

  std::uint64_t seed_;
  std::size_t cases_;
  std::string prefix_;
  std::vector<PropertyResult> results_;
};

inline CaseResult fail_if(bool bad, std::size_t size, const std::function<std::string()>& why) {
  if (!bad) return std::nullopt;
  return Failure{size, why()};
}

/// The 4-chain {0} ⊂ span{e1} ⊂ span{e1,e2} ⊂ Q^3.
inline Nest four_chain() { return Nest::standard_flag(3); }

inline void lattice_suite(Runner& run) {
  const std::size_t k = run.cases();
  run.random("modular law of dimensions", k, [](InstanceGenerator& g) {
    const std::size_t n = g.dimension();
    const Subspace a = g.subspace(n), b = g.subspace(n);
    return fail_if(meet(a, b).dim() + join(a, b).dim() != a.dim() + b.dim(), n,
                   [&] { return show(a) + " vs " + show(b); });
  });
  run.random("annihilator is an order-reversing involution", k, [](InstanceGenerator& g) {
    const std::size_t n = g.dimension();
    const Subspace a = g.subspace(n), b = g.subspace(n);
    const Subspace aa = annihilator(a), ab = annihilator(b);
    const bool bad = !(annihilator(aa) == a) || a.dim() + aa.dim() != n ||
                     b.contains(a) != aa.contains(ab);
    return fail_if(bad, n, [&] { return show(a) + " vs " + show(b); });
  });
  run.random("span is canonical", k, [](InstanceGenerator& g) {
    const std::size_t n = g.dimension();
    const Subspace a = g.subspace(n);
    // random combinations of the basis, followed by the basis itself
    std::vector<Vector> mixed;
    for (std::size_t r = 0; r < a.dim() + 2; ++r) {
      Vector v(n, Rational(0));
      for (const auto& b : a.basis()) {
        const Rational c = g.entry();
        for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
      }
      mixed.push_back(std::move(v));
    }
    for (const auto& b : a.basis()) mixed.push_back(b);
    const Subspace s = span(mixed, n);
    return fail_if(!(s == a) || !(s.basis_matrix() == rref(s.basis_matrix())), n, [&] { return show(a); });
  });
  run.random("rationals stay reduced", k, [](InstanceGenerator& g) {
    const std::size_t n = g.dimension();
    const Subspace a = g.subspace(n), b = g.subspace(n);
    bool bad = false;
    for (const Subspace& s : {meet(a, b), join(a, b), annihilator(a)})
      for (const auto& v : s.basis())
        for (const auto& x : v) {
          mpz_class gcd_value;
          mpz_gcd(gcd_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
          bad = bad || x.get_den() <= 0 || (x != 0 && gcd_value != 1);
        }
    return fail_if(bad, n, [&] { return show(a) + " vs " + show(b); });
  });
  run.random("nest adjacency identities and perp-span", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    bool bad = false;
    for (std::size_t i = 0; i < nest.size(); ++i)
      bad = bad || !adjacency_identities_hold(nest, i) || !perp_span_check(nest, nest[i]);
    return fail_if(bad, nest.ambient_dim(), [&] { return show(nest); });
  });
  run.random("smallest intersecting element", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const std::size_t n = nest.ambient_dim();
    Subspace w = g.subspace(n);
    if (w.is_zero()) w = span({g.nonzero_vector(n)}, n);
    const std::size_t l = smallest_intersecting_index(nest, w);
    bool bad = meet(nest[l], w).is_zero();
    for (std::size_t i = 0; i < l; ++i) bad = bad || !meet(nest[i], w).is_zero();
    return fail_if(bad, n, [&] { return show(nest) + ", w = " + show(w); });
  });
}

inline void correspondence_suite(Runner& run) {
  const Nest chain4 = four_chain();
  const auto maps0 = testing::monotone_maps(chain4.size(), true);
  run.exhaustive<std::vector<std::size_t>>("support_of(m_of(Φ)) = Φ on the 4-chain", maps0,
                                           [&](const std::vector<std::size_t>& v) {
                                             const SupportFn phi = SupportFn::make(chain4, v);
                                             return fail_if(!(support_of(chain4, m_of(chain4, phi)) == phi), 3,
                                                            [&] { return "Φ = " + show(v); });
                                           });
  run.exhaustive<std::vector<std::size_t>>(
      "Φ ↦ m_of(Φ) is injective on the 4-chain", maps0, [&](const std::vector<std::size_t>& v) {
        const SupportFn phi = SupportFn::make(chain4, v);
        const OperatorSpace m = m_of(chain4, phi);
        for (const auto& w : maps0)
          if (w != v && m_of(chain4, SupportFn::make(chain4, w)) == m)
            return fail_if(true, 3, [&] { return "Φ = " + show(v) + ", Θ = " + show(w); });
        return CaseResult{};
      });
  const auto maps_all = testing::monotone_maps(chain4.size(), false);
  run.exhaustive<std::vector<std::size_t>>(
      "dimension formula on the 4-chain", maps_all, [&](const std::vector<std::size_t>& v) {
        const SupportFn phi = SupportFn::make(chain4, v);
        return fail_if(m_of(chain4, phi).dim() != testing::m_dimension_formula(chain4, phi), 3,
                       [&] { return "Φ = " + show(v); });
      });
  const std::size_t k = run.cases();
  run.random("dimension formula on random nests", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, false);
    return fail_if(m_of(nest, phi).dim() != testing::m_dimension_formula(nest, phi), nest.ambient_dim(),
                   [&] { return show(nest) + ", Φ = " + show(phi.values()); });
  });
  run.random("Galois round trip on random nests", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, true);
    const OperatorSpace m = m_of(nest, phi);
    const bool bad = !(support_of(nest, m) == phi) || !(m_of(nest, support_of(nest, m)) == m);
    return fail_if(bad, nest.ambient_dim(), [&] { return show(nest) + ", Φ = " + show(phi.values()); });
  });
  run.random("m_of(Φ) = m_of(Θ) iff Φ = Θ off {0}", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, false);
    std::vector<std::size_t> v = phi.values();
    if (g.chance(0.5)) v[0] = g.uniform(0, v[1]);  // differ only at {0}
    else v = g.support_fn(nest, false).values();
    const SupportFn theta = SupportFn::make(nest, v);
    bool agree = true;
    for (std::size_t i = 1; i < nest.size(); ++i) agree = agree && phi[i] == theta[i];
    const bool same = m_of(nest, phi) == m_of(nest, theta);
    return fail_if(same != agree, nest.ambient_dim(),
                   [&] { return show(nest) + ", Φ = " + show(phi.values()) + ", Θ = " + show(v); });
  });
  run.random("finite support functions are admissible", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, false);
    const bool bad = !is_admissible(nest, phi) || !(lower_regularization(nest, phi) == phi);
    return fail_if(bad, nest.ambient_dim(), [&] { return show(nest) + ", Φ = " + show(phi.values()); });
  });
}

inline void closedcar_suite(Runner& run) {
  run.random("generated bimodules are reflexive", run.cases(), [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const auto gens = g.generators(nest.ambient_dim());
    const OperatorSpace j = generate_bimodule(nest, gens);
    const SupportFn phi = support_of(nest, j);
    bool bad = !is_bimodule(nest, j) || !(m_of(nest, phi) == j) || phi[0] != 0;
    const SupportFn ess = essential_support_of(nest, j);
    for (std::size_t i = 0; i < nest.size(); ++i) bad = bad || ess[i] != 0;
    for (std::size_t ni = 0; ni < nest.size() && !bad; ++ni)
      for (std::size_t li = 0; li < nest.size() && !bad; ++li) bad = !absorption_check(nest, j, ni, li);
    return fail_if(bad, nest.ambient_dim(), [&] {
      std::string s = show(nest) + ", generators";
      for (const auto& m : gens) s += " " + show(m);
      return s;
    });
  });
}

inline void decompose_suite(Runner& run) {
  run.random("finite-rank decomposition", run.cases(), [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, g.chance(0.5));
    const Matrix t = g.member(m_of(nest, phi));
    const auto factors = decompose(nest, phi, t);
    Matrix sum(t.rows(), t.cols());
    bool bad = factors.size() != testing::elimination_rank(t);
    for (const auto& f : factors) {
      bad = bad || !rank_one_in_m(nest, phi, f).member;
      sum = sum + f.matrix();
    }
    bad = bad || !(sum == t);
    return fail_if(bad, nest.ambient_dim(),
                   [&] { return show(nest) + ", Φ = " + show(phi.values()) + ", T = " + show(t); });
  });
}

/// The rank-one conditions agree with each other and with membership in the algebra basis.
inline bool testing_conditions(const Nest& nest, const RankOne& r) {
  const auto c = rank_one_alg_conditions(nest, r);
  return c.coherent() && c.direct == nest_algebra(nest).contains(r.matrix());
}

inline void rankone_suite(Runner& run) {
  const Nest chain4 = four_chain();
  std::vector<Vector> grid;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (a || b || c) grid.push_back({Rational(a), Rational(b), Rational(c)});
  std::vector<RankOne> pairs;
  for (const auto& f : grid)
    for (const auto& w : grid) pairs.push_back({f, w});
  run.exhaustive<RankOne>("nest-algebra rank-one conditions agree on the {-1,0,1} grid", pairs,
                          [&](const RankOne& r) {
                            const auto c = testing_conditions(chain4, r);
                            return fail_if(!c, 3, [&] { return show(r.matrix()); });
                          });
  const std::size_t k = run.cases();
  run.random("nest-algebra rank-one conditions agree on random nests", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const RankOne r{g.nonzero_vector(nest.ambient_dim()), g.nonzero_vector(nest.ambient_dim())};
    return fail_if(!testing_conditions(nest, r), nest.ambient_dim(),
                   [&] { return show(nest) + ", f⊗w = " + show(r.matrix()); });
  });
  run.random("rank-one criterion for M(Φ) agrees with membership", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    const SupportFn phi = g.support_fn(nest, false);
    const RankOne r{g.nonzero_vector(nest.ambient_dim()), g.nonzero_vector(nest.ambient_dim())};
    rank_one_in_m(nest, phi, r);  // throws on disagreement
    return CaseResult{};
  });
  run.random("rank-ones span the nest algebra", k, [](InstanceGenerator& g) {
    const Nest nest = g.nest();
    return fail_if(!(rank_one_span(nest) == nest_algebra(nest)), nest.ambient_dim(), [&] { return show(nest); });
  });
}

template <class F>
std::optional<Errc> error_of(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code();
  }
}

inline std::string show(std::optional<Errc> e) { return e ? std::string(errc_name(*e)) : std::string("success"); }

/// Every predict_* call on chain c, against expectations read straight off the node annotations.
/// Pairs are only enumerated on chains of at most three nodes.
inline CaseResult guard_case(const chain::AbstractNest& c) {
  bool p = true, p_inf = true;
  std::vector<bool> finite_jump(c.size(), false);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& node = c.node(i);
    if (node.below) {
      if (node.below->limit && node.below->cofinality == chain::Mark::uncountable) p = false;
      if (!node.below->limit && !node.below->gap.infinite) p_inf = false, finite_jump[i] = true;
    }
    if (node.above && node.above->limit && node.above->coinitiality == chain::Mark::uncountable) p = false;
  }

  std::string problem;
  auto expect = [&](const std::string& what, std::optional<Errc> got, std::optional<Errc> want) {
    if (problem.empty() && got != want) problem = what + ": expected " + show(want) + ", got " + show(got);
  };

  const auto fns = testing::all_support_fns(c);
  for (const auto& f : fns) {
    std::optional<Errc> want = !p ? std::optional(Errc::p_property_violation)
                               : !chain::check_essential(f) ? std::optional(Errc::not_essential)
                                                            : std::nullopt;
    expect("predict_me_support " + show(f), error_of([&] {
             if (!(chain::predict_me_support(f) == f)) throw std::logic_error("result differs from Ψ");
           }),
           want);
    want = !p_inf ? std::optional(Errc::p_infinity_violation)
           : f.value(0) != 0 ? std::optional(Errc::nonzero_at_zero)
                             : std::nullopt;
    expect("predict_m0 " + show(f), error_of([&] {
             const auto r = chain::predict_m0(f);
             const auto reg = chain::lower_regularization(f);
             if (!(r.phi() == reg) || !(r.psi() == reg)) throw std::logic_error("result differs from (Ψ_-, Ψ_-)");
           }),
           want);
  }

  if (c.size() <= 3) {
    for (const auto& phi : fns)
      for (const auto& psi : fns) {
        if (error_of([&] { chain::SupportPair::make(phi, psi); })) continue;
        const auto pair = chain::SupportPair::make(phi, psi);
        bool strict = true;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (finite_jump[psi.value(i)] && psi.value(i) >= phi.value(i)) strict = false;
        const std::string label = "(" + show(phi) + ", " + show(psi) + ")";
        std::optional<Errc> want = !p        ? std::optional(Errc::p_property_violation)
                                   : !strict ? std::optional(Errc::pair_inadmissible)
                                             : std::nullopt;
        expect("predict_max_pair " + label, error_of([&] {
                 if (!(chain::predict_max_pair(pair) == pair)) throw std::logic_error("result differs from (Φ, Ψ)");
               }),
               want);
        want = !p_inf    ? std::optional(Errc::p_infinity_violation)
               : !strict ? std::optional(Errc::pair_inadmissible)
                         : std::nullopt;
        expect("predict_m0_pair " + label, error_of([&] {
                 const auto r = chain::predict_m0_pair(pair);
                 if (!(r.phi() == phi) || !(r.psi() == chain::lower_regularization(psi)))
                   throw std::logic_error("result differs from (Φ, Ψ_-)");
               }),
               want);
      }
  }
  return fail_if(!problem.empty(), c.size(), [&] { return problem; });
}

inline void chaincalc_suite(Runner& run) {
  std::vector<chain::AbstractSupportFn> fns;
  for (const auto& c : testing::small_chains(4, true))
    for (auto& f : testing::all_support_fns(c)) fns.push_back(std::move(f));
  run.exhaustive<chain::AbstractSupportFn>(
      "regularization is the greatest left-continuous minorant", fns, [](const chain::AbstractSupportFn& f) {
        const auto reg = chain::lower_regularization(f);
        const auto oracle = testing::brute_force_greatest_minorant(f);
        return fail_if(!oracle || *oracle != reg.values(), f.size(), [&] { return show(f); });
      });
  run.exhaustive<chain::AbstractSupportFn>(
      "regularization is idempotent and dominated", fns, [](const chain::AbstractSupportFn& f) {
        const auto reg = chain::lower_regularization(f);
        const bool bad = !(chain::lower_regularization(reg) == reg) || !chain::pointwise_le(reg, f) ||
                         !chain::check_left_continuous(reg) ||
                         ((reg.values() == f.values()) != chain::check_left_continuous(f));
        return fail_if(bad, f.size(), [&] { return show(f); });
      });
  run.exhaustive<chain::AbstractSupportFn>(
      "essential axioms are vacuous under p-infinity", fns, [](const chain::AbstractSupportFn& f) {
        const bool bad = chain::check_p_infinity(f.chain()).holds && !chain::check_essential(f);
        return fail_if(bad, f.size(), [&] { return show(f); });
      });

  run.exhaustive<chain::AbstractNest>("predictions reject inputs outside their hypotheses",
                                      testing::small_chains(4, true),
                                      [](const chain::AbstractNest& c) { return guard_case(c); });
}

}  // namespace detail

/// Runs one suite, or every suite for "all" (property names then carry the suite as prefix).
inline SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  static const std::vector<std::pair<std::string, void (*)(detail::Runner&)>> table = {
      {"lattice", detail::lattice_suite},     {"correspondence", detail::correspondence_suite},
      {"closedcar", detail::closedcar_suite}, {"decompose", detail::decompose_suite},
      {"rankone", detail::rankone_suite},     {"chaincalc", detail::chaincalc_suite}};
  SuiteReport report{suite, seed, cases, {}};
  detail::Runner run(seed, cases);
  bool known = false;
  for (const auto& [name, body] : table) {
    if (suite != "all" && suite != name) continue;
    known = true;
    run.set_prefix(suite == "all" ? name + "/" : "");
    body(run);
  }
  if (!known) throw Error(Errc::unknown_suite, "unknown suite \"" + suite + "\"");
  report.properties = run.take();
  return report;
}

}  // namespace nestlab::workbench
