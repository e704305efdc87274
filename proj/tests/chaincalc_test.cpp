#include <gtest/gtest.h>

#include "nestlab/chaincalc.hpp"
#include "nestlab/error.hpp"
#include "nestlab/testing/oracles.hpp"

using namespace nestlab;
using namespace nestlab::chain;

namespace {

using Above = std::optional<Mark>;
constexpr Mark C = Mark::countable;
constexpr Mark U = Mark::uncountable;

NodeSpec bottom(Above above = std::nullopt) { return {"0", std::nullopt, NodeSpec::AboveSpec{above}}; }

NodeSpec jump(std::string label, Gap g, Above above = std::nullopt, bool last = false) {
  NodeSpec n{std::move(label), NodeSpec::BelowSpec{g, std::nullopt}, NodeSpec::AboveSpec{above}};
  if (last) n.above.reset();
  return n;
}

NodeSpec lim(std::string label, Mark m, Above above = std::nullopt, bool last = false) {
  NodeSpec n{std::move(label), NodeSpec::BelowSpec{std::nullopt, m}, NodeSpec::AboveSpec{above}};
  if (last) n.above.reset();
  return n;
}

/// The five named points t = 0, 1/4, 1/2, 3/4, 1 of the continuous nest on [0,1].
AbstractNest continuous(Mark mark = C) {
  return validate_chain({bottom(mark), lim("1/4", mark, mark), lim("1/2", mark, mark), lim("3/4", mark, mark),
                         lim("X", mark, std::nullopt, true)});
}

using LL = std::vector<std::optional<std::size_t>>;

AbstractSupportFn exa1_phi(const AbstractNest& c) {
  return AbstractSupportFn::make(c, {0, 1, 4, 4, 4}, LL{std::nullopt, 1, 2, 4, 4});
}

AbstractSupportFn exa1_psi(const AbstractNest& c) {
  return AbstractSupportFn::make(c, {0, 1, 2, 4, 4}, LL{std::nullopt, 1, 2, 4, 4});
}

AbstractSupportFn exa_psi(const AbstractNest& c) {
  return AbstractSupportFn::make(c, {0, 0, 0, 4, 4}, LL{std::nullopt, 0, 0, 4, 4});
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::unknown_command;
}

}  // namespace

TEST(Chain, ContinuousModelValidates) {
  const AbstractNest c = continuous();
  EXPECT_EQ(c.size(), 5u);
  EXPECT_TRUE(c.limit_from_below(2));
  EXPECT_TRUE(c.limit_from_above(0));
  EXPECT_TRUE(check_p_property(c));
  EXPECT_TRUE(check_p_infinity(c).holds);
}

TEST(Chain, InfiniteGaps) {
  const AbstractNest c = validate_chain({bottom(), jump("A", Gap::inf()), jump("X", Gap::inf(), std::nullopt, true)});
  EXPECT_TRUE(check_p_infinity(c).holds);
  EXPECT_FALSE(c.quotient_dim(0, 2));
}

TEST(Chain, ValidationErrors) {
  EXPECT_EQ(code_of([] {
              validate_chain({bottom(), NodeSpec{"X", NodeSpec::BelowSpec{Gap::of(2), C}, std::nullopt}});
            }),
            Errc::limit_with_finite_gap);
  EXPECT_EQ(code_of([] { validate_chain({bottom(), jump("A", Gap::of(1))}); }), Errc::missing_endpoint);
  EXPECT_EQ(code_of([] { validate_chain({bottom(C), jump("X", Gap::of(1), std::nullopt, true)}); }),
            Errc::adjacency_mismatch);
  EXPECT_EQ(code_of([] { validate_chain({bottom(), NodeSpec{"X", std::nullopt, std::nullopt}}); }),
            Errc::missing_annotation);
  EXPECT_EQ(code_of([] { validate_chain({bottom(), jump("X", Gap::of(0), std::nullopt, true)}); }),
            Errc::invalid_annotation);
}

TEST(Chain, QuotientDims) {
  const AbstractNest c = validate_chain({bottom(), jump("A", Gap::of(2)), jump("X", Gap::of(3), std::nullopt, true)});
  EXPECT_EQ(c.quotient_dim(0, 2), 5u);
  EXPECT_EQ(c.quotient_dim(1, 1), 0u);
  EXPECT_EQ(code_of([&] { c.quotient_dim(2, 1); }), Errc::containment_violation);
}

TEST(PProperty, Examples) {
  EXPECT_TRUE(check_p_property(continuous()));
  EXPECT_FALSE(check_p_property(validate_chain({bottom(C), lim("X", U, std::nullopt, true)})));
  EXPECT_TRUE(check_p_property(validate_chain({bottom(), jump("X", Gap::of(2), std::nullopt, true)})));
}

TEST(PInfinity, Examples) {
  EXPECT_TRUE(check_p_infinity(continuous()).holds);
  EXPECT_FALSE(check_p_infinity(validate_chain({bottom(), jump("X", Gap::of(2), std::nullopt, true)})).holds);
}

TEST(LeftContinuity, ExampleFunctions) {
  const AbstractNest c = continuous();
  EXPECT_FALSE(check_left_continuous(exa1_phi(c)));
  EXPECT_TRUE(check_left_continuous(exa1_psi(c)));
  const AbstractNest finite = validate_chain({bottom(), jump("A", Gap::of(1)), jump("X", Gap::of(1), std::nullopt, true)});
  for (const auto& f : nestlab::testing::all_support_fns(finite)) EXPECT_TRUE(check_left_continuous(f));
}

TEST(Regularization, ContinuousExamples) {
  const AbstractNest c = continuous();
  EXPECT_EQ(lower_regularization(exa1_phi(c)), exa1_psi(c));
  EXPECT_EQ(lower_regularization(exa1_psi(c)), exa1_psi(c));
  EXPECT_EQ(lower_regularization(exa_psi(c)), exa_psi(c));
}

TEST(Regularization, NeedsDeclaredJoin) {
  const AbstractNest c = continuous();
  const auto f = AbstractSupportFn::make(c, {0, 0, 2, 4, 4}, {});
  EXPECT_FALSE(f.left_limit(2));
  EXPECT_EQ(code_of([&] { lower_regularization(f); }), Errc::join_not_represented);
}

TEST(SupportFn, LeftLimitChecks) {
  const AbstractNest c = continuous();
  EXPECT_EQ(code_of([&] { AbstractSupportFn::make(c, {0, 1, 2, 4, 4}, LL{std::nullopt, 1, 3, 4, 4}); }),
            Errc::inconsistent_left_limit);
  const AbstractNest finite = validate_chain({bottom(), jump("X", Gap::of(1), std::nullopt, true)});
  EXPECT_EQ(code_of([&] { AbstractSupportFn::make(finite, {0, 1}, LL{std::nullopt, 1}); }),
            Errc::invalid_annotation);
}

TEST(Essential, Examples) {
  const AbstractNest c = continuous();
  EXPECT_TRUE(check_essential(exa_psi(c)));
  // A jumps by 1 over "0" and is not a limit from above, so mapping onto it breaks (B).
  const AbstractNest g = validate_chain({bottom(), jump("A", Gap::of(1)), jump("X", Gap::inf(), std::nullopt, true)});
  EXPECT_FALSE(check_essential(AbstractSupportFn::make(g, {0, 1, 1}, {})));
  EXPECT_TRUE(check_essential(AbstractSupportFn::constant(g, 0)));
  // Constancy across the finite stretch from "0" to A.
  EXPECT_FALSE(check_essential(AbstractSupportFn::make(g, {0, 2, 2}, {})));
}

TEST(Pair, Examples) {
  const AbstractNest inf = validate_chain({bottom(), jump("A", Gap::inf()), jump("X", Gap::inf(), std::nullopt, true)});
  const auto id = AbstractSupportFn::identity(inf);
  EXPECT_TRUE(check_pair(SupportPair::make(id, id)));

  const AbstractNest c = continuous();
  EXPECT_TRUE(check_pair(SupportPair::make(exa1_psi(c), exa_psi(c))));
}

TEST(Pair, StrictnessFailure) {
  // A sits one dimension above "0" and is a limit from above; Φ = Ψ = A at X.
  const AbstractNest g = validate_chain({bottom(), jump("A", Gap::of(1), C), lim("X", C, std::nullopt, true)});
  const auto phi = AbstractSupportFn::make(g, {0, 1, 1}, {});
  const auto psi = AbstractSupportFn::make(g, {0, 0, 1}, LL{std::nullopt, std::nullopt, 0});
  EXPECT_TRUE(check_essential(psi));
  EXPECT_FALSE(check_pair(SupportPair::make(phi, psi)));
}

TEST(Pair, StructuralChecks) {
  const AbstractNest g = validate_chain({bottom(), jump("A", Gap::of(1), C), lim("X", C, std::nullopt, true)});
  const auto phi = AbstractSupportFn::make(g, {0, 1, 1}, {});
  EXPECT_EQ(code_of([&] { SupportPair::make(phi, AbstractSupportFn::constant(g, 1)); }), Errc::invalid_pair);
  EXPECT_EQ(code_of([&] { SupportPair::make(AbstractSupportFn::constant(g, 1), AbstractSupportFn::constant(g, 1)); }),
            Errc::invalid_pair);
  const auto not_essential = AbstractSupportFn::make(g, {0, 1, 1}, {});
  EXPECT_EQ(code_of([&] { SupportPair::make(phi, not_essential); }), Errc::invalid_pair);
}

TEST(Predict, ExampleFunctionOnContinuousChain) {
  const AbstractNest c = continuous();
  EXPECT_EQ(predict_me_support(exa_psi(c)), exa_psi(c));
  const SupportPair m0 = predict_m0(exa_psi(c));
  EXPECT_EQ(m0.phi(), exa_psi(c));
  EXPECT_EQ(m0.psi(), exa_psi(c));
}

TEST(Predict, M0RegularizesStrictly) {
  const AbstractNest c = continuous();
  // At 1/2 the declared join is "0" while the value is 1/2.
  const auto psi = AbstractSupportFn::make(c, {0, 0, 2, 4, 4}, LL{std::nullopt, 0, 0, 4, 4});
  const SupportPair p = predict_m0(psi);
  EXPECT_EQ(p.phi().values(), (std::vector<std::size_t>{0, 0, 0, 4, 4}));
}

TEST(Predict, PairPredictions) {
  const AbstractNest c = continuous();
  const SupportPair p = SupportPair::make(exa1_psi(c), exa_psi(c));
  EXPECT_EQ(predict_max_pair(p), p);
  EXPECT_EQ(predict_m0_pair(p), p);
  const auto id = AbstractSupportFn::identity(c);
  const auto zero = AbstractSupportFn::constant(c, 0);
  EXPECT_EQ(predict_max_pair(SupportPair::make(id, zero)).psi(), zero);
}

TEST(Predict, M0PairRegularizesPsi) {
  const AbstractNest c = continuous();
  const auto phi = AbstractSupportFn::identity(c);
  const auto psi = AbstractSupportFn::make(c, {0, 0, 2, 2, 4}, LL{std::nullopt, 0, 0, 2, 2});
  const SupportPair p = predict_m0_pair(SupportPair::make(phi, psi));
  EXPECT_EQ(p.phi(), phi);
  EXPECT_EQ(p.psi().values(), (std::vector<std::size_t>{0, 0, 0, 2, 2}));
}

TEST(Predict, Guards) {
  const AbstractNest u = continuous(U);
  EXPECT_EQ(code_of([&] { predict_me_support(exa_psi(u)); }), Errc::p_property_violation);
  const AbstractNest g = validate_chain({bottom(), jump("A", Gap::of(2)), jump("X", Gap::inf(), std::nullopt, true)});
  EXPECT_EQ(code_of([&] { predict_m0(AbstractSupportFn::constant(g, 0)); }), Errc::p_infinity_violation);
  EXPECT_EQ(code_of([&] { predict_m0(AbstractSupportFn::constant(continuous(), 4)); }), Errc::nonzero_at_zero);
  EXPECT_EQ(code_of([&] { predict_me_support(AbstractSupportFn::make(g, {0, 1, 1}, {})); }), Errc::not_essential);

  // B is one dimension above A and a limit from above; Φ and Ψ both send A to B.
  const AbstractNest h = validate_chain(
      {bottom(), jump("A", Gap::inf()), jump("B", Gap::of(1), C), lim("X", C, std::nullopt, true)});
  const auto phi = AbstractSupportFn::make(h, {0, 2, 2, 3}, LL{std::nullopt, std::nullopt, std::nullopt, 3});
  const auto psi = AbstractSupportFn::make(h, {0, 2, 2, 2}, {});
  const SupportPair bad = SupportPair::make(phi, psi);
  EXPECT_FALSE(check_pair(bad));
  EXPECT_EQ(code_of([&] { predict_max_pair(bad); }), Errc::pair_inadmissible);
  EXPECT_EQ(code_of([&] { predict_m0_pair(bad); }), Errc::p_infinity_violation);
}
