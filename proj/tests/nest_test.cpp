#include <gtest/gtest.h>

#include "nestlab/error.hpp"
#include "nestlab/nest.hpp"

using namespace nestlab;

namespace {

Vector v3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }
Subspace sp(std::initializer_list<Vector> vs) { return span(std::vector<Vector>(vs), 3); }

const Subspace E1 = sp({v3(1, 0, 0)});
const Subspace E2 = sp({v3(1, 0, 0), v3(0, 1, 0)});

Nest four_chain() { return validate_nest({E1, E2}, 3); }

}  // namespace

TEST(Nest, ValidateAddsEndpointsAndSorts) {
  const Nest n = validate_nest({E2, E1, E1}, 3);
  ASSERT_EQ(n.size(), 4u);
  EXPECT_TRUE(n[0].is_zero());
  EXPECT_EQ(n[1], E1);
  EXPECT_EQ(n[2], E2);
  EXPECT_TRUE(n[3].is_full());
  EXPECT_EQ(n, Nest::standard_flag(3));
}

TEST(Nest, EmptyGivesTwoChain) { EXPECT_EQ(validate_nest({}, 3).size(), 2u); }

TEST(Nest, IncomparablePairRejected) {
  try {
    validate_nest({E1, sp({v3(0, 1, 0)})}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::incomparable_pair);
  }
}

TEST(Nest, Adjacent) {
  const Nest n = four_chain();
  EXPECT_EQ(adjacent(n, E2), std::make_pair(E1, Subspace::full(3)));
  EXPECT_EQ(adjacent(n, Subspace::zero(3)), std::make_pair(Subspace::zero(3), E1));
  EXPECT_EQ(adjacent(n, Subspace::full(3)), std::make_pair(E2, Subspace::full(3)));
  try {
    adjacent(n, sp({v3(0, 0, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_an_element);
  }
}

TEST(Nest, SmallestIntersecting) {
  const Nest n = four_chain();
  EXPECT_EQ(smallest_intersecting(n, sp({v3(0, 1, 0)})), E2);
  EXPECT_EQ(smallest_intersecting(n, sp({v3(1, 0, 0)})), E1);
  EXPECT_TRUE(smallest_intersecting(n, sp({v3(0, 1, 1)})).is_full());
  try {
    smallest_intersecting(n, Subspace::zero(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_subspace);
  }
}

TEST(Nest, PerpSpan) {
  const Nest n = four_chain();
  EXPECT_TRUE(perp_span_check(n, E1));
  EXPECT_TRUE(perp_span_check(n, Subspace::zero(3)));
  EXPECT_TRUE(perp_span_check(n, Subspace::full(3)));
}

TEST(Nest, AdjacencyIdentities) {
  const Nest n = validate_nest({sp({v3(1, 1, 0)})}, 3);
  for (std::size_t i = 0; i < n.size(); ++i) EXPECT_TRUE(adjacency_identities_hold(n, i)) << i;
}

TEST(Nest, Gap) {
  const Nest n = validate_nest({E2}, 3);
  EXPECT_EQ(n.gap(1), 2u);
  EXPECT_EQ(n.gap(2), 1u);
}
