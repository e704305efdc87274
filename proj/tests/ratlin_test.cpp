#include <gtest/gtest.h>

#include "nestlab/error.hpp"
#include "nestlab/ratlin.hpp"
#include "nestlab/testing/oracles.hpp"

using namespace nestlab;

namespace {

Vector v3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

Matrix m2(int a, int b, int c, int d) { return Matrix{{Rational(a), Rational(b)}, {Rational(c), Rational(d)}}; }

Subspace sp(std::initializer_list<Vector> vs) { return span(std::vector<Vector>(vs), 3); }

}  // namespace

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("+3")), "3");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "--1", "1/-2", " 1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(m2(2, 0, 0, 2)), m2(1, 0, 0, 1));
  EXPECT_EQ(rref(m2(1, 2, 2, 4)), (Matrix{{Rational(1), Rational(2)}}));
  EXPECT_EQ(rref(m2(0, 1, 1, 0)), m2(1, 0, 0, 1));
  EXPECT_EQ(rank(m2(1, 2, 2, 4)), 1u);
}

TEST(Rref, RankMatchesForwardElimination) {
  const Matrix m{{Rational(1), Rational(2), Rational(3)},
                 {Rational(2), Rational(4), Rational(6)},
                 {Rational(0), Rational(1, 2), Rational(-1)}};
  EXPECT_EQ(rank(m), nestlab::testing::elimination_rank(m));
}

TEST(Span, Examples) {
  EXPECT_TRUE(span({}, 3).is_zero());
  EXPECT_EQ(span({}, 3).ambient_dim(), 3u);
  EXPECT_EQ(sp({v3(1, 0, 0), v3(2, 0, 0)}).dim(), 1u);
  const Subspace s = sp({v3(1, 1, 0), v3(0, 1, 0)});
  ASSERT_EQ(s.dim(), 2u);
  EXPECT_EQ(s.basis()[0], v3(1, 0, 0));
  EXPECT_EQ(s.basis()[1], v3(0, 1, 0));
}

TEST(Span, IsCanonical) {
  EXPECT_EQ(sp({v3(1, 2, 3), v3(0, 1, 1)}), sp({v3(1, 3, 4), v3(2, 4, 6), v3(0, -2, -2)}));
}

TEST(Span, RejectsWrongLength) {
  EXPECT_THROW(span({Vector{Rational(1), Rational(0)}}, 3), Error);
}

TEST(Lattice, MeetExamples) {
  EXPECT_EQ(meet(sp({v3(1, 0, 0), v3(0, 1, 0)}), sp({v3(0, 1, 0), v3(0, 0, 1)})), sp({v3(0, 1, 0)}));
  const Subspace a = sp({v3(1, 2, 0)});
  EXPECT_EQ(meet(a, a), a);
  EXPECT_TRUE(meet(sp({v3(1, 0, 0)}), sp({v3(0, 1, 0)})).is_zero());
}

TEST(Lattice, JoinExamples) {
  const Subspace e12 = sp({v3(1, 0, 0), v3(0, 1, 0)});
  EXPECT_EQ(join(sp({v3(1, 0, 0)}), sp({v3(0, 1, 0)})), e12);
  EXPECT_EQ(join(e12, Subspace::zero(3)), e12);
  EXPECT_EQ(join(sp({v3(1, 1, 0)}), sp({v3(1, -1, 0)})), e12);
}

TEST(Lattice, AmbientMismatchThrows) {
  try {
    meet(Subspace::zero(2), Subspace::zero(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator(sp({v3(1, 0, 0)})), sp({v3(0, 1, 0), v3(0, 0, 1)}));
  EXPECT_TRUE(annihilator(Subspace::zero(3)).is_full());
  const Subspace s = sp({v3(1, 1, 0)});
  EXPECT_EQ(annihilator(annihilator(s)), s);
}

TEST(QuotientDim, Examples) {
  const Subspace e1 = sp({v3(1, 0, 0)});
  EXPECT_EQ(quotient_dim(e1, sp({v3(1, 0, 0), v3(0, 1, 0)})), 1u);
  EXPECT_EQ(quotient_dim(e1, e1), 0u);
  EXPECT_EQ(quotient_dim(Subspace::zero(3), Subspace::full(3)), 3u);
  try {
    quotient_dim(e1, sp({v3(0, 1, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::containment_violation);
  }
}

TEST(Kernel, VectorsAreAnnihilated) {
  const Matrix m{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(7)}};
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(m * k[0]));
}

TEST(Matrix, OuterIsColumnTimesRow) {
  const Matrix t = Matrix::outer(v3(1, 0, 0), v3(0, 0, 1));
  EXPECT_EQ(t, Matrix::unit(3, 0, 2));
  EXPECT_EQ(t * v3(4, 5, 6), v3(6, 0, 0));
}

TEST(Matrix, ImageAndColumnSpace) {
  const Matrix t{{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(0)},
                 {Rational(0), Rational(0), Rational(0)}};
  EXPECT_EQ(column_space(t), sp({v3(1, 0, 0), v3(0, 1, 0)}));
  EXPECT_EQ(image(t, sp({v3(1, 0, 0)})), sp({v3(1, 0, 0)}));
}
