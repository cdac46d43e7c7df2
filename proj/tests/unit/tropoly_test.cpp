#include "tropical/tropoly.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "tropical/constructions.hpp"
#include "tropical/errors.hpp"

namespace tropical {
namespace {

using ::testing::ElementsAre;

TEST(VariableLessTest, NaturalOrder) {
  const VariableLess less;
  EXPECT_TRUE(less("X_{2,1}", "X_{10,1}"));
  EXPECT_TRUE(less("X_{1,9}", "X_{1,10}"));
  EXPECT_TRUE(less("X", "Y"));
  EXPECT_FALSE(less("X_{3,3}", "X_{3,3}"));
}

TEST(ParsePolyTest, Grammar) {
  const TropPoly f = parse_poly("2XY (+) 1 * X^3 (+) -1/2");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.monomials()[0].coeff, Rational(2));
  EXPECT_EQ(f.monomials()[0].exponents, (Exponents{{"X", 1}, {"Y", 1}}));
  EXPECT_EQ(f.monomials()[1].exponents, (Exponents{{"X", 3}}));
  EXPECT_EQ(f.monomials()[2].coeff, Rational(-1, 2));
  EXPECT_TRUE(f.monomials()[2].exponents.empty());
  EXPECT_EQ(f.to_string(), "2XY (+) 1X^3 (+) -1/2");
  EXPECT_EQ(parse_poly(f.to_string()), f);
}

TEST(ParsePolyTest, SubscriptsPowersAndCoefficientSums) {
  const TropPoly f = parse_poly("X_12 X_{1,2}^{2} 3 0.5 X_12");
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.monomials()[0].coeff, Rational(7, 2));
  EXPECT_EQ(f.monomials()[0].exponents, (Exponents{{"X_{1,2}", 2}, {"X_{12}", 2}}));
  EXPECT_THAT(f.variables(), ElementsAre("X_{1,2}", "X_{12}"));
}

TEST(ParsePolyTest, MergesDuplicateMonomials) {
  const TropPoly f = parse_poly("3X (+) Y (+) 1X");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.monomials()[0].coeff, Rational(1));
  EXPECT_EQ(f.to_string(), "1X (+) Y");
}

TEST(ParsePolyTest, ReportsOffsets) {
  const auto offset = [](const char* text) {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(offset(""), 0);
  EXPECT_EQ(offset("X (+)"), 5);
  EXPECT_EQ(offset("X + Y"), 2);
  EXPECT_EQ(offset("X^"), 2);
  EXPECT_EQ(offset("X_{1,}"), 5);
}

TEST(EvalTest, LinesFromTheIntroduction) {
  const TropPoly line = parse_poly("X (+) Y (+) 0");
  EXPECT_TRUE(in_hypersurface(line, {{"X", Rational(1)}, {"Y", Rational(0)}}));
  EXPECT_FALSE(in_hypersurface(line, {{"X", Rational(-1)}, {"Y", Rational(0)}}));
  const EvalResult r = eval(line, {{"X", Rational(0)}, {"Y", Rational(0)}});
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_THAT(r.argmin, ElementsAre(0, 1, 2));
  const TropPoly shifted = parse_poly("1X (+) 1Y (+) 0");
  for (const Rational& a : {Rational(-3), Rational(-1), Rational(-1, 2), Rational(0)}) {
    const Point p{{"X", a}, {"Y", a}};
    EXPECT_EQ(in_hypersurface(line, p) && in_hypersurface(shifted, p), a <= Rational(-1));
  }
  EXPECT_THROW(eval(line, {{"X", Rational(0)}}), PreconditionError);
}

TEST(MinorStreamTest, CountsAndOrder) {
  MinorStream s(2, 3, 2, RankMode::kStandard);
  EXPECT_EQ(s.count(), 3u);
  std::vector<std::string> polys;
  while (auto m = s.next()) polys.push_back(m->poly.to_string());
  EXPECT_THAT(polys, ElementsAre("X_{1,1}X_{2,2} (+) X_{1,2}X_{2,1}",
                                 "X_{1,1}X_{2,3} (+) X_{1,3}X_{2,1}",
                                 "X_{1,2}X_{2,3} (+) X_{1,3}X_{2,2}"));
  EXPECT_FALSE(s.next().has_value());
}

TEST(MinorStreamTest, SymmetricMinorsMergeMonomials) {
  MinorStream s(3, 3, 3, RankMode::kSymmetric);
  const auto m = s.next();
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->poly.size(), 5u);
  EXPECT_EQ(generate_minors(3, 3, 3, RankMode::kStandard).next()->poly.size(), 6u);
  EXPECT_EQ(generate_minors(4, 4, 4, RankMode::kStandard).next()->poly.size(), 24u);
  EXPECT_THROW(MinorStream(3, 4, 2, RankMode::kSymmetric), PreconditionError);
  EXPECT_THROW(MinorStream(3, 4, 4, RankMode::kStandard), PreconditionError);
  EXPECT_EQ(matrix_variable(0, 11), "X_{1,12}");
}

TEST(MembershipTest, ViaMinors) {
  const MembershipResult d = membership_via_minors(builtin("diag_ones3"), 3, RankMode::kSymmetric);
  EXPECT_FALSE(d.member);
  EXPECT_EQ(d.failing, SubIndex::full(3, 3));
  EXPECT_TRUE(membership_via_minors(builtin("diag_ones3"), 3, RankMode::kStandard).member);
  EXPECT_TRUE(membership_via_minors(builtin("fano7"), 4, RankMode::kStandard).member);
  EXPECT_FALSE(membership_via_minors(builtin("fano7"), 3, RankMode::kStandard).member);
  EXPECT_THROW(membership_via_minors(builtin("fano7"), 3, RankMode::kSymmetric), PreconditionError);
  const Point p = matrix_point(builtin("q3"), RankMode::kSymmetric);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.at("X_{3,3}"), Rational(0));
}

}  // namespace
}  // namespace tropical
