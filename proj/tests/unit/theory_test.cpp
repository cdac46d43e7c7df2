#include "tropical/theory.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "tropical/constructions.hpp"
#include "tropical/errors.hpp"
#include "tropical/rank.hpp"

namespace tropical {
namespace {

TEST(VarietyDimTest, KnownValues) {
  EXPECT_EQ(variety_dim_standard(6, 6, 5), 32);
  EXPECT_EQ(variety_dim_standard(7, 7, 4), 33);
  EXPECT_EQ(variety_dim_standard(3, 3, 2), 5);
  EXPECT_EQ(variety_dim_standard(4, 5, 1), 0);
  EXPECT_EQ(variety_dim_symmetric(6, 5), 18);
  EXPECT_EQ(variety_dim_symmetric(3, 2), 3);
  EXPECT_EQ(variety_dim_symmetric(4, 1), 0);
  EXPECT_THROW(variety_dim_standard(3, 3, 4), PreconditionError);
  EXPECT_THROW(variety_dim_symmetric(3, 0), PreconditionError);
}

TEST(BasisTest, Standard) {
  EXPECT_EQ(is_basis_standard(5, 9, 5).value, Verdict::kYes);
  EXPECT_EQ(is_basis_standard(12, 12, 3).value, Verdict::kYes);
  EXPECT_EQ(is_basis_standard(6, 10, 4).value, Verdict::kYes);
  EXPECT_EQ(is_basis_standard(7, 7, 4).value, Verdict::kNo);
  EXPECT_EQ(is_basis_standard(6, 6, 5).value, Verdict::kNo);
  EXPECT_FALSE(is_basis_standard(7, 7, 4).citation.empty());
  EXPECT_STREQ(to_string(Verdict::kUnknown), "unknown");
}

TEST(BasisTest, Symmetric) {
  for (std::int64_t r : {1, 2, 3}) EXPECT_EQ(is_basis_symmetric(9, r).value, Verdict::kYes);
  EXPECT_EQ(is_basis_symmetric(9, 9).value, Verdict::kYes);
  EXPECT_EQ(is_basis_symmetric(9, 6).value, Verdict::kNo);
  EXPECT_EQ(is_basis_symmetric(13, 4).value, Verdict::kNo);
  EXPECT_EQ(is_basis_symmetric(12, 4).value, Verdict::kUnknown);
  EXPECT_EQ(is_basis_symmetric(5, 4).value, Verdict::kUnknown);
}

TEST(GapTest, BaseCases) {
  const GapReport a = prevariety_lower_bound_standard(6, 6, 5);
  EXPECT_EQ(a.prevariety_lower_bound, 33);
  EXPECT_EQ(a.variety_dim, 32);
  EXPECT_TRUE(a.strict);
  ASSERT_EQ(a.path.size(), 1u);
  EXPECT_EQ(a.path[0].kind, "base");
  EXPECT_EQ(prevariety_lower_bound_standard(7, 7, 4).prevariety_lower_bound, 34);
  EXPECT_EQ(prevariety_lower_bound_symmetric(6, 5).prevariety_lower_bound, 19);
}

TEST(GapTest, ChainsAccumulateIncrements) {
  const GapReport g = prevariety_lower_bound_standard(7, 7, 5);
  EXPECT_EQ(g.prevariety_lower_bound, 41);
  EXPECT_EQ(g.variety_dim, 40);
  std::vector<std::string> kinds;
  for (const auto& m : g.path) kinds.push_back(m.kind);
  EXPECT_THAT(kinds, ::testing::ElementsAre("base", "add-row", "add-col"));
  const GapReport d = prevariety_lower_bound_standard(8, 9, 7);
  ASSERT_EQ(d.path.front().kind, "base");
  std::int64_t total = d.path.front().bound - d.path.front().increment;
  for (const auto& m : d.path) {
    total += m.increment;
    EXPECT_EQ(m.bound, total);
  }
  EXPECT_EQ(d.prevariety_lower_bound, total);
  EXPECT_THAT(d.path.back().params, ::testing::ElementsAre(8, 9, 7));
  EXPECT_EQ(prevariety_lower_bound_symmetric(7, 5).prevariety_lower_bound, 23);
}

TEST(GapTest, RefusesBasisRegimes) {
  EXPECT_THROW(prevariety_lower_bound_standard(6, 6, 4), PreconditionError);
  EXPECT_THROW(prevariety_lower_bound_standard(6, 6, 6), PreconditionError);
  EXPECT_THROW(prevariety_lower_bound_symmetric(6, 6), PreconditionError);
  EXPECT_THROW(prevariety_lower_bound_symmetric(8, 4), PreconditionError);
}

TEST(GapTest, Rendering) {
  const GapReport g = prevariety_lower_bound_standard(7, 7, 5);
  const nlohmann::json j = to_json(g);
  EXPECT_EQ(j["prevariety_lower_bound"], 41);
  EXPECT_EQ(j["strict"], true);
  const std::string text = to_text(g);
  EXPECT_NE(text.find("prevariety dim >= 41 > 40 = variety dim"), std::string::npos);
}

TEST(FindNonsingularTest, SymmetricInputs) {
  EXPECT_FALSE(find_nonsingular_submatrix(builtin("fano7_sym"), 4).has_value());
  const auto hit = find_nonsingular_submatrix(builtin("fano7_sym"), 3);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit, *first_nonsingular(builtin("fano7_sym"), 3, RankMode::kStandard));
  EXPECT_THROW(find_nonsingular_submatrix(builtin("fano7"), 3), PreconditionError);
}

}  // namespace
}  // namespace tropical
