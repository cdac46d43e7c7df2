#include "tropical/cells.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tropical/constructions.hpp"
#include "tropical/errors.hpp"

namespace tropical {
namespace {

using ::testing::ElementsAre;

LinearTerm term(std::size_t i, std::size_t j, std::int64_t c) { return {{i, j}, c}; }

TEST(CanonicalizeTest, MergesReducesAndFixesSign) {
  const Equation e = canonicalize({term(1, 0, 4), term(0, 0, -2), term(1, 0, 2), term(2, 2, 0)});
  EXPECT_THAT(e.terms, ElementsAre(term(0, 0, 1), term(1, 0, -3)));
  EXPECT_TRUE(canonicalize({term(0, 1, 2), term(0, 1, -2)}).terms.empty());
  EXPECT_EQ(canonicalize({term(0, 0, -6), term(0, 1, 6)}),
            canonicalize({term(0, 1, -1), term(0, 0, 1)}));
}

TEST(EquationSystemTest, VariableIndexing) {
  EquationSystem s{RankMode::kStandard, 3, 4, {}};
  EXPECT_EQ(s.ambient_dim(), 12u);
  EXPECT_EQ(s.variable_index({2, 1}), 9u);
  EXPECT_EQ(s.variable_at(9), (Variable{2, 1}));
  EquationSystem t{RankMode::kSymmetric, 4, 4, {}};
  EXPECT_EQ(t.ambient_dim(), 10u);
  for (std::size_t k = 0; k < 10; ++k) {
    const Variable v = t.variable_at(k);
    EXPECT_LE(v.row, v.col);
    EXPECT_EQ(t.variable_index(v), k);
  }
  EXPECT_EQ(t.variable_index({1, 1}), 4u);
}

TEST(MinorEquationsTest, QHasOneEquation) {
  const EquationSystem s = minor_equations(builtin("q3"), 3, RankMode::kStandard);
  ASSERT_EQ(s.equations.size(), 1u);
  EXPECT_EQ(to_text(s), "x_{1,1} + x_{2,2} = x_{1,2} + x_{2,1}\n");
  EXPECT_EQ(system_rank(s), 1u);
  EXPECT_TRUE(satisfies(s, builtin("q3")));
  const EquationSystem sym = minor_equations(builtin("q3"), 3, RankMode::kSymmetric);
  EXPECT_EQ(to_text(sym), "x_{1,1} + x_{2,2} = 2x_{1,2}\n");
}

TEST(MinorEquationsTest, RHasTwoIndependentEquations) {
  const EquationSystem s = minor_equations(builtin("r3"), 3, RankMode::kStandard);
  EXPECT_EQ(s.equations.size(), 2u);
  EXPECT_EQ(system_rank(s), 2u);
  EXPECT_EQ(to_text(s.equations[0]), "x_{1,1} + x_{3,2} = x_{1,2} + x_{3,1}");
  EXPECT_EQ(to_text(s.equations[1]), "x_{1,1} + x_{2,3} = x_{1,3} + x_{2,1}");
  EXPECT_EQ(cell_dimension(s).dimension, 7u);
}

TEST(CellDimensionTest, AllZerosRankOneCell) {
  for (auto [m, n] : {std::pair{2u, 2u}, {3u, 3u}, {3u, 4u}}) {
    const CellResult c = cell_dimension(TropMatrix::zeros(m, n), 2, RankMode::kStandard);
    EXPECT_EQ(c.dimension, m + n - 1);
    EXPECT_EQ(c.ambient_dim, m * n);
  }
}

TEST(CellDimensionTest, ShitovMatrices) {
  const TropMatrix v2 = builtin("shitov6_sym_v2");
  const CellResult s = cell_dimension(v2, 5, RankMode::kStandard);
  EXPECT_EQ(s.dimension, 33u);
  EXPECT_EQ(s.ambient_dim, 36u);
  const CellResult y = cell_dimension(v2, 5, RankMode::kSymmetric);
  EXPECT_EQ(y.dimension, 19u);
  EXPECT_EQ(y.ambient_dim, 21u);
  EXPECT_EQ(cell_dimension(builtin("shitov6_sym"), 5, RankMode::kStandard).dimension, 32u);
  EXPECT_EQ(cell_dimension(builtin("shitov6_sym"), 5, RankMode::kSymmetric).dimension, 18u);
}

TEST(CellDimensionTest, RejectsNonmembersAndCaps) {
  try {
    minor_equations(builtin("fano7"), 3, RankMode::kStandard);
    FAIL() << "expected NonsingularMinor";
  } catch (const NonsingularMinor& e) {
    EXPECT_EQ(e.where(), *testing::brute_first_nonsingular(builtin("fano7"), 3, false));
  }
  EXPECT_THROW(minor_equations(TropMatrix::zeros(5, 5), 5, RankMode::kStandard, 50), CapExceeded);
  EXPECT_THROW(minor_equations(builtin("fano7"), 3, RankMode::kSymmetric), PreconditionError);
  EXPECT_THROW(minor_equations(builtin("q3"), 4, RankMode::kStandard), PreconditionError);
}

TEST(CellDimensionTest, ThreadCountDoesNotChangeTheSystem) {
  const TropMatrix f = builtin("fano7_sym");
  const EquationSystem a = minor_equations(f, 4, RankMode::kStandard, kDefaultCap, Parallelism{1});
  const EquationSystem b = minor_equations(f, 4, RankMode::kStandard, kDefaultCap, Parallelism{4});
  EXPECT_EQ(a.equations, b.equations);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(CellsJsonTest, OneBasedVariables) {
  const nlohmann::json j = to_json(minor_equations(builtin("q3"), 3, RankMode::kStandard));
  EXPECT_EQ(j["mode"], "standard");
  EXPECT_EQ(j["ambient_dim"], 9);
  EXPECT_EQ(j["equations"][0][0]["var"], nlohmann::json::array({1, 1}));
  EXPECT_EQ(j["equations"][0][0]["coeff"], 1);
}

}  // namespace
}  // namespace tropical
