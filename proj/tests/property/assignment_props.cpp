#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tropical/assignment.hpp"
#include "tropical/matrix_io.hpp"

namespace tropical {
namespace {

using testing::brute_det;
using testing::random_matrix;
using testing::random_symmetric;

std::vector<std::vector<std::size_t>> images(const DetResult& d) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : d.witnesses) out.push_back(w.cols);
  return out;
}

TEST(AssignmentProperty, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const TropMatrix a = random_matrix(rng, n, n, 0, trial % 2 ? 2 : 6);
    const auto expect = brute_det(a);
    for (auto s : {EnumerationStrategy::kAuto, EnumerationStrategy::kTightSubgraph,
                   EnumerationStrategy::kFactorialScan}) {
      const DetResult d = enumerate_minimizing(a, kUnlimited, s);
      EXPECT_EQ(d.value, expect.value);
      EXPECT_EQ(images(d), expect.minimizers);
    }
    EXPECT_EQ(tropdet(a).value, expect.value);
    EXPECT_EQ(is_trop_singular(a), expect.minimizers.size() >= 2);
  }
}

TEST(AssignmentProperty, SymmetricMonomialsMatchBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const TropMatrix a = random_symmetric(rng, n, 0, 3);
    const auto rows = testing::subsets(n, n - 1)[trial % n];
    const auto cols = testing::subsets(n, n - 1)[(trial / n) % n];
    const auto expect = testing::brute_det(a, rows, cols);
    EXPECT_EQ(is_sym_singular(a, SubIndex{rows, cols}), expect.sym_monomials.size() >= 2);
    EXPECT_EQ(enumerate_minimizing(a, SubIndex{rows, cols}, kUnlimited).sym_witnesses.size(),
              expect.sym_monomials.size());
  }
}

TEST(AssignmentProperty, ComplementarySlackness) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    std::uniform_int_distribution<int> d(-20, 20);
    std::vector<Rational> e;
    for (std::size_t k = 0; k < n * n; ++k) e.emplace_back(d(rng), 1 + trial % 3);
    const TropMatrix a(n, n, std::move(e));
    const Tropdet t = tropdet(a);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_LE(t.duals.row[i] + t.duals.col[j], a(i, j));
      EXPECT_EQ(t.duals.row[i] + t.duals.col[t.witness.cols[i]], a(i, t.witness.cols[i]));
    }
    EXPECT_EQ(monomial_value(a, t.witness), t.value);
  }
}

TEST(AssignmentProperty, InvariantUnderPermutationAndScaling) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const TropMatrix a = random_matrix(rng, n, n, 0, 3);
    std::vector<std::size_t> p = testing::iota_vec(n), q = testing::iota_vec(n);
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    const TropMatrix b = permute_cols(permute_rows(a, p), q);
    const auto da = enumerate_minimizing(a, kUnlimited);
    const auto db = enumerate_minimizing(b, kUnlimited);
    EXPECT_EQ(da.value, db.value);
    EXPECT_EQ(da.witnesses.size(), db.witnesses.size());
    const TropMatrix c = scale_col(scale_row(a, 0, Rational(5, 2)), n - 1, Rational(-1));
    EXPECT_EQ(tropdet(c).value, da.value + Rational(3, 2));
    EXPECT_EQ(enumerate_minimizing(c, kUnlimited).witnesses, da.witnesses);
  }
}

TEST(MatrixProperty, SerializationRoundTrips) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const TropMatrix a = trial % 2 ? random_symmetric(rng, 1 + trial % 6, -9, 9)
                                   : random_matrix(rng, 1 + trial % 4, 1 + trial % 7, -9, 9);
    EXPECT_EQ(parse_matrix(serialize_matrix(a)), a);
    EXPECT_EQ(matrix_from_json(matrix_to_json(a)), a);
  }
}

TEST(MatrixProperty, SubmatrixComposes) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const TropMatrix a = random_matrix(rng, 6, 7, 0, 9);
    const SubIndex outer{{0, 2, 3, 5}, {1, 2, 4, 6}};
    const SubIndex inner{{1, 3}, {0, 3}};
    const SubIndex direct{{2, 5}, {1, 6}};
    EXPECT_EQ(submatrix(submatrix(a, outer), inner), submatrix(a, direct));
  }
}

}  // namespace
}  // namespace tropical
