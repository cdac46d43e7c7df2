#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tropical/matrix.hpp"
#include "tropical/parallel.hpp"

namespace tropical {

// kStandard: a square submatrix is singular when two bijections attain its
// tropical determinant. kSymmetric: when two distinct monomials attain it
// after identifying X_{i,j} with X_{j,i} (any submatrix, not only principal
// ones, of a symmetric matrix).
enum class RankMode { kStandard, kSymmetric };

const char* to_string(RankMode mode);

struct RankResult {
  std::size_t rank = 0;
  // Lexicographically smallest nonsingular rank x rank submatrix.
  SubIndex witness;
  RankMode mode = RankMode::kStandard;
};

// Largest r such that some r x r submatrix is nonsingular under the mode.
// Ascends r, first trying one-row/one-column extensions of the previous
// witness, and only concludes "all singular" after a full scan.
RankResult tropical_rank(const TropMatrix& a, Parallelism par = {});
RankResult symmetric_tropical_rank(const TropMatrix& a, Parallelism par = {});
RankResult rank_in_mode(const TropMatrix& a, RankMode mode, Parallelism par = {});

bool is_singular(const TropMatrix& a, const SubIndex& s, RankMode mode);

// Lexicographically first nonsingular r x r submatrix, if any.
std::optional<SubIndex> first_nonsingular(const TropMatrix& a, std::size_t r, RankMode mode,
                                          Parallelism par = {});

// Whether every r x r submatrix is singular, i.e. the matrix lies in the
// prevariety cut out by the r x r minors. Equivalent to rank < r.
bool in_prevariety(const TropMatrix& a, std::size_t r, RankMode mode, Parallelism par = {});

// Re-checks the lower-bound half of a rank certificate.
bool witness_is_nonsingular(const TropMatrix& a, const RankResult& result);

// Checks `samples` uniformly random (rank+1)-sized submatrices for
// singularity; vacuously true when rank = min(m, n).
bool sampled_upper_bound_holds(const TropMatrix& a, const RankResult& result,
                               std::size_t samples, std::uint64_t seed);

// Brute-force rank: every submatrix of every size, determinants by scanning
// all permutations. Independent of the assignment machinery; limited to
// min(m, n) <= 6.
inline constexpr std::size_t kRankOracleMaxSize = 6;
std::size_t rank_oracle(const TropMatrix& a, RankMode mode);

}  // namespace tropical
