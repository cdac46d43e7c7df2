#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/parallel.hpp"

namespace tropical {

// Dimension of the variety of m x n matrices of rank below r:
// (m + n - r + 1)(r - 1).
std::int64_t variety_dim_standard(std::int64_t m, std::int64_t n, std::int64_t r);
// Symmetric analog: (2nr - 2n + 3r - r^2 - 2) / 2.
std::int64_t variety_dim_symmetric(std::int64_t n, std::int64_t r);

enum class Verdict { kYes, kNo, kUnknown };
const char* to_string(Verdict v);

struct BasisVerdict {
  Verdict value = Verdict::kUnknown;
  // The clause that decided the verdict.
  std::string citation;
};

// Whether the r x r minors of an m x n matrix of indeterminates form a
// tropical basis: yes iff r = min(m,n), r <= 3, or r = 4 and min(m,n) <= 6.
BasisVerdict is_basis_standard(std::int64_t m, std::int64_t n, std::int64_t r);
// Symmetric n x n: yes for r in {1, 2, 3, n}; no for 4 < r < n and for r = 4,
// n > 12; unknown for r = 4, 5 <= n <= 12.
BasisVerdict is_basis_symmetric(std::int64_t n, std::int64_t r);

struct GapMove {
  // "base", "diagonal", "add-row", "add-col" (standard) or "base",
  // "diagonal", "grow" (symmetric).
  std::string kind;
  // Parameters after the move: (m, n, r), or (n, r) in symmetric mode.
  std::vector<std::int64_t> params;
  std::int64_t increment = 0;
  std::int64_t bound = 0;
  // Construction the move relies on.
  std::string construction;
};

struct GapReport {
  bool symmetric = false;
  std::vector<std::int64_t> params;
  std::int64_t variety_dim = 0;
  std::int64_t prevariety_lower_bound = 0;
  bool strict = false;
  std::vector<GapMove> path;
};

// Lower bound on the prevariety dimension along the canonical chain: from the
// base cell (6,6,5) -> 33 (r >= 5) or (7,7,4) -> 34 (r = 4), first diagonal
// moves (p,q,s) -> (p+1,q+1,s+1) adding p+q+1, then row and column moves
// adding r-1 each. Refuses with PreconditionError unless
// is_basis_standard(m,n,r) is No.
GapReport prevariety_lower_bound_standard(std::int64_t m, std::int64_t n, std::int64_t r);
// From the base (6,5) -> 19: diagonal moves (p,s) -> (p+1,s+1) adding p+1,
// then size moves adding r-1. Requires 4 < r < n.
GapReport prevariety_lower_bound_symmetric(std::int64_t n, std::int64_t r);

nlohmann::json to_json(const GapReport& report);
std::string to_text(const GapReport& report);

// Lexicographically first k x k submatrix of a symmetric matrix that is
// tropically nonsingular in the standard sense.
std::optional<SubIndex> find_nonsingular_submatrix(const TropMatrix& a, std::size_t k,
                                                   Parallelism par = {});

}  // namespace tropical
