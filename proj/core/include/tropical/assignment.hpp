#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/rational.hpp"

namespace tropical {

inline constexpr std::size_t kDefaultCap = 10000;
inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

// How enumerate_minimizing finds all optimal bijections. kAuto scans n!
// permutations for tiny matrices and uses the tight subgraph otherwise.
enum class EnumerationStrategy { kAuto, kTightSubgraph, kFactorialScan };
inline constexpr std::size_t kAutoScanMaxSize = 4;
inline constexpr std::size_t kFactorialScanMaxSize = 8;

// Optimal dual of the assignment LP: row[k] + col[l] <= a(rows[k], cols[l])
// for every selected pair, with equality on every minimizing bijection.
struct DualCertificate {
  std::vector<Rational> row;
  std::vector<Rational> col;
};

struct Tropdet {
  Rational value;
  Bijection witness;
  DualCertificate duals;
};

struct DetResult {
  Rational value;
  // Lexicographic by image sequence. All minimizers unless `truncated`.
  std::vector<Bijection> witnesses;
  bool truncated = false;
  // Distinct images of `witnesses` under X_{i,j} = X_{j,i}, sorted.
  std::vector<SymMonomial> sym_witnesses;
  DualCertificate duals;
};

// Tropical determinant: minimum over bijections of the entry sum, with one
// witness and the dual certificate. Indices in the results refer to `a`.
Tropdet tropdet(const TropMatrix& m);
Tropdet tropdet(const TropMatrix& a, const SubIndex& s);

// Every minimizing bijection of a square matrix (or of the selected square
// submatrix), up to `cap` of them. cap must be at least 2.
DetResult enumerate_minimizing(const TropMatrix& m, std::size_t cap = kDefaultCap,
                               EnumerationStrategy strategy = EnumerationStrategy::kAuto);
DetResult enumerate_minimizing(const TropMatrix& a, const SubIndex& s,
                               std::size_t cap = kDefaultCap,
                               EnumerationStrategy strategy = EnumerationStrategy::kAuto);

// At least two minimizing bijections.
bool is_trop_singular(const TropMatrix& m);
bool is_trop_singular(const TropMatrix& a, const SubIndex& s);

// At least two distinct minimizing monomials once X_{i,j} and X_{j,i} are
// identified. `parent` must carry the symmetric marker; `s` need not be
// principal.
bool is_sym_singular(const TropMatrix& parent, const SubIndex& s);

}  // namespace tropical
