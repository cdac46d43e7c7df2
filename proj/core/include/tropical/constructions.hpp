#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/rational.hpp"

namespace tropical {

// Tropical coefficients c_k keyed by a column (or row) index of the matrix
// they combine.
using Coefficients = std::map<std::size_t, Rational>;

// Coefficients c over the columns of a tropically nonsingular square matrix
// with c[sigma(i)] + a(i, sigma(i)) < c[j] + a(i, j) for every row i and every
// column j != sigma(i). `sigma` must be the optimal bijection of `m` written
// over its rows 0..n-1.
//
// Solves the difference constraints c[sigma(i)] - c[j] <= a(i,j) -
// a(i,sigma(i)) - eps by Bellman-Ford. Throws PreconditionError when sigma is
// not optimal and SingularInput when the matrix is singular.
Coefficients separating_coefficients(const TropMatrix& m, const Bijection& sigma);

// Direct check of the strict inequalities above.
bool separates(const TropMatrix& m, const Bijection& sigma, const Coefficients& c);

// Appends the column min_k (c_k + a(i, k)) (resp. the row min_k (c_k + a(k, j))).
// The domain of `c` must be nonempty and inside the matrix.
TropMatrix append_combination_col(const TropMatrix& a, const Coefficients& c);
TropMatrix append_combination_row(const TropMatrix& a, const Coefficients& c);

// A with a new last row and column filled with `big`, and `small` in the new
// corner. Defaults are max(A) + 1 and min(A) - 1; explicit values must be
// strictly above / below every entry.
TropMatrix border(const TropMatrix& a, std::optional<Rational> big = std::nullopt,
                  std::optional<Rational> small = std::nullopt);

// For a symmetric A: appends the combination column, then the row with the
// same coefficients taken over the extended matrix. The result is symmetric
// and keeps the marker.
TropMatrix sym_append(const TropMatrix& a, const Coefficients& c);

// border() of a symmetric matrix, keeping the marker.
TropMatrix sym_border(const TropMatrix& a, std::optional<Rational> big = std::nullopt,
                      std::optional<Rational> small = std::nullopt);

// Built-in matrices: fano7, fano7_sym, fano13_sym, shitov6, shitov6_sym,
// shitov6_sym_v2, q3, r3, diag_ones3. Matrices with symmetric data carry the
// marker. Throws PreconditionError for unknown names.
TropMatrix builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

}  // namespace tropical
