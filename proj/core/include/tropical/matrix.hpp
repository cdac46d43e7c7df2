#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tropical/rational.hpp"

namespace tropical {

// Row and column selection of a square submatrix. Indices are 0-based and
// strictly increasing; text output renders them 1-based.
struct SubIndex {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }
  bool is_principal() const { return rows == cols; }

  // Throws BoundsError unless both sequences are strictly increasing, of equal
  // length and inside an m x n parent.
  void validate(std::size_t m, std::size_t n) const;

  // "rows{1,2} cols{5,6}"
  std::string to_string() const;

  friend auto operator<=>(const SubIndex&, const SubIndex&) = default;
  friend bool operator==(const SubIndex&, const SubIndex&) = default;

  static SubIndex full(std::size_t m, std::size_t n);
};

// Bijection from a row set to a column set: row `rows[k]` is matched with
// column `cols[k]`. Ordered lexicographically by row set, then by the image
// sequence.
struct Bijection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }
  std::string to_string() const;  // "{1->2, 2->3, 3->1}"

  friend auto operator<=>(const Bijection&, const Bijection&) = default;
  friend bool operator==(const Bijection&, const Bijection&) = default;

  static Bijection identity(std::size_t n);
};

// A monomial under the identification X_{i,j} = X_{j,i}: the sorted multiset
// of unordered index pairs {i,j}, stored as (min, max).
struct SymMonomial {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  static SymMonomial from(const Bijection& b);
  std::string to_string() const;  // "X_{1,2}X_{2,3}X_{1,3}" style, 1-based, powers folded

  friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;
};

// Dense m x n matrix of exact rationals. Values are immutable; every
// operation returns a new matrix.
//
// The symmetric marker is data: it is only set when requested and validated
// (square, equal to its transpose), and operations that may break symmetry
// clear it. Submatrices remember the parent row/column indices they were cut
// from (labels); labels are reporting metadata and do not take part in ==.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries,
             bool symmetric = false);

  static TropMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                              bool symmetric = false);
  static TropMatrix from_ints(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                              bool symmetric = false);
  static TropMatrix zeros(std::size_t rows, std::size_t cols, bool symmetric = false);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool symmetric() const { return symmetric_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const Rational& at(std::size_t i, std::size_t j) const;  // bounds-checked
  const std::vector<Rational>& entries() const { return entries_; }

  const std::vector<std::size_t>& row_labels() const { return row_labels_; }
  const std::vector<std::size_t>& col_labels() const { return col_labels_; }

  // True when the data equals its transpose (independent of the marker).
  bool is_symmetric_data() const;
  // Copy with the marker set or cleared; setting it validates the data.
  TropMatrix with_symmetric_marker(bool symmetric) const;

  Rational max_entry() const;
  Rational min_entry() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.symmetric_ == b.symmetric_ &&
           a.entries_ == b.entries_;
  }

 private:
  friend TropMatrix submatrix(const TropMatrix&, const SubIndex&);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  bool symmetric_ = false;
  std::vector<std::size_t> row_labels_;
  std::vector<std::size_t> col_labels_;
};

// The selected r x r matrix. A principal selection of a symmetric matrix keeps
// the marker; labels compose so they always refer to the outermost parent.
TropMatrix submatrix(const TropMatrix& a, const SubIndex& s);

// Tropical multiplication of one row / column by c (adds c to each entry).
TropMatrix scale_row(const TropMatrix& a, std::size_t i, const Rational& c);
TropMatrix scale_col(const TropMatrix& a, std::size_t j, const Rational& c);

// Adds c to row i and column i of a symmetric matrix (entry (i,i) gains 2c).
TropMatrix sym_scale(const TropMatrix& a, std::size_t i, const Rational& c);

// Row k of the result is row perm[k] of a (resp. column). The marker is
// cleared.
TropMatrix permute_rows(const TropMatrix& a, const std::vector<std::size_t>& perm);
TropMatrix permute_cols(const TropMatrix& a, const std::vector<std::size_t>& perm);
// Applies the same permutation to rows and columns; keeps the marker.
TropMatrix permute_symmetric(const TropMatrix& a, const std::vector<std::size_t>& perm);

TropMatrix transpose(const TropMatrix& a);

// Sum of the entries picked by a bijection (its tropical monomial value).
Rational monomial_value(const TropMatrix& a, const Bijection& b);

}  // namespace tropical
