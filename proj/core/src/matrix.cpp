#include "tropical/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

std::string join_one_based(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k] + 1);
  }
  return out;
}

void check_strictly_increasing(const std::vector<std::size_t>& idx, std::size_t bound,
                               const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound) {
      throw BoundsError(std::string(what) + " index " + std::to_string(idx[k] + 1) +
                        " out of range 1.." + std::to_string(bound));
    }
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw BoundsError(std::string(what) + " indices must be strictly increasing");
    }
  }
}

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) throw BoundsError("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw BoundsError("not a permutation");
    seen[p] = true;
  }
}

}  // namespace

void SubIndex::validate(std::size_t m, std::size_t n) const {
  if (rows.size() != cols.size()) throw BoundsError("row and column index sets differ in size");
  check_strictly_increasing(rows, m, "row");
  check_strictly_increasing(cols, n, "column");
}

std::string SubIndex::to_string() const {
  return "rows{" + join_one_based(rows) + "} cols{" + join_one_based(cols) + "}";
}

SubIndex SubIndex::full(std::size_t m, std::size_t n) { return {iota_vec(m), iota_vec(n)}; }

std::string Bijection::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(rows[k] + 1) + "->" + std::to_string(cols[k] + 1);
  }
  return out + "}";
}

Bijection Bijection::identity(std::size_t n) { return {iota_vec(n), iota_vec(n)}; }

SymMonomial SymMonomial::from(const Bijection& b) {
  SymMonomial m;
  m.pairs.reserve(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    m.pairs.emplace_back(std::min(b.rows[k], b.cols[k]), std::max(b.rows[k], b.cols[k]));
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

std::string SymMonomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t run = k;
    while (run < pairs.size() && pairs[run] == pairs[k]) ++run;
    out += "X_{" + std::to_string(pairs[k].first + 1) + "," + std::to_string(pairs[k].second + 1) +
           "}";
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries,
                       bool symmetric)
    : rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      row_labels_(iota_vec(rows)),
      col_labels_(iota_vec(cols)) {
  if (entries_.size() != rows * cols) {
    throw PreconditionError("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries_.size()));
  }
  if (symmetric) {
    if (!is_symmetric_data()) throw PreconditionError("symmetric marker on asymmetric data");
    symmetric_ = true;
  }
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, bool symmetric) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  std::vector<Rational> entries;
  entries.reserve(m * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw PreconditionError("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return TropMatrix(m, n, std::move(entries), symmetric);
}

TropMatrix TropMatrix::from_ints(
    std::initializer_list<std::initializer_list<std::int64_t>> rows, bool symmetric) {
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) data.emplace_back(row.begin(), row.end());
  return from_rows(data, symmetric);
}

TropMatrix TropMatrix::zeros(std::size_t rows, std::size_t cols, bool symmetric) {
  return TropMatrix(rows, cols, std::vector<Rational>(rows * cols), symmetric);
}

const Rational& TropMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw BoundsError("entry index out of range");
  return (*this)(i, j);
}

bool TropMatrix::is_symmetric_data() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

TropMatrix TropMatrix::with_symmetric_marker(bool symmetric) const {
  if (symmetric && !is_symmetric_data()) {
    throw PreconditionError("symmetric marker on asymmetric data");
  }
  TropMatrix copy = *this;
  copy.symmetric_ = symmetric;
  return copy;
}

Rational TropMatrix::max_entry() const {
  if (entries_.empty()) throw PreconditionError("empty matrix has no entries");
  return *std::max_element(entries_.begin(), entries_.end());
}

Rational TropMatrix::min_entry() const {
  if (entries_.empty()) throw PreconditionError("empty matrix has no entries");
  return *std::min_element(entries_.begin(), entries_.end());
}

TropMatrix submatrix(const TropMatrix& a, const SubIndex& s) {
  s.validate(a.rows(), a.cols());
  std::vector<Rational> entries;
  entries.reserve(s.size() * s.size());
  for (auto i : s.rows) {
    for (auto j : s.cols) entries.push_back(a(i, j));
  }
  TropMatrix out(s.size(), s.size(), std::move(entries));
  out.symmetric_ = a.symmetric() && s.is_principal();
  for (std::size_t k = 0; k < s.size(); ++k) {
    out.row_labels_[k] = a.row_labels()[s.rows[k]];
    out.col_labels_[k] = a.col_labels()[s.cols[k]];
  }
  return out;
}

TropMatrix scale_row(const TropMatrix& a, std::size_t i, const Rational& c) {
  if (i >= a.rows()) throw BoundsError("row index out of range");
  std::vector<Rational> e = a.entries();
  for (std::size_t j = 0; j < a.cols(); ++j) e[i * a.cols() + j] += c;
  return TropMatrix(a.rows(), a.cols(), std::move(e), a.symmetric() && c.sign() == 0);
}

TropMatrix scale_col(const TropMatrix& a, std::size_t j, const Rational& c) {
  if (j >= a.cols()) throw BoundsError("column index out of range");
  std::vector<Rational> e = a.entries();
  for (std::size_t i = 0; i < a.rows(); ++i) e[i * a.cols() + j] += c;
  return TropMatrix(a.rows(), a.cols(), std::move(e), a.symmetric() && c.sign() == 0);
}

TropMatrix sym_scale(const TropMatrix& a, std::size_t i, const Rational& c) {
  if (!a.symmetric()) throw PreconditionError("sym_scale needs a symmetric matrix");
  if (i >= a.rows()) throw BoundsError("index out of range");
  std::vector<Rational> e = a.entries();
  const std::size_t n = a.cols();
  for (std::size_t k = 0; k < n; ++k) {
    e[i * n + k] += c;
    e[k * n + i] += c;
  }
  return TropMatrix(n, n, std::move(e), true);
}

TropMatrix permute_rows(const TropMatrix& a, const std::vector<std::size_t>& perm) {
  check_permutation(perm, a.rows());
  std::vector<Rational> e;
  e.reserve(a.entries().size());
  for (auto src : perm) {
    for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(a(src, j));
  }
  return TropMatrix(a.rows(), a.cols(), std::move(e));
}

TropMatrix permute_cols(const TropMatrix& a, const std::vector<std::size_t>& perm) {
  check_permutation(perm, a.cols());
  std::vector<Rational> e;
  e.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (auto src : perm) e.push_back(a(i, src));
  }
  return TropMatrix(a.rows(), a.cols(), std::move(e));
}

TropMatrix permute_symmetric(const TropMatrix& a, const std::vector<std::size_t>& perm) {
  const TropMatrix p = permute_cols(permute_rows(a, perm), perm);
  return a.symmetric() ? p.with_symmetric_marker(true) : p;
}

TropMatrix transpose(const TropMatrix& a) {
  std::vector<Rational> e;
  e.reserve(a.entries().size());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) e.push_back(a(i, j));
  }
  return TropMatrix(a.cols(), a.rows(), std::move(e), a.symmetric());
}

Rational monomial_value(const TropMatrix& a, const Bijection& b) {
  Rational sum;
  for (std::size_t k = 0; k < b.size(); ++k) sum += a.at(b.rows[k], b.cols[k]);
  return sum;
}

}  // namespace tropical
