#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tropical {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k);

// All k-subsets of {0..n-1} as strictly increasing vectors, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

// Lexicographic (row set, column set) pairs of an m x n matrix addressed by a
// single index in [0, count()), so scans can be split into ranges.
class SubmatrixSpace {
 public:
  SubmatrixSpace(std::size_t m, std::size_t n, std::size_t r);

  std::size_t count() const { return row_sets_.size() * col_sets_.size(); }
  const std::vector<std::size_t>& rows_of(std::size_t k) const {
    return row_sets_[k / col_sets_.size()];
  }
  const std::vector<std::size_t>& cols_of(std::size_t k) const {
    return col_sets_[k % col_sets_.size()];
  }

 private:
  std::vector<std::vector<std::size_t>> row_sets_;
  std::vector<std::vector<std::size_t>> col_sets_;
};

}  // namespace tropical
