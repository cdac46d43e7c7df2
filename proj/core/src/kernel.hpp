// Internal exact-arithmetic kernel shared by assignment, rank and cells.
//
// Every algorithm is written once over a scalar T and instantiated for
// std::int64_t (the matrix scaled to integers, when that is overflow-safe) and
// for Rational. Scaling all entries by one positive constant preserves every
// comparison and tie, so both instantiations agree exactly.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "tropical/assignment.hpp"
#include "tropical/matrix.hpp"

namespace tropical::detail {

template <class T>
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> v;
  // Positive factor the entries were multiplied by (1 for Rational grids).
  Rational scale = Rational(1);

  const T& operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

using AnyGrid = std::variant<Grid<std::int64_t>, Grid<Rational>>;

// Integer image when every entry times the common denominator is small enough
// that sums, differences and dual potentials of up to max(rows, cols) terms
// cannot overflow.
std::optional<Grid<std::int64_t>> scaled_integer_grid(const TropMatrix& a);
AnyGrid make_grid(const TropMatrix& a);

inline Rational to_rational(std::int64_t x, const Rational& scale) {
  return Rational(x) / scale;
}
inline Rational to_rational(const Rational& x, const Rational& scale) { return x / scale; }

// Square selection of a grid: position (p, q) is entry (rows[p], cols[q]).
template <class T>
struct Selection {
  const Grid<T>* grid;
  const std::size_t* rows;
  const std::size_t* cols;
  std::size_t n;

  const T& operator()(std::size_t p, std::size_t q) const { return (*grid)(rows[p], cols[q]); }
};

template <class T>
struct AssignmentSolution {
  T value{};
  std::vector<std::size_t> match;  // match[p] = column position of row position p
  std::vector<T> u;                // row potentials
  std::vector<T> v;                // column potentials; u[p] + v[q] <= cost(p, q)
};

// Shortest augmenting path assignment with exact dual potentials. Potentials
// stay dual feasible throughout and are tight on the returned matching.
template <class T>
AssignmentSolution<T> solve_assignment(const Selection<T>& c) {
  const std::size_t n = c.n;
  // 1-based working arrays; column 0 is the virtual root.
  std::vector<T> u(n + 1, T{}), v(n + 1, T{});
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<T> minv(n + 1, T{});
  std::vector<char> has_min(n + 1, 0), used(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(has_min.begin(), has_min.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      bool have_delta = false;
      T delta{};
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (has_min[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  AssignmentSolution<T> out;
  out.match.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.match[p[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  out.value = T{};
  for (std::size_t i = 0; i < n; ++i) out.value += c(i, out.match[i]);
  return out;
}

// Kuhn augmenting path over an adjacency mask restricted to free rows/cols.
class TightMatcher {
 public:
  explicit TightMatcher(std::size_t n) : n_(n), tight_(n * n, 0) {}

  void set_tight(std::size_t p, std::size_t q) { tight_[p * n_ + q] = 1; }
  bool tight(std::size_t p, std::size_t q) const { return tight_[p * n_ + q] != 0; }

  // Can rows from_row..n-1 be matched into columns not in `used_col`?
  bool completable(std::size_t from_row, const std::vector<char>& used_col) const {
    std::vector<std::size_t> owner(n_, kFree);
    for (std::size_t p = from_row; p < n_; ++p) {
      std::vector<char> seen(n_, 0);
      if (!augment(p, used_col, owner, seen)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t p, const std::vector<char>& used_col, std::vector<std::size_t>& owner,
               std::vector<char>& seen) const {
    for (std::size_t q = 0; q < n_; ++q) {
      if (!tight(p, q) || used_col[q] || seen[q]) continue;
      seen[q] = 1;
      if (owner[q] == kFree || augment(owner[q], used_col, owner, seen)) {
        owner[q] = p;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> tight_;
};

// Visits every optimal assignment (as match vectors) in lexicographic order of
// the image sequence. All optimal assignments use only zero-reduced-cost
// edges of any optimal dual, and every perfect matching of that tight
// subgraph is optimal. Visit returns false to stop early; the function returns
// false iff it was stopped.
template <class T, class Visit>
bool enumerate_tight(const Selection<T>& c, const AssignmentSolution<T>& sol, Visit&& visit) {
  const std::size_t n = c.n;
  TightMatcher tm(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (c(p, q) - sol.u[p] - sol.v[q] == T{}) tm.set_tight(p, q);
    }
  }
  std::vector<std::size_t> match(n, 0);
  std::vector<char> used(n, 0);
  bool keep_going = true;
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      keep_going = visit(static_cast<const std::vector<std::size_t>&>(match));
      return;
    }
    for (std::size_t q = 0; q < n && keep_going; ++q) {
      if (!tm.tight(p, q) || used[q]) continue;
      used[q] = 1;
      if (tm.completable(p + 1, used)) {
        match[p] = q;
        self(self, p + 1);
      }
      used[q] = 0;
    }
  };
  rec(rec, 0);
  return keep_going;
}

// Direct scan over all n! assignments in lexicographic order. Keeps at most
// `cap` minimizers and flags truncation when more exist.
template <class T>
struct ScanResult {
  T value{};
  std::vector<std::vector<std::size_t>> minimizers;
  bool truncated = false;
};

template <class T>
ScanResult<T> factorial_scan(const Selection<T>& c, std::size_t cap) {
  const std::size_t n = c.n;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  ScanResult<T> out;
  bool first = true;
  std::size_t count = 0;
  do {
    T sum{};
    for (std::size_t p = 0; p < n; ++p) sum += c(p, perm[p]);
    if (first || sum < out.value) {
      first = false;
      out.value = sum;
      out.minimizers.clear();
      out.minimizers.push_back(perm);
      count = 1;
    } else if (sum == out.value) {
      ++count;
      if (out.minimizers.size() < cap) out.minimizers.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.truncated = count > cap;
  return out;
}

// Minimum over all assignments of the selection; visits every minimizer in
// lexicographic order until visit returns false.
template <class T, class Visit>
T visit_minimizers(const Selection<T>& c, EnumerationStrategy strategy, Visit&& visit) {
  const bool scan = strategy == EnumerationStrategy::kFactorialScan ||
                    (strategy == EnumerationStrategy::kAuto && c.n <= kAutoScanMaxSize);
  if (scan) {
    auto res = factorial_scan(c, static_cast<std::size_t>(-1));
    for (const auto& m : res.minimizers) {
      if (!visit(m)) break;
    }
    return res.value;
  }
  const auto sol = solve_assignment(c);
  enumerate_tight(c, sol, visit);
  return sol.value;
}

template <class T>
SymMonomial sym_monomial_of(const Selection<T>& c, const std::vector<std::size_t>& match) {
  Bijection b;
  b.rows.assign(c.rows, c.rows + c.n);
  b.cols.resize(c.n);
  for (std::size_t p = 0; p < c.n; ++p) b.cols[p] = c.cols[match[p]];
  return SymMonomial::from(b);
}

// Two or more minimizing assignments (standard), or two or more distinct
// minimizing monomials under X_{i,j} = X_{j,i} (symmetric quotient). Stops at
// the second witness.
template <class T>
bool selection_singular(const Selection<T>& c, bool symmetric_quotient,
                        EnumerationStrategy strategy = EnumerationStrategy::kAuto) {
  if (!symmetric_quotient) {
    std::size_t count = 0;
    visit_minimizers(c, strategy, [&](const std::vector<std::size_t>&) { return ++count < 2; });
    return count >= 2;
  }
  std::optional<SymMonomial> first;
  bool distinct = false;
  visit_minimizers(c, strategy, [&](const std::vector<std::size_t>& match) {
    SymMonomial m = sym_monomial_of(c, match);
    if (!first) {
      first = std::move(m);
      return true;
    }
    distinct = m != *first;
    return !distinct;
  });
  return distinct;
}

}  // namespace tropical::detail
