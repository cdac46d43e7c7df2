#include "tropical/rank.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <variant>

#include "kernel.hpp"
#include "tropical/combinatorics.hpp"
#include "tropical/errors.hpp"

namespace tropical {
namespace {

void require_mode(const TropMatrix& a, RankMode mode) {
  if (mode == RankMode::kSymmetric && !a.symmetric()) {
    throw PreconditionError("symmetric rank needs a matrix with the symmetric marker");
  }
}

template <class T>
bool grid_singular(const detail::Grid<T>& g, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols, RankMode mode) {
  return detail::selection_singular(
      detail::Selection<T>{&g, rows.data(), cols.data(), rows.size()},
      mode == RankMode::kSymmetric);
}

std::vector<std::size_t> with_inserted(const std::vector<std::size_t>& v, std::size_t x) {
  std::vector<std::size_t> out = v;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return out;
}

template <class T>
std::optional<SubIndex> first_nonsingular_in(const detail::Grid<T>& g, std::size_t r,
                                             RankMode mode, Parallelism par) {
  const SubmatrixSpace space(g.rows, g.cols, r);
  const auto hit = parallel_find_first(space.count(), par, [&](std::size_t k) {
    return !grid_singular(g, space.rows_of(k), space.cols_of(k), mode);
  });
  if (!hit) return std::nullopt;
  return SubIndex{space.rows_of(*hit), space.cols_of(*hit)};
}

// A nonsingular one-larger superset of `prev`, trying them in lex order.
template <class T>
std::optional<SubIndex> find_extension(const detail::Grid<T>& g, const SubIndex& prev,
                                       RankMode mode) {
  for (std::size_t i = 0; i < g.rows; ++i) {
    if (std::binary_search(prev.rows.begin(), prev.rows.end(), i)) continue;
    auto rows = with_inserted(prev.rows, i);
    for (std::size_t j = 0; j < g.cols; ++j) {
      if (std::binary_search(prev.cols.begin(), prev.cols.end(), j)) continue;
      auto cols = with_inserted(prev.cols, j);
      if (!grid_singular(g, rows, cols, mode)) return SubIndex{std::move(rows), std::move(cols)};
    }
  }
  return std::nullopt;
}

template <class T>
RankResult rank_of(const detail::Grid<T>& g, RankMode mode, Parallelism par) {
  RankResult result;
  result.mode = mode;
  SubIndex prev;
  bool prev_is_lex_first = true;
  const std::size_t top = std::min(g.rows, g.cols);
  for (std::size_t r = 1; r <= top; ++r) {
    std::optional<SubIndex> found;
    bool lex_first = false;
    if (r > 1) found = find_extension(g, prev, mode);
    if (!found) {
      found = first_nonsingular_in(g, r, mode, par);
      lex_first = true;
    }
    if (!found) break;
    result.rank = r;
    prev = std::move(*found);
    prev_is_lex_first = lex_first;
  }
  if (!prev_is_lex_first) prev = *first_nonsingular_in(g, result.rank, mode, par);
  result.witness = std::move(prev);
  return result;
}

}  // namespace

const char* to_string(RankMode mode) {
  return mode == RankMode::kSymmetric ? "symmetric" : "standard";
}

RankResult rank_in_mode(const TropMatrix& a, RankMode mode, Parallelism par) {
  require_mode(a, mode);
  if (a.rows() == 0 || a.cols() == 0) throw PreconditionError("rank of an empty matrix");
  return std::visit([&](const auto& g) { return rank_of(g, mode, par); }, detail::make_grid(a));
}

RankResult tropical_rank(const TropMatrix& a, Parallelism par) {
  return rank_in_mode(a, RankMode::kStandard, par);
}

RankResult symmetric_tropical_rank(const TropMatrix& a, Parallelism par) {
  return rank_in_mode(a, RankMode::kSymmetric, par);
}

bool is_singular(const TropMatrix& a, const SubIndex& s, RankMode mode) {
  require_mode(a, mode);
  s.validate(a.rows(), a.cols());
  if (s.size() == 0) throw PreconditionError("empty selection");
  return std::visit([&](const auto& g) { return grid_singular(g, s.rows, s.cols, mode); },
                    detail::make_grid(a));
}

std::optional<SubIndex> first_nonsingular(const TropMatrix& a, std::size_t r, RankMode mode,
                                          Parallelism par) {
  require_mode(a, mode);
  if (r == 0 || r > std::min(a.rows(), a.cols())) {
    throw PreconditionError("submatrix size must lie in 1..min(m, n)");
  }
  return std::visit([&](const auto& g) { return first_nonsingular_in(g, r, mode, par); },
                    detail::make_grid(a));
}

bool in_prevariety(const TropMatrix& a, std::size_t r, RankMode mode, Parallelism par) {
  return !first_nonsingular(a, r, mode, par).has_value();
}

bool witness_is_nonsingular(const TropMatrix& a, const RankResult& result) {
  return result.witness.size() == result.rank && !is_singular(a, result.witness, result.mode);
}

bool sampled_upper_bound_holds(const TropMatrix& a, const RankResult& result,
                               std::size_t samples, std::uint64_t seed) {
  const std::size_t k = result.rank + 1;
  if (k > std::min(a.rows(), a.cols())) return true;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
  };
  for (std::size_t t = 0; t < samples; ++t) {
    if (!is_singular(a, SubIndex{pick(a.rows()), pick(a.cols())}, result.mode)) return false;
  }
  return true;
}

// The oracle deliberately shares nothing with the code above: plain
// Rational sums over std::next_permutation and its own subset walk.
std::size_t rank_oracle(const TropMatrix& a, RankMode mode) {
  require_mode(a, mode);
  const std::size_t m = a.rows(), n = a.cols();
  if (std::min(m, n) > kRankOracleMaxSize) {
    throw PreconditionError("rank oracle is limited to min(m, n) <= 6");
  }
  // Subsets come from a bitmask walk over 2^max(m, n) masks.
  if (std::max(m, n) > 20) throw PreconditionError("rank oracle is limited to 20 rows/columns");
  auto subsets = [](std::size_t total, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < total; ++i) {
        if (mask & (1u << i)) s.push_back(i);
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  auto singular = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::vector<std::size_t> perm(cols);
    std::optional<Rational> best;
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> monomials;
    std::size_t count = 0;
    do {
      Rational sum;
      std::vector<std::pair<std::size_t, std::size_t>> mono;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        sum += a(rows[k], perm[k]);
        mono.emplace_back(std::min(rows[k], perm[k]), std::max(rows[k], perm[k]));
      }
      std::sort(mono.begin(), mono.end());
      if (!best || sum < *best) {
        best = sum;
        count = 1;
        monomials = {mono};
      } else if (sum == *best) {
        ++count;
        monomials.insert(mono);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return mode == RankMode::kSymmetric ? monomials.size() >= 2 : count >= 2;
  };
  std::size_t rank = 0;
  for (std::size_t r = 1; r <= std::min(m, n); ++r) {
    bool any = false;
    for (const auto& rows : subsets(m, r)) {
      for (const auto& cols : subsets(n, r)) {
        if (!singular(rows, cols)) {
          any = true;
          break;
        }
      }
      if (any) break;
    }
    if (any) rank = r;
  }
  return rank;
}

}  // namespace tropical
