#include "tropical/constructions.hpp"

#include <algorithm>
#include <optional>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

struct Edge {
  std::size_t from;
  std::size_t to;
  Rational weight;
};

// Shortest distances from a virtual source joined to every node by a zero
// edge; nullopt on a negative cycle.
std::optional<std::vector<Rational>> bellman_ford(std::size_t nodes,
                                                  const std::vector<Edge>& edges) {
  std::vector<Rational> dist(nodes, Rational(0));
  for (std::size_t pass = 0; pass <= nodes; ++pass) {
    bool changed = false;
    for (const auto& e : edges) {
      Rational candidate = dist[e.from] + e.weight;
      if (candidate < dist[e.to]) {
        dist[e.to] = std::move(candidate);
        changed = true;
      }
    }
    if (!changed) return dist;
  }
  return std::nullopt;
}

// Constraint c[sigma(i)] - c[j] <= a(i,j) - a(i,sigma(i)) - eps is the edge
// j -> sigma(i).
std::vector<Edge> constraint_edges(const TropMatrix& m, const Bijection& sigma,
                                   const Rational& eps) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t s = sigma.cols[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == s) continue;
      edges.push_back({j, s, m(i, j) - m(i, s) - eps});
    }
  }
  return edges;
}

void check_sigma(const TropMatrix& m, const Bijection& sigma) {
  if (!m.is_square()) throw PreconditionError("separating coefficients need a square matrix");
  const std::size_t n = m.rows();
  if (sigma.rows != Bijection::identity(n).rows || sigma.cols.size() != n) {
    throw PreconditionError("bijection must be written over rows 1..n");
  }
  std::vector<char> seen(n, 0);
  for (const auto c : sigma.cols) {
    if (c >= n || seen[c]) throw PreconditionError("bijection images must be a permutation");
    seen[c] = 1;
  }
}

void check_domain(const Coefficients& c, std::size_t limit) {
  if (c.empty()) throw PreconditionError("combination needs at least one coefficient");
  if (c.rbegin()->first >= limit) throw BoundsError("coefficient index outside the matrix");
}

void require_symmetric(const TropMatrix& a) {
  if (!a.symmetric()) throw PreconditionError("construction needs a symmetric matrix");
}

TropMatrix builtin_literal(std::string_view name) {
  if (name == "fano7") {
    return TropMatrix::from_ints({{1, 1, 0, 1, 0, 0, 0},
                                  {0, 1, 1, 0, 1, 0, 0},
                                  {0, 0, 1, 1, 0, 1, 0},
                                  {0, 0, 0, 1, 1, 0, 1},
                                  {1, 0, 0, 0, 1, 1, 0},
                                  {0, 1, 0, 0, 0, 1, 1},
                                  {1, 0, 1, 0, 0, 0, 1}});
  }
  if (name == "fano7_sym") {
    return TropMatrix::from_ints({{1, 1, 0, 1, 0, 0, 0},
                                  {1, 0, 1, 0, 0, 0, 1},
                                  {0, 1, 0, 0, 0, 1, 1},
                                  {1, 0, 0, 0, 1, 1, 0},
                                  {0, 0, 0, 1, 1, 0, 1},
                                  {0, 0, 1, 1, 0, 1, 0},
                                  {0, 1, 1, 0, 1, 0, 0}},
                                 true);
  }
  if (name == "fano13_sym") {
    return TropMatrix::from_ints({{0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1},
                                  {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1},
                                  {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0},
                                  {1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0},
                                  {1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                                  {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
                                 true);
  }
  if (name == "shitov6") {
    return TropMatrix::from_ints({{0, 0, 4, 4, 4, 4},
                                  {0, 0, 2, 4, 1, 4},
                                  {4, 4, 0, 0, 4, 4},
                                  {2, 4, 0, 0, 2, 4},
                                  {4, 4, 4, 4, 0, 0},
                                  {2, 4, 1, 4, 0, 0}});
  }
  if (name == "shitov6_sym") {
    return TropMatrix::from_ints({{0, 0, 2, 4, 1, 4},
                                  {0, 0, 4, 4, 4, 4},
                                  {2, 4, 2, 4, 0, 0},
                                  {4, 4, 4, 4, 0, 0},
                                  {1, 4, 0, 0, 2, 4},
                                  {4, 4, 0, 0, 4, 4}},
                                 true);
  }
  if (name == "shitov6_sym_v2") {
    return TropMatrix::from_ints({{0, 0, 2, 4, 2, 4},
                                  {0, 0, 4, 4, 4, 4},
                                  {2, 4, 2, 4, 0, 0},
                                  {4, 4, 4, 4, 0, 0},
                                  {2, 4, 0, 0, 2, 4},
                                  {4, 4, 0, 0, 4, 4}},
                                 true);
  }
  if (name == "q3") return TropMatrix::from_ints({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, true);
  if (name == "r3") return TropMatrix::from_ints({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}, true);
  if (name == "diag_ones3") {
    return TropMatrix::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, true);
  }
  throw PreconditionError("unknown builtin matrix '" + std::string(name) + "'");
}

}  // namespace

Coefficients separating_coefficients(const TropMatrix& m, const Bijection& sigma) {
  check_sigma(m, sigma);
  const std::size_t n = m.rows();
  const auto base = bellman_ford(n, constraint_edges(m, sigma, Rational(0)));
  if (!base) throw PreconditionError("bijection does not attain the tropical determinant");

  // Every cycle has nonnegative weight at eps = 0, and a positive one
  // contains an edge of reduced weight >= delta. A cycle has at most n
  // edges, so eps = delta / (n + 1) keeps every positive cycle positive.
  std::optional<Rational> delta;
  for (const auto& e : constraint_edges(m, sigma, Rational(0))) {
    const Rational reduced = e.weight + (*base)[e.from] - (*base)[e.to];
    if (reduced.sign() > 0 && (!delta || reduced < *delta)) delta = reduced;
  }
  Coefficients out;
  if (!delta) {
    if (n > 1) throw SingularInput("matrix is tropically singular");
    out.emplace(0, Rational(0));
    return out;
  }
  const Rational eps = *delta / Rational(static_cast<std::int64_t>(n + 1));
  const auto dist = bellman_ford(n, constraint_edges(m, sigma, eps));
  if (!dist) throw SingularInput("matrix is tropically singular");
  for (std::size_t j = 0; j < n; ++j) out.emplace(j, (*dist)[j]);
  return out;
}

bool separates(const TropMatrix& m, const Bijection& sigma, const Coefficients& c) {
  check_sigma(m, sigma);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!c.contains(j)) return false;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::size_t s = sigma.cols[i];
    const Rational matched = c.at(s) + m(i, s);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != s && !(matched < c.at(j) + m(i, j))) return false;
    }
  }
  return true;
}

TropMatrix append_combination_col(const TropMatrix& a, const Coefficients& c) {
  check_domain(c, a.cols());
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Rational> entries;
  entries.reserve(m * (n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    std::optional<Rational> best;
    for (const auto& [k, ck] : c) {
      Rational v = ck + a(i, k);
      if (!best || v < *best) best = std::move(v);
    }
    for (std::size_t j = 0; j < n; ++j) entries.push_back(a(i, j));
    entries.push_back(*best);
  }
  return TropMatrix(m, n + 1, std::move(entries));
}

TropMatrix append_combination_row(const TropMatrix& a, const Coefficients& c) {
  check_domain(c, a.rows());
  std::vector<Rational> entries = a.entries();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::optional<Rational> best;
    for (const auto& [k, ck] : c) {
      Rational v = ck + a(k, j);
      if (!best || v < *best) best = std::move(v);
    }
    entries.push_back(*best);
  }
  return TropMatrix(a.rows() + 1, a.cols(), std::move(entries));
}

TropMatrix border(const TropMatrix& a, std::optional<Rational> big,
                  std::optional<Rational> small) {
  if (a.rows() == 0 || a.cols() == 0) throw PreconditionError("border of an empty matrix");
  const Rational hi = a.max_entry(), lo = a.min_entry();
  const Rational p = big.value_or(hi + Rational(1));
  const Rational q = small.value_or(lo - Rational(1));
  if (!(p > hi)) throw PreconditionError("border value P must exceed every entry");
  if (!(q < lo)) throw PreconditionError("corner value M must be below every entry");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Rational> entries;
  entries.reserve((m + 1) * (n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries.push_back(a(i, j));
    entries.push_back(p);
  }
  for (std::size_t j = 0; j < n; ++j) entries.push_back(p);
  entries.push_back(q);
  return TropMatrix(m + 1, n + 1, std::move(entries));
}

TropMatrix sym_append(const TropMatrix& a, const Coefficients& c) {
  require_symmetric(a);
  return append_combination_row(append_combination_col(a, c), c).with_symmetric_marker(true);
}

TropMatrix sym_border(const TropMatrix& a, std::optional<Rational> big,
                      std::optional<Rational> small) {
  require_symmetric(a);
  return border(a, std::move(big), std::move(small)).with_symmetric_marker(true);
}

TropMatrix builtin(std::string_view name) { return builtin_literal(name); }

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "fano7", "fano7_sym", "fano13_sym", "shitov6", "shitov6_sym",
      "shitov6_sym_v2", "q3", "r3", "diag_ones3"};
  return names;
}

}  // namespace tropical
