#include "tropical/cells.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <variant>

#include "kernel.hpp"
#include "tropical/combinatorics.hpp"

namespace tropical {
namespace {

using LinearForm = std::vector<LinearTerm>;

// Witness linear forms of one submatrix, in witness order.
template <class T>
std::vector<LinearForm> witness_forms(const detail::Grid<T>& g, const std::vector<std::size_t>& rows,
                                      const std::vector<std::size_t>& cols, RankMode mode,
                                      std::size_t cap, bool& capped) {
  const detail::Selection<T> sel{&g, rows.data(), cols.data(), rows.size()};
  std::vector<std::vector<std::size_t>> matches;
  capped = false;
  detail::visit_minimizers(sel, EnumerationStrategy::kAuto,
                           [&](const std::vector<std::size_t>& match) {
                             if (matches.size() == cap) {
                               capped = true;
                               return false;
                             }
                             matches.push_back(match);
                             return true;
                           });
  std::vector<LinearForm> forms;
  if (mode == RankMode::kStandard) {
    for (const auto& match : matches) {
      LinearForm f;
      for (std::size_t p = 0; p < rows.size(); ++p) f.push_back({{rows[p], cols[match[p]]}, 1});
      forms.push_back(std::move(f));
    }
    return forms;
  }
  std::set<SymMonomial> seen;
  for (const auto& match : matches) {
    SymMonomial m = detail::sym_monomial_of(sel, match);
    if (!seen.insert(m).second) continue;
    LinearForm f;
    for (const auto& [i, j] : m.pairs) f.push_back({{i, j}, 1});
    forms.push_back(std::move(f));
  }
  return forms;
}

Equation difference(const LinearForm& lhs, const LinearForm& base) {
  LinearForm terms = lhs;
  for (const auto& t : base) terms.push_back({t.var, -t.coeff});
  return canonicalize(std::move(terms));
}

struct ChunkOutcome {
  std::vector<Equation> equations;
  std::optional<std::size_t> failure;  // first failing submatrix index in the chunk
  bool failure_is_cap = false;
};

template <class T>
EquationSystem build_system(const detail::Grid<T>& g, std::size_t r, RankMode mode,
                            std::size_t cap, Parallelism par) {
  const SubmatrixSpace space(g.rows, g.cols, r);
  std::mutex mu;
  std::map<std::size_t, ChunkOutcome> chunks;
  parallel_chunks(space.count(), par, [&](std::size_t begin, std::size_t end) {
    ChunkOutcome out;
    for (std::size_t k = begin; k < end; ++k) {
      bool capped = false;
      const auto forms = witness_forms(g, space.rows_of(k), space.cols_of(k), mode, cap, capped);
      if (capped || forms.size() < 2) {
        out.failure = k;
        out.failure_is_cap = capped;
        break;
      }
      for (std::size_t w = 1; w < forms.size(); ++w) {
        out.equations.push_back(difference(forms[w], forms[0]));
      }
    }
    std::lock_guard lock(mu);
    chunks.emplace(begin, std::move(out));
  });

  EquationSystem sys;
  sys.mode = mode;
  sys.rows = g.rows;
  sys.cols = g.cols;
  for (auto& [begin, out] : chunks) {
    if (out.failure) {
      const std::size_t k = *out.failure;
      SubIndex where{space.rows_of(k), space.cols_of(k)};
      if (out.failure_is_cap) {
        throw CapExceeded("enumeration cap " + std::to_string(cap) + " hit at " +
                          where.to_string());
      }
      throw NonsingularMinor(std::move(where));
    }
    sys.equations.insert(sys.equations.end(), std::make_move_iterator(out.equations.begin()),
                         std::make_move_iterator(out.equations.end()));
  }
  std::sort(sys.equations.begin(), sys.equations.end());
  sys.equations.erase(std::unique(sys.equations.begin(), sys.equations.end()),
                      sys.equations.end());
  return sys;
}

std::string var_name(const Variable& v) {
  return "x_{" + std::to_string(v.row + 1) + "," + std::to_string(v.col + 1) + "}";
}

std::string side_text(const std::vector<LinearTerm>& side) {
  std::string out;
  for (std::size_t k = 0; k < side.size(); ++k) {
    if (k) out += " + ";
    const auto c = side[k].coeff < 0 ? -side[k].coeff : side[k].coeff;
    if (c != 1) out += std::to_string(c);
    out += var_name(side[k].var);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

NonsingularMinor::NonsingularMinor(SubIndex where)
    : PreconditionError("submatrix " + where.to_string() +
                        " has a unique minimizing witness; the matrix is not in the prevariety"),
      where_(std::move(where)) {}

Equation canonicalize(std::vector<LinearTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LinearTerm& a, const LinearTerm& b) { return a.var < b.var; });
  Equation eq;
  for (const auto& t : terms) {
    if (!eq.terms.empty() && eq.terms.back().var == t.var) {
      eq.terms.back().coeff += t.coeff;
    } else {
      eq.terms.push_back(t);
    }
  }
  std::erase_if(eq.terms, [](const LinearTerm& t) { return t.coeff == 0; });
  if (eq.terms.empty()) return eq;
  std::int64_t g = 0;
  for (const auto& t : eq.terms) g = std::gcd(g, t.coeff);
  const std::int64_t sign = eq.terms.front().coeff < 0 ? -1 : 1;
  for (auto& t : eq.terms) t.coeff = t.coeff / g * sign;
  return eq;
}

std::size_t EquationSystem::ambient_dim() const {
  return mode == RankMode::kSymmetric ? rows * (rows + 1) / 2 : rows * cols;
}

std::size_t EquationSystem::variable_index(const Variable& v) const {
  if (mode == RankMode::kStandard) return v.row * cols + v.col;
  // Upper-triangle rows before row i hold n + (n-1) + ... + (n-i+1) slots.
  const std::size_t i = v.row, j = v.col, n = rows;
  return i * n - i * (i - 1) / 2 + (j - i);
}

Variable EquationSystem::variable_at(std::size_t index) const {
  if (mode == RankMode::kStandard) return {index / cols, index % cols};
  std::size_t i = 0;
  while (index >= rows - i) {
    index -= rows - i;
    ++i;
  }
  return {i, i + index};
}

EquationSystem minor_equations(const TropMatrix& a, std::size_t r, RankMode mode, std::size_t cap,
                               Parallelism par) {
  if (mode == RankMode::kSymmetric && !a.symmetric()) {
    throw PreconditionError("symmetric cells need a matrix with the symmetric marker");
  }
  if (r == 0 || r > std::min(a.rows(), a.cols())) {
    throw PreconditionError("minor size must lie in 1..min(m, n)");
  }
  if (cap < 2) throw PreconditionError("enumeration cap must be at least 2");
  return std::visit([&](const auto& g) { return build_system(g, r, mode, cap, par); },
                    detail::make_grid(a));
}

std::size_t system_rank(const EquationSystem& system) {
  const std::size_t ncols = system.ambient_dim();
  std::vector<std::vector<mpz_class>> m;
  m.reserve(system.equations.size());
  for (const auto& eq : system.equations) {
    std::vector<mpz_class> row(ncols);
    for (const auto& t : eq.terms) row[system.variable_index(t.var)] = static_cast<long>(t.coeff);
    m.push_back(std::move(row));
  }
  const std::size_t nrows = m.size();
  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && m[pivot][col] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& piv = m[rank][col];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        m[i][j] = (piv * m[i][j] - m[i][col] * m[rank][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev_pivot = piv;
    ++rank;
  }
  return rank;
}

CellResult cell_dimension(const EquationSystem& system) {
  CellResult out;
  out.ambient_dim = system.ambient_dim();
  out.equation_count = system.equations.size();
  out.system_rank = system_rank(system);
  out.dimension = out.ambient_dim - out.system_rank;
  return out;
}

CellResult cell_dimension(const TropMatrix& a, std::size_t r, RankMode mode, std::size_t cap,
                          Parallelism par) {
  return cell_dimension(minor_equations(a, r, mode, cap, par));
}

bool satisfies(const EquationSystem& system, const TropMatrix& a) {
  if (a.rows() != system.rows || a.cols() != system.cols) return false;
  for (const auto& eq : system.equations) {
    Rational sum;
    for (const auto& t : eq.terms) sum += Rational(t.coeff) * a(t.var.row, t.var.col);
    if (sum.sign() != 0) return false;
  }
  return true;
}

nlohmann::json to_json(const EquationSystem& system) {
  nlohmann::json eqs = nlohmann::json::array();
  for (const auto& eq : system.equations) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : eq.terms) {
      terms.push_back({{"var", {t.var.row + 1, t.var.col + 1}}, {"coeff", t.coeff}});
    }
    eqs.push_back(std::move(terms));
  }
  return {{"mode", to_string(system.mode)},
          {"rows", system.rows},
          {"cols", system.cols},
          {"ambient_dim", system.ambient_dim()},
          {"equations", std::move(eqs)}};
}

std::string to_text(const Equation& eq) {
  std::vector<LinearTerm> lhs, rhs;
  for (const auto& t : eq.terms) (t.coeff > 0 ? lhs : rhs).push_back(t);
  return side_text(lhs) + " = " + side_text(rhs);
}

std::string to_text(const EquationSystem& system) {
  std::string out;
  for (const auto& eq : system.equations) out += to_text(eq) + "\n";
  return out;
}

}  // namespace tropical
