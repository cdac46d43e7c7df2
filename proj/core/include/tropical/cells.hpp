#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tropical/assignment.hpp"
#include "tropical/errors.hpp"
#include "tropical/matrix.hpp"
#include "tropical/parallel.hpp"
#include "tropical/rank.hpp"

namespace tropical {

// Entry variable x_{row,col} (0-based). In symmetric systems row <= col.
struct Variable {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct LinearTerm {
  Variable var;
  std::int64_t coeff = 0;

  friend auto operator<=>(const LinearTerm&, const LinearTerm&) = default;
  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

// sum(coeff * x) = 0, canonical: variables sorted and distinct, no zero
// coefficients, content 1, first coefficient positive.
struct Equation {
  std::vector<LinearTerm> terms;

  friend auto operator<=>(const Equation&, const Equation&) = default;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// Merges duplicate variables, drops zeros and normalizes sign and content.
// Returns an empty equation for the zero form.
Equation canonicalize(std::vector<LinearTerm> terms);

struct EquationSystem {
  RankMode mode = RankMode::kStandard;
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Sorted, duplicate-free canonical equations.
  std::vector<Equation> equations;

  // m*n, or n(n+1)/2 in symmetric mode (diagonal variables included).
  std::size_t ambient_dim() const;
  // Position of a variable in the ambient coordinate order (row-major,
  // upper triangle in symmetric mode).
  std::size_t variable_index(const Variable& v) const;
  Variable variable_at(std::size_t index) const;
};

struct CellResult {
  std::size_t dimension = 0;
  std::size_t system_rank = 0;
  std::size_t equation_count = 0;
  std::size_t ambient_dim = 0;
};

// Thrown by minor_equations when an r x r submatrix has a unique minimizing
// witness, so the matrix is not in the prevariety.
class NonsingularMinor : public PreconditionError {
 public:
  explicit NonsingularMinor(SubIndex where);
  const SubIndex& where() const { return where_; }

 private:
  SubIndex where_;
};

// For each r x r submatrix with minimizing witnesses w_1 < ... < w_k
// (bijections in standard mode, distinct symmetric monomials in symmetric
// mode) adds the equations L(w_j) - L(w_1) = 0, where L sums the entry
// variables of a witness with multiplicity. Requires every r x r submatrix to
// be singular and every enumeration to finish below `cap` (CapExceeded
// otherwise).
EquationSystem minor_equations(const TropMatrix& a, std::size_t r, RankMode mode,
                               std::size_t cap = kDefaultCap, Parallelism par = {});

// Rank over the integers by fraction-free (Bareiss) elimination.
std::size_t system_rank(const EquationSystem& system);

CellResult cell_dimension(const EquationSystem& system);
CellResult cell_dimension(const TropMatrix& a, std::size_t r, RankMode mode,
                          std::size_t cap = kDefaultCap, Parallelism par = {});

// Whether the entries of `a` satisfy every equation exactly.
bool satisfies(const EquationSystem& system, const TropMatrix& a);

// {"mode", "rows", "cols", "ambient_dim", "equations": [[{"var":[i,j],"coeff":c}, ...], ...]}
// with 1-based variable indices.
nlohmann::json to_json(const EquationSystem& system);

// One line per equation, positive terms on the left: "x_{1,1} + x_{2,2} = x_{1,2} + x_{2,1}".
std::string to_text(const Equation& eq);
std::string to_text(const EquationSystem& system);

}  // namespace tropical
