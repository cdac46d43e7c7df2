#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/combinatorics.hpp"
#include "tropical/matrix.hpp"
#include "tropical/rank.hpp"
#include "tropical/rational.hpp"

namespace tropical {

// Orders variable names with digit runs compared numerically, so X_{2,1}
// sorts before X_{10,1}.
struct VariableLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

using Exponents = std::map<std::string, std::int64_t, VariableLess>;

// coeff ⊙ prod var^exp, i.e. the linear form coeff + sum exp * var.
struct Monomial {
  Rational coeff;
  Exponents exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Tropical sum of monomials. Duplicate exponent maps are merged by taking the
// smaller coefficient; the first occurrence fixes the position.
class TropPoly {
 public:
  explicit TropPoly(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  std::vector<std::string> variables() const;

  // Reparseable text: "2XY (+) 1X^3", "X_{1,1}X_{2,3}^2 (+) ...".
  std::string to_string() const;

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  std::vector<Monomial> monomials_;
};

// Grammar:
//   poly     := term ("(+)" term)*
//   term     := (number | factor) ("*"? (number | factor))*
//   factor   := variable ("^" int | "^{" int "}")?
//   variable := letter ("_" digits | "_{" digits ("," digits)* "}")?
// Numbers are p, p/q or exact decimals with an optional sign; several
// numbers in one term add up. "X_12" is read as X_{12}. Throws ParseError
// with a 0-based character offset.
TropPoly parse_poly(std::string_view text);

using Point = std::map<std::string, Rational>;

struct EvalResult {
  Rational value;
  // Indices of every monomial attaining the minimum, ascending.
  std::vector<std::size_t> argmin;
};

// Throws PreconditionError when the point misses a variable.
EvalResult eval(const TropPoly& f, const Point& p);
// At least two monomials attain the minimum.
bool in_hypersurface(const TropPoly& f, const Point& p);

// "X_{i,j}" for 0-based (i, j), rendered 1-based.
std::string matrix_variable(std::size_t i, std::size_t j);

struct Minor {
  SubIndex where;
  TropPoly poly;
};

// The r x r minors of an m x n matrix of indeterminates, one per (row set,
// column set) pair in lexicographic order, produced on demand. Monomials are
// the bijections with coefficient 0; in symmetric mode variables are
// X_{i,j} with i <= j and bijections with the same image monomial merge.
class MinorStream {
 public:
  MinorStream(std::size_t m, std::size_t n, std::size_t r, RankMode mode);

  std::optional<Minor> next();
  std::uint64_t count() const { return space_.count(); }

 private:
  RankMode mode_;
  std::size_t r_;
  SubmatrixSpace space_;
  std::size_t pos_ = 0;
};

MinorStream generate_minors(std::size_t m, std::size_t n, std::size_t r, RankMode mode);

// Point X_{i,j} -> a(i,j) (upper triangle only in symmetric mode).
Point matrix_point(const TropMatrix& a, RankMode mode);

struct MembershipResult {
  bool member = false;
  // First minor whose hypersurface misses the point.
  std::optional<SubIndex> failing;
};

// Evaluates every r x r minor at the matrix. Shares no code with the
// assignment solver, so it cross-checks in_prevariety.
MembershipResult membership_via_minors(const TropMatrix& a, std::size_t r, RankMode mode);

}  // namespace tropical
