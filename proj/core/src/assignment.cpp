#include "tropical/assignment.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "kernel.hpp"
#include "tropical/errors.hpp"

namespace tropical {
namespace {

using detail::Selection;

void require_square(const TropMatrix& m) {
  if (!m.is_square()) throw PreconditionError("tropical determinant needs a square matrix");
  if (m.rows() == 0) throw PreconditionError("tropical determinant needs a non-empty matrix");
}

template <class T>
DualCertificate certificate_of(const detail::AssignmentSolution<T>& sol, const Rational& scale) {
  DualCertificate d;
  for (const auto& x : sol.u) d.row.push_back(detail::to_rational(x, scale));
  for (const auto& x : sol.v) d.col.push_back(detail::to_rational(x, scale));
  return d;
}

Bijection bijection_of(const SubIndex& s, const std::vector<std::size_t>& match) {
  Bijection b;
  b.rows = s.rows;
  b.cols.resize(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) b.cols[p] = s.cols[match[p]];
  return b;
}

}  // namespace

Tropdet tropdet(const TropMatrix& m) {
  require_square(m);
  return tropdet(m, SubIndex::full(m.rows(), m.cols()));
}

Tropdet tropdet(const TropMatrix& a, const SubIndex& s) {
  s.validate(a.rows(), a.cols());
  if (s.size() == 0) throw PreconditionError("empty selection");
  return std::visit(
      [&](const auto& grid) {
        Selection sel{&grid, s.rows.data(), s.cols.data(), s.size()};
        const auto sol = detail::solve_assignment(sel);
        return Tropdet{detail::to_rational(sol.value, grid.scale), bijection_of(s, sol.match),
                       certificate_of(sol, grid.scale)};
      },
      detail::make_grid(a));
}

DetResult enumerate_minimizing(const TropMatrix& m, std::size_t cap,
                               EnumerationStrategy strategy) {
  require_square(m);
  return enumerate_minimizing(m, SubIndex::full(m.rows(), m.cols()), cap, strategy);
}

DetResult enumerate_minimizing(const TropMatrix& a, const SubIndex& s, std::size_t cap,
                               EnumerationStrategy strategy) {
  s.validate(a.rows(), a.cols());
  if (s.size() == 0) throw PreconditionError("empty selection");
  if (cap < 2) throw PreconditionError("enumeration cap must be at least 2");
  if (strategy == EnumerationStrategy::kFactorialScan && s.size() > kFactorialScanMaxSize) {
    throw PreconditionError("factorial scan is limited to size " +
                            std::to_string(kFactorialScanMaxSize));
  }
  return std::visit(
      [&](const auto& grid) {
        Selection sel{&grid, s.rows.data(), s.cols.data(), s.size()};
        const auto sol = detail::solve_assignment(sel);
        DetResult out;
        out.value = detail::to_rational(sol.value, grid.scale);
        out.duals = certificate_of(sol, grid.scale);
        const bool scan =
            strategy == EnumerationStrategy::kFactorialScan ||
            (strategy == EnumerationStrategy::kAuto && s.size() <= kAutoScanMaxSize);
        if (scan) {
          const auto res = detail::factorial_scan(sel, cap);
          for (const auto& match : res.minimizers) out.witnesses.push_back(bijection_of(s, match));
          out.truncated = res.truncated;
        } else {
          detail::enumerate_tight(sel, sol, [&](const std::vector<std::size_t>& match) {
            if (out.witnesses.size() == cap) {
              out.truncated = true;
              return false;
            }
            out.witnesses.push_back(bijection_of(s, match));
            return true;
          });
        }
        std::set<SymMonomial> quotient;
        for (const auto& w : out.witnesses) quotient.insert(SymMonomial::from(w));
        out.sym_witnesses.assign(quotient.begin(), quotient.end());
        return out;
      },
      detail::make_grid(a));
}

bool is_trop_singular(const TropMatrix& m) {
  require_square(m);
  return is_trop_singular(m, SubIndex::full(m.rows(), m.cols()));
}

bool is_trop_singular(const TropMatrix& a, const SubIndex& s) {
  s.validate(a.rows(), a.cols());
  if (s.size() == 0) throw PreconditionError("empty selection");
  return std::visit(
      [&](const auto& grid) {
        return detail::selection_singular(Selection{&grid, s.rows.data(), s.cols.data(), s.size()},
                                          false);
      },
      detail::make_grid(a));
}

bool is_sym_singular(const TropMatrix& parent, const SubIndex& s) {
  if (!parent.symmetric()) throw PreconditionError("symmetric singularity needs a symmetric matrix");
  s.validate(parent.rows(), parent.cols());
  if (s.size() == 0) throw PreconditionError("empty selection");
  return std::visit(
      [&](const auto& grid) {
        return detail::selection_singular(Selection{&grid, s.rows.data(), s.cols.data(), s.size()},
                                          true);
      },
      detail::make_grid(parent));
}

}  // namespace tropical
