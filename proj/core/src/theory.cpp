#include "tropical/theory.hpp"

#include <algorithm>
#include <sstream>

#include "tropical/errors.hpp"
#include "tropical/rank.hpp"

namespace tropical {
namespace {

void check_standard(std::int64_t m, std::int64_t n, std::int64_t r) {
  if (m < 1 || n < 1 || r < 1 || r > std::min(m, n)) {
    throw PreconditionError("need 1 <= r <= min(m, n)");
  }
}

void check_symmetric(std::int64_t n, std::int64_t r) {
  if (n < 1 || r < 1 || r > n) throw PreconditionError("need 1 <= r <= n");
}

std::string params_text(const std::vector<std::int64_t>& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(p[k]);
  }
  return out + ")";
}

}  // namespace

std::int64_t variety_dim_standard(std::int64_t m, std::int64_t n, std::int64_t r) {
  check_standard(m, n, r);
  return (m + n - r + 1) * (r - 1);
}

std::int64_t variety_dim_symmetric(std::int64_t n, std::int64_t r) {
  check_symmetric(n, r);
  const std::int64_t numerator = 2 * n * r - 2 * n + 3 * r - r * r - 2;
  if (numerator % 2 != 0) throw Error("odd numerator in the symmetric dimension formula");
  return numerator / 2;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    case Verdict::kUnknown:
      break;
  }
  return "unknown";
}

BasisVerdict is_basis_standard(std::int64_t m, std::int64_t n, std::int64_t r) {
  check_standard(m, n, r);
  const std::int64_t k = std::min(m, n);
  if (r == k) return {Verdict::kYes, "r = min(m,n)"};
  if (r <= 3) return {Verdict::kYes, "r <= 3"};
  if (r == 4 && k <= 6) return {Verdict::kYes, "r = 4 and min(m,n) <= 6"};
  return {Verdict::kNo, "r >= 4, r < min(m,n) and not (r = 4 and min(m,n) <= 6)"};
}

BasisVerdict is_basis_symmetric(std::int64_t n, std::int64_t r) {
  check_symmetric(n, r);
  if (r == n) return {Verdict::kYes, "r = n"};
  if (r == 1) return {Verdict::kYes, "r = 1 (minors are single variables)"};
  if (r == 2 || r == 3) return {Verdict::kYes, "r = 2 or r = 3"};
  if (r > 4) return {Verdict::kNo, "4 < r < n"};
  if (n > 12) return {Verdict::kNo, "r = 4 and n > 12"};
  return {Verdict::kUnknown, "r = 4 and 5 <= n <= 12 is open"};
}

GapReport prevariety_lower_bound_standard(std::int64_t m, std::int64_t n, std::int64_t r) {
  if (is_basis_standard(m, n, r).value != Verdict::kNo) {
    throw PreconditionError("the minors form a tropical basis here; no gap is claimed");
  }
  GapReport rep;
  rep.params = {m, n, r};
  std::int64_t p = r == 4 ? 7 : 6, q = p, s = r == 4 ? 4 : 5;
  std::int64_t bound = r == 4 ? 34 : 33;
  rep.path.push_back({"base", {p, q, s}, 0, bound, "cell dimension of a built-in matrix"});
  while (s < r) {
    const std::int64_t inc = p + q + 1;
    ++p, ++q, ++s;
    bound += inc;
    rep.path.push_back({"diagonal", {p, q, s}, inc, bound, "border"});
  }
  while (p < m) {
    ++p;
    bound += r - 1;
    rep.path.push_back({"add-row", {p, q, s}, r - 1, bound, "append combination row"});
  }
  while (q < n) {
    ++q;
    bound += r - 1;
    rep.path.push_back({"add-col", {p, q, s}, r - 1, bound, "append combination column"});
  }
  rep.variety_dim = variety_dim_standard(m, n, r);
  rep.prevariety_lower_bound = bound;
  rep.strict = bound > rep.variety_dim;
  return rep;
}

GapReport prevariety_lower_bound_symmetric(std::int64_t n, std::int64_t r) {
  if (!(4 < r && r < n)) throw PreconditionError("the symmetric gap is only claimed for 4 < r < n");
  GapReport rep;
  rep.symmetric = true;
  rep.params = {n, r};
  std::int64_t p = 6, s = 5, bound = 19;
  rep.path.push_back({"base", {p, s}, 0, bound, "cell dimension of a built-in matrix"});
  while (s < r) {
    const std::int64_t inc = p + 1;
    ++p, ++s;
    bound += inc;
    rep.path.push_back({"diagonal", {p, s}, inc, bound, "symmetric border"});
  }
  while (p < n) {
    ++p;
    bound += r - 1;
    rep.path.push_back({"grow", {p, s}, r - 1, bound, "symmetric append"});
  }
  rep.variety_dim = variety_dim_symmetric(n, r);
  rep.prevariety_lower_bound = bound;
  rep.strict = bound > rep.variety_dim;
  return rep;
}

nlohmann::json to_json(const GapReport& report) {
  nlohmann::json path = nlohmann::json::array();
  for (const auto& mv : report.path) {
    path.push_back({{"kind", mv.kind},
                    {"params", mv.params},
                    {"increment", mv.increment},
                    {"bound", mv.bound},
                    {"construction", mv.construction}});
  }
  return {{"mode", report.symmetric ? "symmetric" : "standard"},
          {"params", report.params},
          {"variety_dim", report.variety_dim},
          {"prevariety_lower_bound", report.prevariety_lower_bound},
          {"strict", report.strict},
          {"path", std::move(path)}};
}

std::string to_text(const GapReport& report) {
  std::ostringstream os;
  os << (report.symmetric ? "symmetric " : "standard ") << params_text(report.params) << "\n";
  for (const auto& mv : report.path) {
    os << "  " << mv.kind;
    for (std::size_t pad = mv.kind.size(); pad < 10; ++pad) os << ' ';
    os << params_text(mv.params);
    if (mv.kind != "base") os << "  +" << mv.increment;
    os << "  bound " << mv.bound << "  [" << mv.construction << "]\n";
  }
  os << "prevariety dim >= " << report.prevariety_lower_bound
     << (report.strict ? " > " : " <= ") << report.variety_dim << " = variety dim\n";
  os << "strict " << (report.strict ? "true" : "false") << "\n";
  return os.str();
}

std::optional<SubIndex> find_nonsingular_submatrix(const TropMatrix& a, std::size_t k,
                                                   Parallelism par) {
  if (!a.symmetric()) throw PreconditionError("expected a matrix with the symmetric marker");
  return first_nonsingular(a, k, RankMode::kStandard, par);
}

}  // namespace tropical
