#include "claims.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "tropical/cells.hpp"
#include "tropical/constructions.hpp"
#include "tropical/rank.hpp"
#include "tropical/theory.hpp"
#include "tropical/tropoly.hpp"

namespace tropical::cli {
namespace {

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string rank_of(const char* name, RankMode mode, Parallelism par) {
  return str(rank_in_mode(builtin(name), mode, par).rank);
}

std::string celldim(const TropMatrix& a, std::size_t r, RankMode mode, Parallelism par) {
  return str(cell_dimension(a, r, mode, kDefaultCap, par).dimension);
}

bool on_line(const char* poly, const Rational& x, const Rational& y) {
  return in_hypersurface(parse_poly(poly), Point{{"X", x}, {"Y", y}});
}

std::string sweep_standard() {
  std::size_t checked = 0;
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t r = 1; r <= std::min(m, n); ++r) {
        if (is_basis_standard(m, n, r).value != Verdict::kNo) continue;
        if (!prevariety_lower_bound_standard(m, n, r).strict) {
          return "not strict at (" + str(m) + "," + str(n) + "," + str(r) + ")";
        }
        ++checked;
      }
    }
  }
  return "strict in all " + str(checked) + " cases";
}

std::string sweep_symmetric() {
  std::size_t checked = 0;
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = 5; r < n; ++r) {
      if (!prevariety_lower_bound_symmetric(n, r).strict) {
        return "not strict at (" + str(n) + "," + str(r) + ")";
      }
      ++checked;
    }
  }
  return "strict in all " + str(checked) + " cases";
}

std::vector<Claim> make_claims() {
  using M = RankMode;
  std::vector<Claim> c;
  c.push_back({"rank-fano7", "tropical rank of the Fano cocircuit matrix", "published", "3",
               [](Parallelism p) { return rank_of("fano7", M::kStandard, p); }});
  c.push_back({"fano7-sym-permutation",
               "fano7 with rows permuted by (27)(36)(45) equals fano7_sym", "published", "true",
               [](Parallelism) {
                 const auto permuted = permute_rows(builtin("fano7"), {0, 6, 5, 4, 3, 2, 1});
                 return str(permuted == builtin("fano7_sym").with_symmetric_marker(false));
               }});
  c.push_back({"rank-fano7-sym", "standard tropical rank of fano7_sym", "published", "3",
               [](Parallelism p) { return rank_of("fano7_sym", M::kStandard, p); }});
  c.push_back({"symrank-fano7-sym", "symmetric tropical rank of fano7_sym", "published", "4",
               [](Parallelism p) { return rank_of("fano7_sym", M::kSymmetric, p); }});
  c.push_back({"symrank-fano13-sym", "symmetric tropical rank of the 13x13 block matrix",
               "published", "3",
               [](Parallelism p) { return rank_of("fano13_sym", M::kSymmetric, p); }});
  c.push_back({"rank-shitov6", "tropical rank of shitov6", "published", "4",
               [](Parallelism p) { return rank_of("shitov6", M::kStandard, p); }});
  c.push_back({"shitov6-sym-permutation",
               "shitov6 with rows reversed and columns rotated by two equals shitov6_sym",
               "derived", "true", [](Parallelism) {
                 const auto rows = permute_rows(builtin("shitov6"), {5, 4, 3, 2, 1, 0});
                 const auto both = permute_cols(rows, {4, 5, 0, 1, 2, 3});
                 return str(both == builtin("shitov6_sym").with_symmetric_marker(false));
               }});
  c.push_back({"symrank-shitov6-sym", "symmetric tropical rank of shitov6_sym", "published", "4",
               [](Parallelism p) { return rank_of("shitov6_sym", M::kSymmetric, p); }});
  c.push_back({"celldim-shitov6-sym-v2-standard",
               "5x5 cell dimension of shitov6_sym_v2 in R^36", "published", "33",
               [](Parallelism p) { return celldim(builtin("shitov6_sym_v2"), 5, M::kStandard, p); }});
  c.push_back({"celldim-fano7-sym-standard", "4x4 cell dimension of fano7_sym in R^49",
               "published", "34",
               [](Parallelism p) { return celldim(builtin("fano7_sym"), 4, M::kStandard, p); }});
  c.push_back({"celldim-shitov6-sym-v2-symmetric",
               "symmetric 5x5 cell dimension of shitov6_sym_v2 in R^21", "published", "19",
               [](Parallelism p) { return celldim(builtin("shitov6_sym_v2"), 5, M::kSymmetric, p); }});
  c.push_back({"celldim-shitov6-sym-standard",
               "5x5 cell dimension of shitov6_sym (entry (1,5) = 1) in R^36", "derived", "32",
               [](Parallelism p) { return celldim(builtin("shitov6_sym"), 5, M::kStandard, p); }});
  c.push_back({"celldim-shitov6-sym-symmetric",
               "symmetric 5x5 cell dimension of shitov6_sym (entry (1,5) = 1) in R^21",
               "derived", "18",
               [](Parallelism p) { return celldim(builtin("shitov6_sym"), 5, M::kSymmetric, p); }});
  c.push_back({"variety-dim-6-6-5", "dimension of the 6x6 rank < 5 variety", "published", "32",
               [](Parallelism) { return str(variety_dim_standard(6, 6, 5)); }});
  c.push_back({"variety-dim-7-7-4", "dimension of the 7x7 rank < 4 variety", "published", "33",
               [](Parallelism) { return str(variety_dim_standard(7, 7, 4)); }});
  c.push_back({"variety-dim-sym-6-5", "dimension of the symmetric 6x6 rank < 5 variety",
               "published", "18", [](Parallelism) { return str(variety_dim_symmetric(6, 5)); }});
  c.push_back({"gap-sweep-standard",
               "lower bound exceeds the variety dimension wherever the minors are no basis, "
               "m, n <= 12",
               "published", "strict in all 176 cases", [](Parallelism) { return sweep_standard(); }});
  c.push_back({"gap-sweep-symmetric",
               "symmetric lower bound exceeds the variety dimension for 4 < r < n <= 12",
               "published", "strict in all 28 cases", [](Parallelism) { return sweep_symmetric(); }});
  c.push_back({"gap-7-7-5", "lower bound for (7,7,5) along the canonical chain", "derived", "41",
               [](Parallelism) {
                 return str(prevariety_lower_bound_standard(7, 7, 5).prevariety_lower_bound);
               }});
  c.push_back({"gap-sym-7-5", "symmetric lower bound for (7,5)", "derived", "23",
               [](Parallelism) {
                 return str(prevariety_lower_bound_symmetric(7, 5).prevariety_lower_bound);
               }});
  c.push_back({"q3-equations", "canonical 3x3 equations of Q", "published", "1",
               [](Parallelism p) {
                 return str(minor_equations(builtin("q3"), 3, M::kStandard, kDefaultCap, p)
                                .equations.size());
               }});
  c.push_back({"r3-equations", "independent 3x3 equations of R", "published", "2",
               [](Parallelism p) {
                 return str(system_rank(minor_equations(builtin("r3"), 3, M::kStandard,
                                                        kDefaultCap, p)));
               }});
  c.push_back({"line-contains-1-0", "(1,0) lies on the tropical line X (+) Y (+) 0",
               "published", "true",
               [](Parallelism) { return str(on_line("X (+) Y (+) 0", 1, 0)); }});
  c.push_back({"line-misses-m1-0", "(-1,0) lies on the tropical line X (+) Y (+) 0",
               "published", "false",
               [](Parallelism) { return str(on_line("X (+) Y (+) 0", -1, 0)); }});
  c.push_back({"lines-meet-on-diagonal",
               "(a,a) lies on both X (+) Y (+) 0 and 1X (+) 1Y (+) 0 for a = -3, -1, -1/2, 0",
               "published", "true true false false", [](Parallelism) {
                 std::string out;
                 for (const Rational& a : {Rational(-3), Rational(-1), Rational(-1, 2), Rational(0)}) {
                   if (!out.empty()) out += " ";
                   out += str(on_line("X (+) Y (+) 0", a, a) && on_line("1X (+) 1Y (+) 0", a, a));
                 }
                 return out;
               }});
  c.push_back({"member-diag-ones3-symmetric",
               "diag_ones3 lies on every symmetric 3x3 minor hypersurface", "published", "false",
               [](Parallelism) {
                 return str(membership_via_minors(builtin("diag_ones3"), 3, M::kSymmetric).member);
               }});
  c.push_back({"zeros-celldim", "2x2 cell dimension of zero matrices 2x2, 3x3, 3x4", "trivial",
               "3 5 6", [](Parallelism p) {
                 return celldim(TropMatrix::zeros(2, 2), 2, M::kStandard, p) + " " +
                        celldim(TropMatrix::zeros(3, 3), 2, M::kStandard, p) + " " +
                        celldim(TropMatrix::zeros(3, 4), 2, M::kStandard, p);
               }});
  return c;
}

}  // namespace

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = make_claims();
  return all;
}

ClaimReport run_claim(const Claim& claim, Parallelism par) {
  ClaimReport rep{claim.id, claim.description, claim.provenance, claim.expected, "", false, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    rep.computed = claim.compute(par);
  } catch (const std::exception& e) {
    rep.computed = std::string("error: ") + e.what();
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep.pass = rep.computed == rep.expected;
  return rep;
}

nlohmann::json to_json(const ClaimReport& report, bool timings) {
  nlohmann::json j = {{"id", report.id},
                      {"description", report.description},
                      {"expected", report.expected},
                      {"provenance", report.provenance},
                      {"computed", report.computed},
                      {"pass", report.pass}};
  if (timings) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string to_text(const ClaimReport& report, bool timings) {
  std::ostringstream os;
  os << (report.pass ? "PASS " : "FAIL ") << report.id << ": " << report.description
     << "\n     expected " << report.expected << " (" << report.provenance << "), computed "
     << report.computed;
  if (timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", report.elapsed_ms);
    os << ", " << buf << " ms";
  }
  os << "\n";
  return os.str();
}

}  // namespace tropical::cli
