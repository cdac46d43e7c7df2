#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "claims.hpp"
#include "tropical/assignment.hpp"
#include "tropical/cells.hpp"
#include "tropical/constructions.hpp"
#include "tropical/errors.hpp"
#include "tropical/matrix_io.hpp"
#include "tropical/rank.hpp"
#include "tropical/theory.hpp"
#include "tropical/tropoly.hpp"

namespace tropical::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 0;
  std::string format = "text";
  std::size_t cap = kDefaultCap;
  bool timings = false;

  bool as_json() const { return format == "json"; }
  Parallelism par() const { return Parallelism{threads}; }
};

// Result of a non-streaming command in both renderings.
struct Output {
  json data;
  std::string text;
  int code = kExitOk;
};

TropMatrix load_matrix(const std::string& source) {
  constexpr std::string_view kPrefix = "builtin:";
  if (source.starts_with(kPrefix)) return builtin(std::string_view(source).substr(kPrefix.size()));
  std::ifstream in(source);
  if (!in) throw UsageError("cannot read matrix file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_any(buf.str());
}

TropMatrix with_mode(const TropMatrix& a, bool symmetric) {
  return symmetric && !a.symmetric() ? a.with_symmetric_marker(true) : a;
}

RankMode mode_of(bool symmetric) { return symmetric ? RankMode::kSymmetric : RankMode::kStandard; }

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& x : out) ++x;
  return out;
}

json sub_json(const SubIndex& s) { return {{"rows", one_based(s.rows)}, {"cols", one_based(s.cols)}}; }

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.to_string();
  return out;
}

Coefficients parse_coefficients(const std::vector<std::string>& items) {
  Coefficients c;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("coefficient '" + item + "' is not of the form index=value");
    }
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(item.substr(0, eq), &used);
      if (used != eq || index == 0) throw std::invalid_argument("index");
    } catch (const std::logic_error&) {
      throw UsageError("coefficient index in '" + item + "' must be a positive integer");
    }
    c[index - 1] = Rational::parse(item.substr(eq + 1));
  }
  return c;
}

Output matrix_output(const TropMatrix& a) { return {matrix_to_json(a), serialize_matrix(a)}; }

Output cmd_det(const Globals& g, const std::string& source) {
  const TropMatrix a = load_matrix(source);
  const DetResult d = enumerate_minimizing(a, g.cap);
  std::ostringstream os;
  os << "tropdet " << d.value << "\n";
  os << "witnesses " << d.witnesses.size() << (d.truncated ? " (truncated at cap)" : "") << "\n";
  json witnesses = json::array();
  for (const auto& w : d.witnesses) {
    os << "  " << w.to_string() << "\n";
    witnesses.push_back(one_based(w.cols));
  }
  json out = {{"value", rational_to_json(d.value)},
              {"witnesses", std::move(witnesses)},
              {"truncated", d.truncated},
              {"duals", {{"row", rationals_json(d.duals.row)}, {"col", rationals_json(d.duals.col)}}}};
  if (a.symmetric()) {
    os << "symmetric monomials " << d.sym_witnesses.size() << "\n";
    json sym = json::array();
    for (const auto& m : d.sym_witnesses) {
      os << "  " << m.to_string() << "\n";
      sym.push_back(m.to_string());
    }
    out["sym_witnesses"] = std::move(sym);
  }
  os << "row duals " << rationals_text(d.duals.row) << "\n";
  os << "col duals " << rationals_text(d.duals.col) << "\n";
  return {std::move(out), os.str()};
}

Output cmd_rank(const Globals& g, const std::string& source, bool symmetric) {
  const TropMatrix a = with_mode(load_matrix(source), symmetric);
  const RankResult r = rank_in_mode(a, mode_of(symmetric), g.par());
  std::ostringstream os;
  os << "rank " << r.rank << "\nmode " << to_string(r.mode) << "\nwitness "
     << r.witness.to_string() << "\n";
  return {{{"rank", r.rank}, {"mode", to_string(r.mode)}, {"witness", sub_json(r.witness)}},
          os.str()};
}

Output cmd_celldim(const Globals& g, const std::string& source, std::size_t r, bool symmetric,
                   bool emit) {
  const TropMatrix a = with_mode(load_matrix(source), symmetric);
  const EquationSystem sys = minor_equations(a, r, mode_of(symmetric), g.cap, g.par());
  const CellResult c = cell_dimension(sys);
  std::ostringstream os;
  os << "dimension " << c.dimension << "\nambient " << c.ambient_dim << "\nsystem rank "
     << c.system_rank << "\nequations " << c.equation_count << "\n";
  json out = {{"dimension", c.dimension},
              {"ambient_dim", c.ambient_dim},
              {"system_rank", c.system_rank},
              {"equation_count", c.equation_count},
              {"mode", to_string(sys.mode)}};
  if (emit) {
    os << to_text(sys);
    out["system"] = to_json(sys);
  }
  return {std::move(out), os.str()};
}

Output cmd_member(const Globals& g, const std::string& source, std::size_t r, bool symmetric,
                  bool via_minors) {
  const TropMatrix a = with_mode(load_matrix(source), symmetric);
  const RankMode mode = mode_of(symmetric);
  std::optional<SubIndex> failing;
  if (via_minors) {
    failing = membership_via_minors(a, r, mode).failing;
  } else {
    failing = first_nonsingular(a, r, mode, g.par());
  }
  std::ostringstream os;
  os << "member " << (failing ? "false" : "true") << "\n";
  if (failing) os << "failing minor " << failing->to_string() << "\n";
  return {{{"member", !failing},
           {"method", via_minors ? "minors" : "assignment"},
           {"failing", failing ? sub_json(*failing) : json(nullptr)}},
          os.str()};
}

Output cmd_gap(std::optional<std::int64_t> m, std::int64_t n, std::int64_t r, bool symmetric) {
  GapReport rep;
  if (symmetric) {
    if (m && *m != n) throw UsageError("symmetric gap takes --n and --r only");
    rep = prevariety_lower_bound_symmetric(n, r);
  } else {
    if (!m) throw UsageError("gap needs --m unless --symmetric is given");
    rep = prevariety_lower_bound_standard(*m, n, r);
  }
  return {to_json(rep), to_text(rep)};
}

Output cmd_separating(const std::string& source, const std::vector<std::size_t>& sigma) {
  const TropMatrix a = load_matrix(source);
  Bijection b;
  if (sigma.empty()) {
    b = tropdet(a).witness;
  } else {
    b = Bijection::identity(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] == 0) throw UsageError("--sigma images are 1-based");
      b.cols[i] = sigma[i] - 1;
    }
  }
  const Coefficients c = separating_coefficients(a, b);
  std::ostringstream os;
  os << "sigma " << b.to_string() << "\n";
  json coeffs = json::object();
  for (const auto& [k, v] : c) {
    os << "c_" << k + 1 << " = " << v << "\n";
    coeffs[std::to_string(k + 1)] = rational_to_json(v);
  }
  return {{{"sigma", one_based(b.cols)}, {"coefficients", std::move(coeffs)}}, os.str()};
}

Output cmd_verify(const Globals& g, const std::vector<std::string>& ids) {
  std::vector<const Claim*> selected;
  for (const auto& id : ids) {
    const auto it = std::find_if(claims().begin(), claims().end(),
                                 [&](const Claim& c) { return c.id == id; });
    if (it == claims().end()) throw UsageError("unknown claim '" + id + "'");
    selected.push_back(&*it);
  }
  if (ids.empty()) {
    for (const auto& c : claims()) selected.push_back(&c);
  }
  std::string text;
  json reports = json::array();
  std::size_t passed = 0;
  for (const Claim* c : selected) {
    const ClaimReport rep = run_claim(*c, g.par());
    passed += rep.pass ? 1 : 0;
    text += to_text(rep, g.timings);
    reports.push_back(to_json(rep, g.timings));
  }
  text += std::to_string(passed) + "/" + std::to_string(selected.size()) + " claims passed\n";
  const bool all = passed == selected.size();
  return {{{"claims", std::move(reports)},
           {"passed", passed},
           {"total", selected.size()},
           {"all_pass", all}},
          std::move(text),
          all ? kExitOk : kExitFailed};
}

void stream_minors(const Globals& g, std::size_t m, std::size_t n, std::size_t r, bool symmetric,
                   std::ostream& out) {
  MinorStream stream = generate_minors(m, n, r, mode_of(symmetric));
  while (auto minor = stream.next()) {
    if (g.as_json()) {
      json line = sub_json(minor->where);
      line["poly"] = minor->poly.to_string();
      out << line.dump() << "\n";
    } else {
      out << minor->poly.to_string() << "\n";
    }
  }
}

std::string ms_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical matrix computations: determinants, ranks, cells, minors."};
  app.name("tropical");
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (0 = one per core)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", g.cap, "Cap on enumerated minimizing bijections")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timings", g.timings, "Report elapsed times");

  std::string source;
  bool symmetric = false;
  bool emit = false;
  bool via_minors = false;
  std::size_t r = 0;
  std::int64_t gm = 0, gn = 0, gr = 0;
  std::size_t mm = 0, mn = 0;
  std::string name;
  std::vector<std::string> coeffs;
  std::vector<std::size_t> sigma;
  std::optional<std::string> big, small;
  std::vector<std::string> claim_ids;
  const std::string matrix_help = "Matrix file (text or JSON) or builtin:<name>";

  auto* det = app.add_subcommand("det", "Tropical determinant and every minimizing bijection");
  det->add_option("matrix", source, matrix_help)->required();

  auto* rank = app.add_subcommand("rank", "Tropical rank with a nonsingular witness");
  rank->add_option("matrix", source, matrix_help)->required();
  rank->add_flag("--symmetric", symmetric, "Symmetric tropical rank");

  auto* celldim = app.add_subcommand("celldim", "Dimension of the linear cell at the matrix");
  celldim->add_option("matrix", source, matrix_help)->required();
  celldim->add_option("--r", r, "Minor size")->required()->check(CLI::PositiveNumber);
  celldim->add_flag("--symmetric", symmetric, "Symmetric minors and variables");
  celldim->add_flag("--emit-equations", emit, "Also print the equation system");

  auto* construct = app.add_subcommand("construct", "Build a matrix from another one");
  construct->require_subcommand(1);
  auto add_border = [&](const char* cmd, const char* help) {
    auto* sub = construct->add_subcommand(cmd, help);
    sub->add_option("matrix", source, matrix_help)->required();
    sub->add_option("--P", big, "Border value (default max + 1)");
    sub->add_option("--M", small, "Corner value (default min - 1)");
    return sub;
  };
  auto add_append = [&](const char* cmd, const char* help) {
    auto* sub = construct->add_subcommand(cmd, help);
    sub->add_option("matrix", source, matrix_help)->required();
    sub->add_option("--coeff", coeffs, "index=value, 1-based; repeatable")->required();
    return sub;
  };
  auto* c_border = add_border("border", "Add a row and column of P with M in the corner");
  auto* c_sym_border = add_border("sym-border", "border of a symmetric matrix");
  auto* c_col = add_append("append-col", "Append a tropical combination of columns");
  auto* c_row = add_append("append-row", "Append a tropical combination of rows");
  auto* c_sym = add_append("sym-append", "Append a combination column and the matching row");
  auto* c_sep = construct->add_subcommand(
      "separating-coeffs", "Column coefficients making the optimal bijection strictly minimal");
  c_sep->add_option("matrix", source, matrix_help)->required();
  c_sep->add_option("--sigma", sigma, "Images of rows 1..n (default: the optimal bijection)")
      ->delimiter(',');

  auto* builtin_cmd = app.add_subcommand("builtin", "Print a built-in matrix");
  builtin_cmd->add_option("name", name, "Built-in name")->required();

  auto* minors = app.add_subcommand("minors", "Stream the r x r minors of a matrix of variables");
  minors->add_option("--m", mm, "Rows")->required();
  minors->add_option("--n", mn, "Columns")->required();
  minors->add_option("--r", r, "Minor size")->required();
  minors->add_flag("--symmetric", symmetric, "Identify X_{i,j} with X_{j,i}");

  auto* member = app.add_subcommand("member", "Whether every r x r minor is singular");
  member->add_option("matrix", source, matrix_help)->required();
  member->add_option("--r", r, "Minor size")->required();
  member->add_flag("--symmetric", symmetric, "Symmetric minors");
  member->add_flag("--via-minors", via_minors, "Evaluate minor polynomials instead");

  auto* gap = app.add_subcommand("gap", "Prevariety dimension lower bound against the variety");
  auto* gap_m = gap->add_option("--m", gm, "Rows");
  gap->add_option("--n", gn, "Columns")->required();
  gap->add_option("--r", gr, "Rank bound")->required();
  gap->add_flag("--symmetric", symmetric, "Symmetric matrices");

  auto* verify = app.add_subcommand("verify-paper", "Check every recorded claim");
  verify->add_option("--claims", claim_ids, "Comma-separated claim ids")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*minors) {
      stream_minors(g, mm, mn, r, symmetric, out);
      if (g.timings) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start).count();
        err << "elapsed " << ms_text(ms) << " ms\n";
      }
      return kExitOk;
    }
    Output o;
    if (*det) {
      o = cmd_det(g, source);
    } else if (*rank) {
      o = cmd_rank(g, source, symmetric);
    } else if (*celldim) {
      o = cmd_celldim(g, source, r, symmetric, emit);
    } else if (*c_border || *c_sym_border) {
      const auto to_rational = [](const std::optional<std::string>& s) {
        return s ? std::optional<Rational>(Rational::parse(*s)) : std::nullopt;
      };
      const TropMatrix a = load_matrix(source);
      o = matrix_output(*c_border ? border(a, to_rational(big), to_rational(small))
                                  : sym_border(with_mode(a, true), to_rational(big),
                                               to_rational(small)));
    } else if (*c_col) {
      o = matrix_output(append_combination_col(load_matrix(source), parse_coefficients(coeffs)));
    } else if (*c_row) {
      o = matrix_output(append_combination_row(load_matrix(source), parse_coefficients(coeffs)));
    } else if (*c_sym) {
      o = matrix_output(
          sym_append(with_mode(load_matrix(source), true), parse_coefficients(coeffs)));
    } else if (*c_sep) {
      o = cmd_separating(source, sigma);
    } else if (*builtin_cmd) {
      o = matrix_output(builtin(name));
    } else if (*member) {
      o = cmd_member(g, source, r, symmetric, via_minors);
    } else if (*gap) {
      o = cmd_gap(gap_m->count() ? std::optional<std::int64_t>(gm) : std::nullopt, gn, gr,
                  symmetric);
    } else if (*verify) {
      o = cmd_verify(g, claim_ids);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (g.as_json()) {
      if (g.timings && !*verify) o.data["elapsed_ms"] = ms;
      out << o.data.dump(2) << "\n";
    } else {
      out << o.text;
      if (g.timings && !*verify) out << "elapsed " << ms_text(ms) << " ms\n";
    }
    return o.code;
  } catch (const NonsingularMinor& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundsError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace tropical::cli
