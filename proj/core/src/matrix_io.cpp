#include "tropical/matrix_io.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9) throw ParseError("bad dimension '" + tok + "'", line);
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad dimension '" + tok + "'", line);
    }
  }
  return std::stoul(tok);
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t m = 0, n = 0;
  bool symmetric = false;
  std::vector<Rational> entries;
  std::size_t rows_read = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto toks = tokens_of(raw);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() < 2 || toks.size() > 3) {
        throw ParseError("header must be 'm n [symmetric]'", line_no);
      }
      m = parse_count(toks[0], line_no);
      n = parse_count(toks[1], line_no);
      if (m == 0 || n == 0) throw ParseError("dimensions must be positive", line_no);
      if (toks.size() == 3) {
        if (toks[2] != "symmetric") throw ParseError("unknown flag '" + toks[2] + "'", line_no);
        symmetric = true;
      }
      entries.reserve(m * n);
      have_header = true;
      continue;
    }
    if (rows_read == m) throw ParseError("more than " + std::to_string(m) + " rows", line_no);
    if (toks.size() != n) {
      throw ParseError("ragged row: expected " + std::to_string(n) + " entries, got " +
                           std::to_string(toks.size()),
                       line_no);
    }
    for (const auto& tok : toks) {
      try {
        entries.push_back(Rational::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    ++rows_read;
  }
  if (!have_header) throw ParseError("empty matrix text", line_no);
  if (rows_read != m) {
    throw ParseError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows_read),
                     line_no);
  }
  TropMatrix a(m, n, std::move(entries));
  if (symmetric && !a.is_symmetric_data()) {
    throw ParseError("symmetric flag on asymmetric data", line_no);
  }
  return a.with_symmetric_marker(symmetric);
}

std::string serialize_matrix(const TropMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols());
  if (a.symmetric()) out += " symmetric";
  out += '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

nlohmann::json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.value().get_num().fits_slong_p()) {
    return static_cast<std::int64_t>(r.value().get_num().get_si());
  }
  return r.to_string();
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return Rational::parse(std::to_string(u));
      }
      return Rational(static_cast<std::int64_t>(u));
    }
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("matrix entries must be integers or rational strings", 0);
}

TropMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object", 0);
  for (const char* key : {"rows", "cols", "entries"}) {
    if (!j.contains(key)) throw ParseError(std::string("matrix JSON lacks '") + key + "'", 0);
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw ParseError("rows/cols must be non-negative integers", 0);
  }
  const auto m = j["rows"].get<std::size_t>();
  const auto n = j["cols"].get<std::size_t>();
  const bool symmetric = j.value("symmetric", false);
  const auto& rows = j["entries"];
  if (!rows.is_array() || rows.size() != m) throw ParseError("entries must have 'rows' rows", 0);
  std::vector<Rational> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("ragged row " + std::to_string(i + 1), i + 1);
    }
    for (const auto& e : rows[i]) entries.push_back(rational_from_json(e));
  }
  TropMatrix a(m, n, std::move(entries));
  if (symmetric && !a.is_symmetric_data()) throw ParseError("symmetric flag on asymmetric data", 0);
  return a.with_symmetric_marker(symmetric);
}

nlohmann::json matrix_to_json(const TropMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(rational_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"symmetric", a.symmetric()},
          {"entries", std::move(rows)}};
}

TropMatrix parse_matrix_any(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
      }
      return matrix_from_json(j);
    }
    break;
  }
  return parse_matrix(text);
}

}  // namespace tropical
