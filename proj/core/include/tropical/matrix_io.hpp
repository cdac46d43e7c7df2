#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "tropical/matrix.hpp"

namespace tropical {

// Text format:
//
//   m n [symmetric]
//   a11 a12 ... a1n
//   ...
//   am1 ... amn
//
// Entries are `p`, `p/q` or exact decimals. Blank lines and `#` comments are
// ignored. ParseError::position() is the 1-based line number.
TropMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const TropMatrix& a);

// {"rows":m,"cols":n,"symmetric":bool,"entries":[[...],...]}. Entries may be
// JSON integers or strings in the text-entry syntax; serialization writes
// int64-representable integers as numbers and everything else as strings.
TropMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const TropMatrix& a);

// Either format, chosen by the first non-space character.
TropMatrix parse_matrix_any(std::string_view text);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace tropical
