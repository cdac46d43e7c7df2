#include "tropical/tropoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  TropPoly parse() {
    std::vector<Monomial> terms;
    terms.push_back(term());
    skip_space();
    while (pos_ < s_.size()) {
      if (s_.substr(pos_, 3) != "(+)") fail("expected '(+)'");
      pos_ += 3;
      terms.push_back(term());
      skip_space();
    }
    return TropPoly(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_number() const {
    std::size_t p = pos_;
    if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) ++p;
    return p < s_.size() && (is_digit(s_[p]) || s_[p] == '.');
  }

  Monomial term() {
    Monomial mono;
    mono.coeff = Rational(0);
    bool any = false;
    while (true) {
      skip_space();
      if (any && pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_space();
        if (!at_number() && !(pos_ < s_.size() && is_alpha(s_[pos_]))) fail("expected a factor");
      }
      if (at_number()) {
        mono.coeff += number();
      } else if (pos_ < s_.size() && is_alpha(s_[pos_])) {
        auto [name, power] = factor();
        mono.exponents[name] += power;
      } else {
        break;
      }
      any = true;
    }
    if (!any) fail("expected a monomial");
    std::erase_if(mono.exponents, [](const auto& kv) { return kv.second == 0; });
    return mono;
  }

  Rational number() {
    const std::size_t start = pos_;
    if (s_[pos_] == '-' || s_[pos_] == '+') ++pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == '/' || s_[pos_] == '.')) {
      ++pos_;
      while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<std::string, std::int64_t> factor() {
    std::string name(1, s_[pos_++]);
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      name += "_{";
      if (pos_ < s_.size() && s_[pos_] == '{') {
        ++pos_;
        skip_space();
        name += digits();
        skip_space();
        while (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          skip_space();
          name += "," + digits();
          skip_space();
        }
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
        ++pos_;
      } else {
        name += digits();
      }
      name += "}";
    }
    std::int64_t power = 1;
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_space();
      const bool braced = pos_ < s_.size() && s_[pos_] == '{';
      if (braced) ++pos_;
      const std::size_t at = pos_;
      const std::string d = digits();
      if (d.size() > 15) {
        pos_ = at;
        fail("exponent too large");
      }
      power = std::stoll(d);
      if (braced) {
        if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
        ++pos_;
      }
    }
    return {std::move(name), power};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  if (m.exponents.empty() || m.coeff.sign() != 0) out = m.coeff.to_string();
  for (const auto& [name, e] : m.exponents) {
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

bool VariableLess::operator()(const std::string& a, const std::string& b) const {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      const int c = a.compare(is, ie - is, b, js, je - js);
      if (c != 0) return c < 0;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

TropPoly::TropPoly(std::vector<Monomial> monomials) {
  if (monomials.empty()) throw PreconditionError("a tropical polynomial needs a monomial");
  for (auto& m : monomials) {
    for (const auto& [name, e] : m.exponents) {
      if (e < 0) throw PreconditionError("negative exponent on " + name);
    }
    std::erase_if(m.exponents, [](const auto& kv) { return kv.second == 0; });
    auto hit = std::find_if(monomials_.begin(), monomials_.end(),
                            [&](const Monomial& x) { return x.exponents == m.exponents; });
    if (hit == monomials_.end()) {
      monomials_.push_back(std::move(m));
    } else if (m.coeff < hit->coeff) {
      hit->coeff = m.coeff;
    }
  }
}

std::vector<std::string> TropPoly::variables() const {
  std::vector<std::string> out;
  for (const auto& m : monomials_) {
    for (const auto& kv : m.exponents) out.push_back(kv.first);
  }
  std::sort(out.begin(), out.end(), VariableLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string TropPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (k) out += " (+) ";
    out += monomial_text(monomials_[k]);
  }
  return out;
}

TropPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

EvalResult eval(const TropPoly& f, const Point& p) {
  EvalResult out;
  for (std::size_t k = 0; k < f.monomials().size(); ++k) {
    const Monomial& m = f.monomials()[k];
    Rational v = m.coeff;
    for (const auto& [name, e] : m.exponents) {
      const auto it = p.find(name);
      if (it == p.end()) throw PreconditionError("no value bound to variable " + name);
      v += Rational(e) * it->second;
    }
    if (out.argmin.empty() || v < out.value) {
      out.value = std::move(v);
      out.argmin = {k};
    } else if (v == out.value) {
      out.argmin.push_back(k);
    }
  }
  return out;
}

bool in_hypersurface(const TropPoly& f, const Point& p) { return eval(f, p).argmin.size() >= 2; }

std::string matrix_variable(std::size_t i, std::size_t j) {
  return "X_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

MinorStream::MinorStream(std::size_t m, std::size_t n, std::size_t r, RankMode mode)
    : mode_(mode), r_(r), space_(m, n, r) {
  if (r == 0 || r > std::min(m, n)) throw PreconditionError("minor size must lie in 1..min(m, n)");
  if (mode == RankMode::kSymmetric && m != n) {
    throw PreconditionError("symmetric minors need a square matrix");
  }
}

std::optional<Minor> MinorStream::next() {
  if (pos_ >= space_.count()) return std::nullopt;
  const auto& rows = space_.rows_of(pos_);
  const auto& cols = space_.cols_of(pos_);
  ++pos_;
  std::vector<std::size_t> perm(r_);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Monomial> monomials;
  do {
    Monomial mono;
    mono.coeff = Rational(0);
    for (std::size_t p = 0; p < r_; ++p) {
      std::size_t i = rows[p], j = cols[perm[p]];
      if (mode_ == RankMode::kSymmetric && i > j) std::swap(i, j);
      ++mono.exponents[matrix_variable(i, j)];
    }
    monomials.push_back(std::move(mono));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Minor{SubIndex{rows, cols}, TropPoly(std::move(monomials))};
}

MinorStream generate_minors(std::size_t m, std::size_t n, std::size_t r, RankMode mode) {
  return MinorStream(m, n, r, mode);
}

Point matrix_point(const TropMatrix& a, RankMode mode) {
  Point p;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = mode == RankMode::kSymmetric ? i : 0; j < a.cols(); ++j) {
      p.emplace(matrix_variable(i, j), a(i, j));
    }
  }
  return p;
}

MembershipResult membership_via_minors(const TropMatrix& a, std::size_t r, RankMode mode) {
  if (mode == RankMode::kSymmetric && !a.symmetric()) {
    throw PreconditionError("symmetric membership needs a matrix with the symmetric marker");
  }
  const Point point = matrix_point(a, mode);
  MinorStream stream(a.rows(), a.cols(), r, mode);
  while (auto minor = stream.next()) {
    if (!in_hypersurface(minor->poly, point)) return {false, std::move(minor->where)};
  }
  return {true, std::nullopt};
}

}  // namespace tropical
