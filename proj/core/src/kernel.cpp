#include "kernel.hpp"

#include <limits>

namespace tropical::detail {

std::optional<Grid<std::int64_t>> scaled_integer_grid(const TropMatrix& a) {
  mpz_class lcm = 1;
  for (const auto& e : a.entries()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value().get_den_mpz_t());
  }
  const std::size_t dim = std::max(a.rows(), a.cols()) + 1;
  // Potentials and partial sums stay within a few multiples of dim * max|entry|.
  const mpz_class limit =
      mpz_class(std::numeric_limits<std::int64_t>::max() / 16) / mpz_class(dim * dim);
  Grid<std::int64_t> g;
  g.rows = a.rows();
  g.cols = a.cols();
  g.v.reserve(a.entries().size());
  for (const auto& e : a.entries()) {
    mpz_class scaled = e.value().get_num() * (lcm / e.value().get_den());
    if (abs(scaled) > limit) return std::nullopt;
    g.v.push_back(scaled.get_si());
  }
  g.scale = Rational(mpq_class(lcm));
  return g;
}

AnyGrid make_grid(const TropMatrix& a) {
  if (auto g = scaled_integer_grid(a)) return std::move(*g);
  Grid<Rational> g;
  g.rows = a.rows();
  g.cols = a.cols();
  g.v = a.entries();
  return g;
}

}  // namespace tropical::detail
