#pragma once

#include <random>
#include <string>

#include "holo/operator.hpp"
#include "holo/parse.hpp"
#include "holo/sequences.hpp"

namespace holo::test {

inline UniPoly P(const std::string& text, const std::string& var = "n") { return parse_poly(text, var); }

inline UniPoly random_poly(std::mt19937_64& rng, int degree, int bound = 9) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<Rational> cs(static_cast<std::size_t>(degree + 1));
  for (auto& c : cs) c = coef(rng);
  if (cs.back() == 0) cs.back() = 1;
  return UniPoly(std::move(cs));
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline const Catalog& catalog() {
  static const Catalog c = Catalog::load_default();
  return c;
}

inline std::string data(const std::string& rel) { return default_data_dir() + "/" + rel; }

/// The signed Franel operator in k.
inline RecOperator franel_op() { return RecOperator({P("-8*(k+1)^2", "k"), P("7*k^2+21*k+16", "k"), P("(k+2)^2", "k")}, "k"); }
inline RecOperator delannoy_op() { return RecOperator({P("k+1", "k"), P("-6*k-9", "k"), P("k+2", "k")}, "k"); }
/// Domb(n)/(-32)^n
inline RecOperator domb_m32_op() {
  return RecOperator({P("(n+1)^3"), P("(2*n+3)*(5*n^2+15*n+12)"), P("16*(n+2)^3")});
}

}  // namespace holo::test
