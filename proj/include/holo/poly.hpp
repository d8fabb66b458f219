#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holo/rational.hpp"

namespace holo {

/// Degree of a univariate polynomial. The zero polynomial has the bottom
/// degree, which compares below every integer and absorbs addition.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree bottom() { return Degree(); }

  constexpr bool is_bottom() const { return !value_.has_value(); }
  int value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_bottom() || b.is_bottom()) return b.is_bottom() <=> a.is_bottom();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, int k) {
    return a.is_bottom() ? a : Degree(*a.value_ + k);
  }

 private:
  std::optional<int> value_;
};

std::string to_string(const Degree& d);

/// Dense univariate polynomial over the rationals; coeffs()[i] is the
/// coefficient of x^i. The coefficient vector never has a trailing zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c);
  /// c * x^k
  static UniPoly monomial(unsigned k, const Rational& c = 1);
  /// x + a
  static UniPoly linear(const Rational& a);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Coefficient of x^i, zero outside the stored range (including i < 0).
  Rational coeff(int i) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  /// p(x + a)
  UniPoly shifted(const Rational& a) const;
  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  /// Monic associate; zero stays zero.
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  UniPoly& operator/=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator/(UniPoly a, const Rational& c) { return a /= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned e);

struct DivResult {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws DomainError when the divisor is zero.
DivResult divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; throws DomainError when both arguments are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly squarefree_part(const UniPoly& p);

/// p = scale * primitive with primitive having coprime integer coefficients
/// and positive leading coefficient. Zero maps to (0, 0).
struct PrimitiveForm {
  Rational scale;
  UniPoly primitive;
};
PrimitiveForm primitive_form(const UniPoly& p);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const UniPoly& p);

/// Integer roots of a nonzero polynomial (multiplicity ignored), found by
/// testing divisors of the trailing nonzero coefficient of the primitive
/// squarefree part.
std::set<Integer> integer_roots(const UniPoly& p);

/// Res_x(a(x), b(x + i)) as a polynomial in i, by fraction-free elimination
/// of the Sylvester matrix over Q[i].
UniPoly shifted_resultant(const UniPoly& a, const UniPoly& b);

/// All i >= 0 with gcd(a(x), b(x + i)) nonconstant.
std::set<Integer> dispersion(const UniPoly& a, const UniPoly& b);

enum class PolyStyle {
  Explicit,  ///< "9*n^4-8*n^3-n^2", accepted by parse_poly
  Compact,   ///< "9n^4-8n^3-n^2", for human-facing renderings
};

std::string to_string(const UniPoly& p, const std::string& var = "n",
                      PolyStyle style = PolyStyle::Explicit);

}  // namespace holo
