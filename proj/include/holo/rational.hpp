#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace holo {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" or "p/q", sign on the numerator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws ParseError on anything else or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Bit length of numerator plus bit length of denominator.
std::size_t bit_size(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// a^e for e >= 0.
Integer ipow(const Integer& a, unsigned long e);
Rational rpow(const Rational& a, unsigned long e);

/// Least nonnegative residue of z modulo m (m > 0).
Integer mod_floor(const Integer& z, const Integer& m);

/// q = a/b reduced modulo m. Throws DomainError when gcd(b, m) != 1.
Integer mod_rational(const Rational& q, const Integer& m);

}  // namespace holo
