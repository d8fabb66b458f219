#include "holo/rational.hpp"

#include <cctype>

#include "holo/error.hpp"

namespace holo {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "'", offset + j);
  }
  Integer z(std::string(text.substr(i)), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational", 0);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("sign not allowed in denominator", slash + 1);
  Integer den = parse_integer(den_text, slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Integer ipow(const Integer& a, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& a, unsigned long e) {
  Rational r(ipow(a.get_num(), e), ipow(a.get_den(), e));
  r.canonicalize();
  return r;
}

Integer mod_floor(const Integer& z, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_rational(const Rational& q, const Integer& m) {
  if (m <= 0) throw DomainError("modulus must be positive");
  if (q.get_den() == 1) return mod_floor(q.get_num(), m);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("denominator " + q.get_den().get_str() + " not invertible modulo " + m.get_str());
  return mod_floor(Integer(q.get_num() * inv), m);
}

}  // namespace holo
