#include "holo/congruence.hpp"

#include <sstream>

#include "holo/error.hpp"

namespace holo {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw DomainError("legendre symbol needs an odd prime, got " + p.get_str());
  const Integer base = mod_floor(a, p);
  Integer e = (p - 1) / 2;
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

Integer RhsExpr::mod(long x, const Integer& m) const {
  Integer v = mod_rational(coeff, m);
  if (legendre3) v *= legendre(Integer(x), Integer(3));
  if (p_power > 0) {
    Integer t;
    const Integer base(x);
    mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(), p_power, m.get_mpz_t());
    v *= t;
  }
  if (two_pow_minus_one_power > 0) {
    if (x < 0) throw DomainError("2^x - 1 needs x >= 0");
    Integer t = ipow(Integer(2), static_cast<unsigned long>(x)) - 1;
    Integer u;
    mpz_powm_ui(u.get_mpz_t(), t.get_mpz_t(), two_pow_minus_one_power, m.get_mpz_t());
    v *= u;
  }
  return mod_floor(v, m);
}

std::string RhsExpr::to_string() const {
  std::ostringstream os;
  os << holo::to_string(coeff);
  if (legendre3) os << "*(p/3)";
  if (p_power == 1) os << "*p";
  if (p_power > 1) os << "*p^" << p_power;
  if (two_pow_minus_one_power == 1) os << "*(2^p-1)";
  if (two_pow_minus_one_power > 1) os << "*(2^p-1)^" << two_pow_minus_one_power;
  return os.str();
}

Integer CongruenceClaim::modulus_at(long x) const {
  if (modulus_kind == ModulusKind::PrimePower) {
    if (!is_prime(x)) throw DomainError("prime-power modulus at non-prime " + std::to_string(x));
    return ipow(Integer(x), prime_exponent);
  }
  const Rational v = Rational(modulus_const) * modulus_poly(Rational(x));
  if (!is_integer(v)) throw DomainError("modulus is not an integer at n=" + std::to_string(x));
  return abs(v.get_num());
}

std::string CongruenceClaim::to_string() const {
  std::ostringstream os;
  if (scale != 1) os << holo::to_string(scale) << "*";
  os << "sum_{k=" << lower << "}^{" << var;
  if (upper_offset - 1 != 0) os << (upper_offset - 1 > 0 ? "+" : "-") << std::abs(upper_offset - 1);
  os << "} (" << holo::to_string(weight, "k") << ")*F(k) == " << rhs.to_string() << " (mod ";
  if (modulus_kind == ModulusKind::PrimePower) {
    os << "p^" << prime_exponent;
  } else {
    if (modulus_const != 1) os << modulus_const.get_str() << "*";
    os << "(" << holo::to_string(modulus_poly, var) << ")";
  }
  os << ")";
  return os.str();
}

ClaimReport check_claim(const CongruenceClaim& claim, std::span<const Rational> terms, long lo, long hi,
                        bool primes_only, bool exhaustive) {
  if (lo > hi) throw DomainError("empty range");
  const long last_needed = hi - 1 + claim.upper_offset;
  if (last_needed >= static_cast<long>(terms.size()))
    throw DomainError("claim needs F(" + std::to_string(last_needed) + "), only " + std::to_string(terms.size()) +
                      " terms supplied");
  for (long n = lo; n <= hi; ++n)
    if ((!primes_only || is_prime(n)) && claim.modulus_at(n) == 0)
      throw DomainError("modulus vanishes at n=" + std::to_string(n));
  ClaimReport report;
  // Running sum over k = lower .. upper(n).
  Rational running = 0;
  long summed_to = claim.lower - 1;
  for (long n = lo; n <= hi; ++n) {
    if (primes_only && !is_prime(n)) continue;
    const long upper = n - 1 + claim.upper_offset;
    while (summed_to < upper) {
      ++summed_to;
      if (summed_to >= 0)
        running += claim.weight(Rational(summed_to)) * terms[static_cast<std::size_t>(summed_to)];
    }
    const Integer m = claim.modulus_at(n);
    PointRecord rec;
    rec.n = n;
    rec.lhs_mod = mod_rational(claim.scale * running, m);
    rec.rhs_mod = claim.rhs.mod(n, m);
    rec.pass = rec.lhs_mod == rec.rhs_mod;
    report.points.push_back(rec);
    if (!rec.pass) {
      if (!report.first_failure) report.first_failure = n;
      report.pass = false;
      if (!exhaustive) break;
    }
  }
  return report;
}

FamilyClaim derive_family(const RecOperator& L, std::span<const Rational> terms, const UniPoly& p) {
  if (L.order() != 2) throw DomainError("derive_family needs an order-2 operator");
  if (terms.size() < 3) throw DomainError("derive_family needs at least F(0..2)");
  FamilyClaim fam;
  fam.weight = adjoint_apply(L, p);
  fam.symbolic = normalize_window(telescoped_sum(L, terms.first(2)), L);
  if (!fam.symbolic.window_normalized) throw MathError("window normalization failed: " + fam.symbolic.note);
  fam.concrete = instantiate(fam.symbolic, p);
  fam.poly_factor = boundary_common_factor(fam.symbolic);

  // Integer factor common to every h_j(n) F(n + offset), h_j = c_j / g.
  Integer common = 0;
  const long from = std::max<long>(fam.symbolic.valid_from, 1);
  const long upto = static_cast<long>(terms.size()) - 1;
  for (long n = from; n <= upto; ++n) {
    for (const auto& t : fam.symbolic.boundary) {
      const long idx = n + t.offset;
      if (idx < 0 || idx > upto) continue;
      for (const auto& [j, c] : t.coeff) {
        const Rational v = divmod(c, fam.poly_factor).quotient(Rational(n)) * terms[static_cast<std::size_t>(idx)];
        if (!is_integer(v)) {
          common = 1;
          break;
        }
        mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.get_num_mpz_t());
      }
    }
    fam.checked_up_to = n;
    if (common == 1) break;
  }
  fam.integer_factor = common == 0 ? Integer(1) : common;

  CongruenceClaim& claim = fam.claim;
  claim.name = "telescoped family";
  claim.weight = fam.weight;
  claim.modulus_kind = ModulusKind::Polynomial;
  claim.modulus_const = fam.integer_factor;
  claim.modulus_poly = fam.poly_factor;
  claim.rhs.coeff = fam.concrete.constant;
  return fam;
}

std::vector<FactRecord> known_fact_checks(std::span<const Rational> franel, long lo, long hi) {
  if (hi >= static_cast<long>(franel.size())) throw DomainError("known_fact_checks needs f_0..f_hi");
  std::vector<FactRecord> out;
  for (long p = lo; p <= hi; ++p) {
    if (!is_prime(p)) continue;
    const Integer m = ipow(Integer(p), 3);
    {
      const Integer r = mod_rational(franel[static_cast<std::size_t>(p)], m);
      out.push_back({"f_p == 2 (mod p^3)", p, r == 2, "f_p mod p^3 = " + r.get_str()});
    }
    {
      const Integer t = ipow(Integer(2), static_cast<unsigned long>(p - 1)) - 1;
      const Integer expect = mod_floor(Integer(1 + 3 * t + 3 * t * t), m);
      const Integer r = mod_rational(franel[static_cast<std::size_t>(p - 1)], m);
      out.push_back({"f_{p-1} == 1+3(2^{p-1}-1)+3(2^{p-1}-1)^2 (mod p^3)", p, r == expect,
                     "lhs " + r.get_str() + ", rhs " + expect.get_str()});
    }
  }
  return out;
}

}  // namespace holo
