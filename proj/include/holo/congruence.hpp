#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holo/reduction.hpp"
#include "holo/sequences.hpp"

namespace holo {

/// Legendre symbol (a/p) by Euler's criterion. Throws DomainError unless p
/// is an odd prime.
int legendre(const Integer& a, const Integer& p);

/// Right-hand sides used by the claims:
///   coeff * (x/3)^[legendre3] * x^p_power * (2^x - 1)^two_pow_minus_one_power
/// where x is the tested n or prime p.
struct RhsExpr {
  Rational coeff = 0;
  bool legendre3 = false;
  unsigned p_power = 0;
  unsigned two_pow_minus_one_power = 0;

  /// Reduced into 0..m-1. Throws DomainError when coeff's denominator is
  /// not invertible mod m.
  Integer mod(long x, const Integer& m) const;
  std::string to_string() const;
};

enum class ModulusKind {
  Polynomial,  ///< modulus_const * modulus_poly(n)
  PrimePower,  ///< p^prime_exponent
};

/// scale * sum_{k=lower}^{n-1+upper_offset} weight(k) F(k) == rhs  (mod modulus)
struct CongruenceClaim {
  std::string name;
  std::string sequence;  ///< catalog name of the unweighted sequence
  bool alternating = false;
  Rational geom = 1;
  UniPoly weight;
  Rational scale = 1;
  long lower = 0;
  long upper_offset = 0;
  ModulusKind modulus_kind = ModulusKind::Polynomial;
  Integer modulus_const = 1;
  UniPoly modulus_poly = UniPoly::constant(1);
  unsigned prime_exponent = 0;
  RhsExpr rhs;
  std::string var = "n";

  Integer modulus_at(long x) const;
  std::string to_string() const;
};

struct PointRecord {
  long n = 0;
  Integer lhs_mod;
  Integer rhs_mod;
  bool pass = false;
};

struct ClaimReport {
  std::vector<PointRecord> points;
  bool pass = true;
  std::optional<long> first_failure;
};

/// Tests the claim at every n in [lo, hi] (or every prime there when
/// primes_only). `terms` must cover F(0..hi-1+upper_offset). Stops at the
/// first failure unless exhaustive.
ClaimReport check_claim(const CongruenceClaim& claim, std::span<const Rational> terms, long lo, long hi,
                        bool primes_only, bool exhaustive = false);

/// Divisibility family from the window-normalized telescoped closed form.
struct FamilyClaim {
  UniPoly weight;                ///< L*(p)
  SumClosedForm symbolic;        ///< for arbitrary p
  ConcreteClosedForm concrete;   ///< for this p
  UniPoly poly_factor;           ///< common factor g(n) of the boundary
  Integer integer_factor;        ///< extra factor observed on the tested range
  long checked_up_to = 0;        ///< range over which integer_factor was observed
  CongruenceClaim claim;
};

/// `terms` are the values F(0..N) of the sequence L annihilates; the integer
/// factor of the modulus is the gcd of the boundary terms over n <= N - 1.
FamilyClaim derive_family(const RecOperator& L, std::span<const Rational> terms, const UniPoly& p);

struct FactRecord {
  std::string name;
  long p = 0;
  bool pass = false;
  std::string detail;
};

/// f_p == 2 (mod p^3) and f_{p-1} == 1 + 3(2^{p-1}-1) + 3(2^{p-1}-1)^2
/// (mod p^3) for primes in [lo, hi]. `franel` holds unsigned f_0..f_hi.
std::vector<FactRecord> known_fact_checks(std::span<const Rational> franel, long lo = 5, long hi = 97);

bool is_prime(long n);

}  // namespace holo
