#pragma once

#include <map>
#include <span>
#include <string>

#include "holo/identity.hpp"

namespace holo {

/// pi and square roots as scaled integers floor(x * 10^working_digits), where
/// working_digits = digits + guard digits. Immutable after construction.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned digits, std::initializer_list<unsigned long> alphas = {});

  unsigned digits() const { return digits_; }
  unsigned working_digits() const { return working_; }
  const Integer& pi_scaled() const { return pi_; }
  /// Decimal expansion of pi to `digits` places, "3.14159...".
  std::string pi_string() const;
  /// floor(sqrt(alpha) * 10^working_digits); cached for the constructor's
  /// alphas, computed on demand otherwise.
  Integer sqrt_scaled(const Integer& alpha) const;

 private:
  unsigned digits_;
  unsigned working_;
  Integer pi_;
  std::map<Integer, Integer> sqrt_cache_;
};

/// floor(pi * 10^digits) by Machin's formula 16 atan(1/5) - 4 atan(1/239).
Integer pi_machin(unsigned digits);
/// Same quantity by Gauss's 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239).
Integer pi_gauss(unsigned digits);
/// First 1001 significant digits of pi, "31415926535...".
const std::string& embedded_pi_digits();

/// floor(sqrt(n)) by integer Newton iteration.
Integer isqrt_newton(const Integer& n);

struct SeriesReport {
  std::string target;
  long partial_terms = 0;
  bool accelerated = false;
  Rational partial_sum;
  /// |S - target| in scientific notation, or "<1e-D" at the conversion floor.
  std::string abs_residual;
  bool pass = false;
  /// Magnitude of the last included term; a crude tail indicator for
  /// unaccelerated sums.
  std::string last_term;
  std::string note;
};

/// Exact partial sum sum_{n=0}^{N} weight(n) F(n) (or the Cohen-Rodriguez
/// Villegas-Zagier weighted sum of the same terms when accelerate) compared
/// with constant at ctx precision. `terms` must hold F(0..N).
SeriesReport verify_series(const UniPoly& weight, const SeriesConstant& constant, std::span<const Rational> terms,
                           long N, const PrecisionContext& ctx, bool accelerate, const Rational& tolerance);

/// sum_k t_k for alternating t_k using the first N terms, with exact
/// rational CRVZ weights.
Rational crvz_sum(std::span<const Rational> terms, long N);

/// Scaled target floor(constant * 10^working_digits).
Integer target_scaled(const SeriesConstant& constant, const PrecisionContext& ctx);

/// "3.2e-33" style rendering of a nonnegative rational.
std::string scientific(const Rational& x, int significant = 2);

}  // namespace holo
