#include "holo/verify.hpp"

#include <algorithm>
#include <sstream>

#include "holo/error.hpp"

namespace holo {

const std::string& embedded_pi_digits() {
  static const std::string digits =
      "31415926535897932384626433832795028841971693993751058209749445923078164062862089"
      "98628034825342117067982148086513282306647093844609550582231725359408128481117450"
      "28410270193852110555964462294895493038196442881097566593344612847564823378678316"
      "52712019091456485669234603486104543266482133936072602491412737245870066063155881"
      "74881520920962829254091715364367892590360011330530548820466521384146951941511609"
      "43305727036575959195309218611738193261179310511854807446237996274956735188575272"
      "48912279381830119491298336733624406566430860213949463952247371907021798609437027"
      "70539217176293176752384674818467669405132000568127145263560827785771342757789609"
      "17363717872146844090122495343014654958537105079227968925892354201995611212902196"
      "08640344181598136297747713099605187072113499999983729780499510597317328160963185"
      "95024459455346908302642522308253344685035261931188171010003137838752886587533208"
      "38142061717766914730359825349042875546873115956286388235378759375195778185778053"
      "21712268066130019278766111959092164201989";
  return digits;
}

namespace {

Integer pow10(unsigned long e) { return ipow(Integer(10), e); }

// floor-ish of atan(1/x) * scale, error below the number of series terms.
Integer atan_inv(unsigned long x, const Integer& scale) {
  const Integer x2 = Integer(x) * x;
  Integer power = scale / x;  // scale / x^{2k+1}
  Integer sum = 0;
  for (unsigned long k = 0; power != 0; ++k) {
    const Integer term = power / (2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power /= x2;
  }
  return sum;
}

constexpr unsigned kAtanGuard = 10;

}  // namespace

Integer pi_machin(unsigned digits) {
  const Integer scale = pow10(digits + kAtanGuard);
  const Integer v = 16 * atan_inv(5, scale) - 4 * atan_inv(239, scale);
  return v / pow10(kAtanGuard);
}

Integer pi_gauss(unsigned digits) {
  const Integer scale = pow10(digits + kAtanGuard);
  const Integer v = 48 * atan_inv(18, scale) + 32 * atan_inv(57, scale) - 20 * atan_inv(239, scale);
  return v / pow10(kAtanGuard);
}

Integer isqrt_newton(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative number");
  if (n < 2) return n;
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1);
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

PrecisionContext::PrecisionContext(unsigned digits, std::initializer_list<unsigned long> alphas)
    : digits_(digits), working_(digits + 20) {
  if (digits < 20) throw DomainError("precision below 20 digits");
  pi_ = pi_machin(working_);
  // Independent cross-checks, to within one unit in the last working digit.
  const Integer second = pi_gauss(working_);
  if (abs(Integer(pi_ - second)) > 1) throw MathError("pi: Machin and Gauss formulas disagree");
  const auto& embedded = embedded_pi_digits();
  const std::size_t n = std::min<std::size_t>(embedded.size(), working_ + 1);
  const Integer prefix(embedded.substr(0, n), 10);
  const Integer ours = pi_ / pow10(working_ + 1 - n);
  if (abs(Integer(ours - prefix)) > 1) throw MathError("pi: computed value disagrees with the embedded constant");
  for (unsigned long a : alphas) sqrt_cache_.emplace(Integer(a), sqrt_scaled(Integer(a)));
}

std::string PrecisionContext::pi_string() const {
  const std::string s = Integer(pi_ / pow10(working_ - digits_)).get_str();
  return s.substr(0, 1) + "." + s.substr(1);
}

Integer PrecisionContext::sqrt_scaled(const Integer& alpha) const {
  if (auto it = sqrt_cache_.find(alpha); it != sqrt_cache_.end()) return it->second;
  if (alpha < 0) throw DomainError("negative alpha");
  return isqrt_newton(Integer(alpha * pow10(2UL * working_)));
}

Integer target_scaled(const SeriesConstant& constant, const PrecisionContext& ctx) {
  const Integer scale = pow10(ctx.working_digits());
  const Integer& num = constant.coeff.get_num();
  const Integer& den = constant.coeff.get_den();
  Integer numerator;
  Integer denominator;
  switch (constant.kind) {
    case ConstantKind::RationalConstant:
      numerator = num * scale;
      denominator = den;
      break;
    case ConstantKind::RationalOverPi:
      numerator = num * scale * scale;
      denominator = den * ctx.pi_scaled();
      break;
    case ConstantKind::SqrtAlphaOverPi:
      numerator = num * ctx.sqrt_scaled(constant.alpha) * scale;
      denominator = den * ctx.pi_scaled();
      break;
  }
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return q;
}

Rational crvz_sum(std::span<const Rational> terms, long N) {
  if (N < 1 || static_cast<std::size_t>(N) > terms.size()) throw DomainError("crvz_sum needs 1 <= N <= #terms");
  // d = ((3+sqrt 8)^N + (3-sqrt 8)^N) / 2 = T_N(3)
  Integer prev = 1;
  Integer d = 3;
  for (long k = 1; k < N; ++k) {
    Integer next = 6 * d - prev;
    prev = std::move(d);
    d = std::move(next);
  }
  Rational b = -1;
  Rational c = Rational(-d);
  Rational s = 0;
  for (long k = 0; k < N; ++k) {
    c = b - c;
    const Rational a = (k % 2 == 0) ? terms[static_cast<std::size_t>(k)] : Rational(-terms[static_cast<std::size_t>(k)]);
    s += c * a;
    b = b * Rational(2 * (k + N) * (k - N)) / Rational((2 * k + 1) * (k + 1));
  }
  return s / Rational(d);
}

std::string scientific(const Rational& x_in, int significant) {
  Rational x = abs(x_in);
  if (x == 0) return "0";
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  auto scaled_pow = [](long p) {
    return p >= 0 ? Rational(pow10(static_cast<unsigned long>(p))) : Rational(1, pow10(static_cast<unsigned long>(-p)));
  };
  while (x >= scaled_pow(e + 1)) ++e;
  while (x < scaled_pow(e)) --e;
  const Rational m = x / scaled_pow(e - significant + 1);
  Integer digits;
  mpz_fdiv_q(digits.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  std::string s = digits.get_str();
  std::ostringstream os;
  os << s.substr(0, 1);
  if (s.size() > 1) os << "." << s.substr(1);
  os << "e" << (e >= 0 ? "+" : "-") << std::abs(e);
  return os.str();
}

SeriesReport verify_series(const UniPoly& weight, const SeriesConstant& constant, std::span<const Rational> terms,
                           long N, const PrecisionContext& ctx, bool accelerate, const Rational& tolerance) {
  if (N < 1) throw DomainError("verify_series needs N >= 1");
  const long count = accelerate ? N : N + 1;
  if (static_cast<std::size_t>(count) > terms.size())
    throw DomainError("verify_series needs " + std::to_string(count) + " sequence terms");
  std::vector<Rational> t(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) t[static_cast<std::size_t>(k)] = weight(Rational(k)) * terms[static_cast<std::size_t>(k)];

  SeriesReport rep;
  rep.target = to_string(constant);
  rep.partial_terms = N;
  rep.accelerated = accelerate;
  if (accelerate) {
    rep.partial_sum = crvz_sum(t, N);
  } else {
    for (const auto& x : t) rep.partial_sum += x;
  }
  rep.last_term = scientific(t.back());

  const Integer scale = pow10(ctx.working_digits());
  const Rational target(target_scaled(constant, ctx), scale);
  const Rational diff = abs(Rational(rep.partial_sum - target));
  const Rational floor_bound(1, pow10(ctx.digits()));
  rep.abs_residual = diff < floor_bound ? "<1e-" + std::to_string(ctx.digits()) : scientific(diff);
  rep.pass = diff <= tolerance;
  if (tolerance < floor_bound) rep.note = "tolerance is below the conversion precision";
  if (!accelerate && !rep.pass && abs(t.back()) > tolerance) rep.note = "N too small for the requested tolerance";
  return rep;
}

}  // namespace holo
