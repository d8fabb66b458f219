#include "factor.hpp"

#include <algorithm>

#include "holo/error.hpp"

namespace holo::detail {

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Integer rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long m = 64;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      return Integer(t % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = rho(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

std::map<Integer, unsigned> factor(const Integer& n_in) {
  if (n_in == 0) throw DomainError("cannot factor zero");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> out;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  split(n, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> result{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = result.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace holo::detail
