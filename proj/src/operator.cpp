#include "holo/operator.hpp"

#include <sstream>

#include "holo/error.hpp"

namespace holo {

RecOperator::RecOperator(std::vector<UniPoly> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  if (coeffs_.empty() || coeffs_.back().is_zero())
    throw DomainError("operator needs a nonzero leading coefficient a_J");
  Integer den = 1;
  for (const auto& a : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), denominator_lcm(a).get_mpz_t());
  Integer content = 0;
  for (const auto& a : coeffs_)
    for (const auto& c : a.coeffs()) {
      Integer z = c.get_num() * (den / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
  Rational scale(den, content);
  scale.canonicalize();
  if (coeffs_.back().leading() < 0) scale = -scale;
  for (auto& a : coeffs_) a *= scale;
}

std::string to_string(const RecOperator& L) {
  std::ostringstream os;
  bool first = true;
  for (int i = L.order(); i >= 0; --i) {
    const UniPoly& a = L.coeff(i);
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool bare = i > 0 && a == UniPoly::constant(1);
    if (!bare) os << "(" << to_string(a, L.var()) << ")" << (i > 0 ? "*" : "");
    if (i == 1) os << "S";
    if (i > 1) os << "S^" << i;
  }
  return os.str();
}

UniPoly adjoint_apply(const RecOperator& L, const UniPoly& p) {
  UniPoly out;
  for (int i = 0; i <= L.order(); ++i) {
    const Rational shift(-i);
    out += L.coeff(i).shifted(shift) * p.shifted(shift);
  }
  return out;
}

Certificate certificate(const RecOperator& L, const UniPoly& p) {
  const int J = L.order();
  Certificate cert;
  cert.u.resize(static_cast<std::size_t>(std::max(J, 0)));
  for (int i = 0; i < J; ++i) {
    UniPoly u;
    for (int j = 1; j <= J - i; ++j) {
      const Rational shift(-j);
      u += L.coeff(i + j).shifted(shift) * p.shifted(shift);
    }
    cert.u[static_cast<std::size_t>(i)] = std::move(u);
  }
  return cert;
}

DegreeData degree_data(const RecOperator& L) {
  const int J = L.order();
  DegreeData dd;
  dd.b.resize(static_cast<std::size_t>(J + 1));
  for (int k = 0; k <= J; ++k) {
    UniPoly bk;
    Integer binom = 1;  // C(j, k) starting at j = k
    for (int j = k; j <= J; ++j) {
      if (j > k) binom = binom * j / (j - k);
      bk += L.coeff(J - j).shifted(Rational(j - J)) * Rational(binom);
    }
    dd.b[static_cast<std::size_t>(k)] = std::move(bk);
  }
  Degree best = Degree::bottom();
  for (int k = 0; k <= J; ++k) {
    const Degree dk = dd.b[static_cast<std::size_t>(k)].degree() + (-k);
    if (dk > best) best = dk;
  }
  if (best.is_bottom()) throw MathError("all b_k vanish");
  dd.d = best.value();
  UniPoly falling = UniPoly::constant(1);  // s(s-1)...(s-k+1)
  for (int k = 0; k <= J; ++k) {
    if (k > 0) falling *= UniPoly::linear(Rational(-(k - 1)));
    dd.indicial += falling * dd.b[static_cast<std::size_t>(k)].coeff(dd.d + k);
  }
  if (dd.indicial.is_zero()) throw MathError("indicial polynomial vanishes");
  for (const auto& r : integer_roots(dd.indicial))
    if (r >= 0) dd.degenerate_degrees.insert(r);
  dd.degenerated = !dd.degenerate_degrees.empty();
  return dd;
}

CoprimeCheck shift_coprime_check(const RecOperator& L) {
  if (L.coeff(0).is_zero()) throw InapplicableError("a_0 = 0: shift-coprimality condition is not applicable");
  CoprimeCheck out;
  out.violations = dispersion(L.coeff(0), L.coeff(L.order()));
  out.coprime = out.violations.empty();
  return out;
}

RecOperator scale_operator(const RecOperator& L, const Rational& r) {
  if (r == 0) throw DomainError("scale factor must be nonzero");
  const int J = L.order();
  // sum_i a_i A(n+i) = 0  =>  sum_i a_i r^{-i} (A r^n)(n+i) = 0; clear r^{-J}.
  std::vector<UniPoly> out;
  out.reserve(static_cast<std::size_t>(J + 1));
  for (int i = 0; i <= J; ++i) {
    const Integer f = ipow(r.get_den(), static_cast<unsigned long>(i)) *
                      ipow(r.get_num(), static_cast<unsigned long>(J - i));
    out.push_back(L.coeff(i) * Rational(f));
  }
  return RecOperator(std::move(out), L.var());
}

}  // namespace holo
