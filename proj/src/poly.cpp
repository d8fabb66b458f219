#include "holo/poly.hpp"

#include <algorithm>
#include <sstream>

#include "factor.hpp"
#include "holo/error.hpp"

namespace holo {

int Degree::value() const {
  if (!value_) throw DomainError("degree of the zero polynomial has no integer value");
  return *value_;
}

std::string to_string(const Degree& d) { return d.is_bottom() ? "-inf" : std::to_string(d.value()); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear(const Rational& a) { return UniPoly({a, Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree UniPoly::degree() const {
  if (coeffs_.empty()) return Degree::bottom();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::shifted(const Rational& a) const {
  // Horner in the basis (x + a): result = (...(c_d (x+a) + c_{d-1})(x+a) ...).
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    // r <- r * (x + a) + c_idx
    for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = r[j - 1] + a * r[j];
    r[0] = a * r[0] + coeffs_[idx];
  }
  return UniPoly(std::move(r));
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) acc = acc * x + coeffs_[idx];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly& UniPoly::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("polynomial division by zero constant");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

DivResult divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree().value();
  const int da = a.is_zero() ? -1 : a.degree().value();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  const Rational lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p;
  return divmod(p, gcd(p, p.derivative())).quotient;
}

Integer denominator_lcm(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

PrimitiveForm primitive_form(const UniPoly& p) {
  if (p.is_zero()) return {Rational(0), UniPoly{}};
  const Integer l = denominator_lcm(p);
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer z = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  }
  Rational scale(g, l);
  scale.canonicalize();
  if (p.leading() < 0) scale = -scale;
  return {scale, p / scale};
}

namespace {

Integer eval_integer(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

std::set<Integer> integer_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("integer_roots of the zero polynomial");
  std::set<Integer> roots;
  if (p.is_constant()) return roots;
  UniPoly q = primitive_form(squarefree_part(p)).primitive;
  std::size_t low = 0;
  while (q.coeffs()[low] == 0) ++low;
  if (low > 0) roots.insert(Integer(0));
  std::vector<Integer> c;
  for (std::size_t i = low; i < q.coeffs().size(); ++i) c.push_back(q.coeffs()[i].get_num());
  if (c.size() <= 1) return roots;
  // Cauchy bound on root magnitude.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rational ratio(abs(c[i]), abs(c.back()));
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;
  for (const auto& d : detail::divisors(c.front())) {
    if (d > bound) break;
    for (const Integer& cand : {d, Integer(-d)}) {
      if (eval_integer(c, cand) == 0) roots.insert(cand);
    }
  }
  return roots;
}

UniPoly shifted_resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant with a zero polynomial");
  const int m = a.degree().value();
  const int k = b.degree().value();
  if (m == 0 && k == 0) return UniPoly::constant(1);
  if (m == 0) return UniPoly::constant(rpow(a.leading(), static_cast<unsigned long>(k)));
  if (k == 0) return UniPoly::constant(rpow(b.leading(), static_cast<unsigned long>(m)));

  // Coefficients of b(x + i) in x, each a polynomial in i.
  std::vector<UniPoly> bi(static_cast<std::size_t>(k + 1));
  for (int j = 0; j <= k; ++j) {
    const Rational bj = b.coeff(j);
    if (bj == 0) continue;
    // (x + i)^j = sum_t C(j, t) x^t i^{j-t}
    Integer binom = 1;
    for (int t = 0; t <= j; ++t) {
      if (t > 0) binom = binom * (j - t + 1) / t;
      bi[static_cast<std::size_t>(t)] += UniPoly::monomial(static_cast<unsigned>(j - t), bj * Rational(binom));
    }
  }

  const std::size_t size = static_cast<std::size_t>(m + k);
  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
  // Rows 0..k-1: a shifted; rows k..k+m-1: b(x+i) shifted. Columns by descending power.
  for (int r = 0; r < k; ++r)
    for (int j = 0; j <= m; ++j)
      mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - j)] = UniPoly::constant(a.coeff(j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= k; ++j)
      mat[static_cast<std::size_t>(k + r)][static_cast<std::size_t>(r + k - j)] = bi[static_cast<std::size_t>(j)];

  // Bareiss fraction-free elimination.
  UniPoly prev = UniPoly::constant(1);
  bool negate = false;
  for (std::size_t p = 0; p + 1 < size; ++p) {
    if (mat[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < size && mat[r][p].is_zero()) ++r;
      if (r == size) return {};
      std::swap(mat[p], mat[r]);
      negate = !negate;
    }
    for (std::size_t r = p + 1; r < size; ++r) {
      for (std::size_t c = p + 1; c < size; ++c) {
        UniPoly num = mat[r][c] * mat[p][p] - mat[r][p] * mat[p][c];
        auto [q, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw MathError("Bareiss step left a remainder");
        mat[r][c] = std::move(q);
      }
      mat[r][p] = UniPoly{};
    }
    prev = mat[p][p];
  }
  UniPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

std::set<Integer> dispersion(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("dispersion with a zero polynomial");
  std::set<Integer> out;
  if (a.is_constant() || b.is_constant()) return out;
  const UniPoly res = shifted_resultant(a, b);
  if (res.is_zero()) throw MathError("shifted resultant vanishes identically");
  for (const auto& r : integer_roots(res))
    if (r >= 0) out.insert(r);
  return out;
}

std::string to_string(const UniPoly& p, const std::string& var, PolyStyle style) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* mul = style == PolyStyle::Explicit ? "*" : "";
  for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
    const Rational& c = p.coeffs()[idx];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    const bool unit = mag == 1;
    if (idx == 0 || !unit) {
      os << to_string(mag);
      if (idx > 0) os << mul;
    }
    if (idx >= 1) os << var;
    if (idx >= 2) os << "^" << idx;
  }
  return os.str();
}

}  // namespace holo
