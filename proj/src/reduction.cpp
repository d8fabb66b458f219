#include "holo/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "holo/error.hpp"

namespace holo {

ReductionResult reduce(const RecOperator& L, const UniPoly& Q) {
  const DegreeData dd = degree_data(L);
  ReductionResult out;
  UniPoly rest = Q;
  if (Q.is_zero() || Q.degree() < Degree(dd.d)) {
    out.residual = std::move(rest);
    return out;
  }
  const int m = Q.degree().value();
  for (int s = m - dd.d; s >= 0; --s) {
    const int target = dd.d + s;
    if (target < 0) continue;
    const Rational lead = rest.coeff(target);
    if (lead == 0) continue;
    if (dd.degenerate_degrees.contains(Integer(s))) {
      out.kept[s] = lead;
      rest -= UniPoly::monomial(static_cast<unsigned>(target), lead);
      continue;
    }
    const UniPoly qs = adjoint_apply(L, UniPoly::monomial(static_cast<unsigned>(s)));
    const Rational c = lead / qs.leading();
    out.cs[s] = c;
    rest -= qs * c;
  }
  out.residual = std::move(rest);
  return out;
}

UniPoly reconstruct(const RecOperator& L, const ReductionResult& r) {
  const DegreeData dd = degree_data(L);
  UniPoly q = r.residual;
  for (const auto& [s, c] : r.cs) q += adjoint_apply(L, UniPoly::monomial(static_cast<unsigned>(s))) * c;
  for (const auto& [s, c] : r.kept) q += UniPoly::monomial(static_cast<unsigned>(dd.d + s), c);
  return q;
}

namespace {

void add_to(ShiftCombination& combo, int shift, const UniPoly& c) {
  UniPoly& slot = combo[shift];
  slot += c;
  if (slot.is_zero()) combo.erase(shift);
}

}  // namespace

SumClosedForm telescoped_sum(const RecOperator& L, std::span<const Rational> initial) {
  const int J = L.order();
  if (initial.size() < static_cast<std::size_t>(J))
    throw DomainError("telescoped_sum needs " + std::to_string(J) + " initial values, got " +
                      std::to_string(initial.size()));
  SumClosedForm form;
  // u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) p(n-j)
  for (int i = 0; i < J; ++i) {
    BoundaryTerm t;
    t.offset = i;
    for (int j = 1; j <= J - i; ++j) {
      const UniPoly a = L.coeff(i + j).shifted(Rational(-j));
      add_to(t.coeff, j, a);
      const Rational c0 = a(Rational(0)) * initial[static_cast<std::size_t>(i)];
      if (c0 != 0) {
        form.constant[j] += c0;
        if (form.constant[j] == 0) form.constant.erase(j);
      }
    }
    if (!t.coeff.empty()) form.boundary.push_back(std::move(t));
  }
  return form;
}

SumClosedForm normalize_window(const SumClosedForm& form, const RecOperator& L) {
  if (L.order() != 2) throw DomainError("window normalization is implemented for order-2 operators only");
  const UniPoly a0 = L.coeff(0).shifted(Rational(-1));
  const UniPoly a1 = L.coeff(1).shifted(Rational(-1));
  const UniPoly a2 = L.coeff(2).shifted(Rational(-1));

  // Numerators over the common denominator a2(n-1).
  ShiftCombination at_prev;  // F(n-1)
  ShiftCombination at_curr;  // F(n)
  for (const auto& t : form.boundary) {
    for (const auto& [j, c] : t.coeff) {
      switch (t.offset) {
        case -1:
          add_to(at_prev, j, c * a2);
          break;
        case 0:
          add_to(at_curr, j, c * a2);
          break;
        case 1:
          add_to(at_prev, j, -(c * a0));
          add_to(at_curr, j, -(c * a1));
          break;
        default: {
          SumClosedForm same = form;
          same.note = "boundary offset " + std::to_string(t.offset) + " outside the order-2 window";
          return same;
        }
      }
    }
  }
  SumClosedForm out;
  out.constant = form.constant;
  out.window_normalized = true;
  out.valid_from = std::max(form.valid_from, 1);
  for (auto [offset, combo] : {std::pair{-1, &at_prev}, std::pair{0, &at_curr}}) {
    BoundaryTerm t;
    t.offset = offset;
    for (const auto& [j, num] : *combo) {
      auto [q, r] = divmod(num, a2);
      if (!r.is_zero()) {
        SumClosedForm same = form;
        same.note = "coefficient of p(n-" + std::to_string(j) + ")F(n" + (offset < 0 ? "-1" : "") +
                    ") is not a polynomial after substitution";
        return same;
      }
      t.coeff[j] = std::move(q);
    }
    if (!t.coeff.empty()) out.boundary.push_back(std::move(t));
  }
  return out;
}

ConcreteClosedForm instantiate(const SumClosedForm& form, const UniPoly& p) {
  ConcreteClosedForm out;
  out.valid_from = form.valid_from;
  for (const auto& [j, c] : form.constant) out.constant += c * p(Rational(-j));
  for (const auto& t : form.boundary) {
    UniPoly coeff;
    for (const auto& [j, c] : t.coeff) coeff += c * p.shifted(Rational(-j));
    if (!coeff.is_zero()) out.boundary.emplace_back(t.offset, std::move(coeff));
  }
  return out;
}

ConcreteClosedForm telescoped_sum(const RecOperator& L, const UniPoly& p, std::span<const Rational> initial) {
  return instantiate(telescoped_sum(L, initial), p);
}

Rational evaluate(const ConcreteClosedForm& form, long n, std::span<const Rational> terms) {
  Rational value = form.constant;
  for (const auto& [offset, coeff] : form.boundary) {
    const long idx = n + offset;
    if (idx < 0 || static_cast<std::size_t>(idx) >= terms.size())
      throw DomainError("closed form needs F(" + std::to_string(idx) + ")");
    value -= coeff(Rational(n)) * terms[static_cast<std::size_t>(idx)];
  }
  return value;
}

UniPoly boundary_common_factor(const SumClosedForm& form) {
  UniPoly g;
  for (const auto& t : form.boundary)
    for (const auto& [j, c] : t.coeff) g = g.is_zero() ? c.monic() : gcd(g, c);
  if (g.is_zero()) return UniPoly::constant(1);
  return primitive_form(g).primitive;
}

namespace {

std::string shifted_arg(const std::string& var, int shift) {
  if (shift == 0) return var;
  return var + (shift > 0 ? "+" : "-") + std::to_string(std::abs(shift));
}

std::string wrap(const UniPoly& p, const std::string& var) {
  const std::string s = to_string(p, var);
  if (p.coeffs().size() <= 1 || std::count(p.coeffs().begin(), p.coeffs().end(), Rational(0)) ==
                                    static_cast<long>(p.coeffs().size()) - 1)
    return s;
  return "(" + s + ")";
}

}  // namespace

std::string render(const SumClosedForm& form, const std::string& var, const std::string& seq) {
  std::ostringstream os;
  bool have_constant = false;
  for (const auto& [j, c] : form.constant) {
    if (have_constant) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    Rational mag = abs(c);
    if (mag != 1) os << to_string(mag) << "*";
    os << "p(" << -j << ")";
    have_constant = true;
  }
  if (form.boundary.empty()) {
    if (!have_constant) os << "0";
    return os.str();
  }
  UniPoly g = boundary_common_factor(form);

  struct Piece {
    UniPoly h;
    int shift;
    int offset;
  };
  std::vector<Piece> pieces;
  auto ordered = form.boundary;
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.offset < b.offset; });
  for (const auto& t : ordered)
    for (auto it = t.coeff.rbegin(); it != t.coeff.rend(); ++it)
      pieces.push_back({divmod(it->second, g).quotient, it->first, t.offset});
  // RHS = C0 - g * sum(pieces); flip so the first inner coefficient is positive.
  bool outer_negative = true;
  if (!pieces.empty() && pieces.front().h.leading() < 0) {
    outer_negative = false;
    for (auto& pc : pieces) pc.h = -pc.h;
  }
  if (have_constant)
    os << (outer_negative ? "-" : "+");
  else if (outer_negative)
    os << "-";
  const bool trivial_g = g == UniPoly::constant(1);
  if (!trivial_g) os << wrap(g, var) << "*";
  os << "(";
  bool first = true;
  for (const auto& pc : pieces) {
    UniPoly h = pc.h;
    if (h.leading() < 0) {
      os << "-";
      h = -h;
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (h != UniPoly::constant(1)) os << wrap(h, var) << "*";
    os << "p(" << shifted_arg(var, -pc.shift) << ")*" << seq << "(" << shifted_arg(var, pc.offset) << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace holo
