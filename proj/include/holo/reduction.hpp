#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "holo/operator.hpp"

namespace holo {

/// Q = sum_{s} cs[s] L*(n^s) + sum_{s} kept[s] n^{d+s} + residual.
struct ReductionResult {
  std::map<int, Rational> cs;
  /// Only for degenerated L, keys in R_L.
  std::map<int, Rational> kept;
  UniPoly residual;
};

/// Polynomial reduction of Q with respect to L, by top-down elimination of
/// leading coefficients against q_s = L*(n^s).
ReductionResult reduce(const RecOperator& L, const UniPoly& Q);

/// Rebuilds Q from a reduction (for checks).
UniPoly reconstruct(const RecOperator& L, const ReductionResult& r);

/// sum_j c_j(n) p(n - j) for an unspecified polynomial p; key j, value c_j.
using ShiftCombination = std::map<int, UniPoly>;

/// coeff * F(n + offset)
struct BoundaryTerm {
  int offset = 0;
  ShiftCombination coeff;
};

/// Closed form, valid for every polynomial p and every n >= valid_from:
///
///   sum_{k=0}^{n-1} L*(p)(k) F(k) = C0 - sum_t t.coeff(n) F(n + t.offset)
///
/// with C0 = sum_j constant[j] p(-j).
struct SumClosedForm {
  std::map<int, Rational> constant;
  std::vector<BoundaryTerm> boundary;
  int valid_from = 0;
  bool window_normalized = false;
  /// Why normalize_window left the form unchanged, if it did.
  std::string note;
};

/// Telescoped sum from the certificate with symbolic p. `initial` holds
/// F(0..J-1); throws DomainError when it is shorter.
SumClosedForm telescoped_sum(const RecOperator& L, std::span<const Rational> initial);

/// Rewrites the boundary F(n), F(n+1) of an order-2 form into F(n-1), F(n)
/// using a_2(n-1) F(n+1) = -a_0(n-1) F(n-1) - a_1(n-1) F(n). Throws
/// DomainError when J != 2. If a coefficient fails to be polynomial the
/// input form is returned unchanged with `note` set.
SumClosedForm normalize_window(const SumClosedForm& form, const RecOperator& L);

/// The closed form for a specific p.
struct ConcreteClosedForm {
  Rational constant;
  /// (offset, coefficient of F(n + offset))
  std::vector<std::pair<int, UniPoly>> boundary;
  int valid_from = 0;
};

ConcreteClosedForm instantiate(const SumClosedForm& form, const UniPoly& p);

/// telescoped_sum followed by instantiate.
ConcreteClosedForm telescoped_sum(const RecOperator& L, const UniPoly& p, std::span<const Rational> initial);

/// Right-hand side at n; `terms` must cover F(0..n + max offset).
Rational evaluate(const ConcreteClosedForm& form, long n, std::span<const Rational> terms);

/// Common polynomial factor of all boundary coefficients of a symbolic form,
/// as a primitive integer polynomial with positive leading coefficient.
UniPoly boundary_common_factor(const SumClosedForm& form);

/// e.g. "-n^2*(p(n-2)*F(n)+8*p(n-1)*F(n-1))"
std::string render(const SumClosedForm& form, const std::string& var = "n", const std::string& seq = "F");

}  // namespace holo
