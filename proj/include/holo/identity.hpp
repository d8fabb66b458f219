#pragma once

#include <map>
#include <optional>
#include <string>

#include "holo/operator.hpp"
#include "holo/sequences.hpp"

namespace holo {

/// Shape of the constant kappa in  sum W(n) F(n) = lambda * kappa.
enum class ConstantKind {
  RationalOverPi,    ///< kappa = 1/pi
  SqrtAlphaOverPi,   ///< kappa = sqrt(alpha)/pi
  RationalConstant,  ///< kappa = 1
};

std::string to_string(ConstantKind kind);
ConstantKind constant_kind_from_string(const std::string& s);

/// coeff * kappa, kept symbolic.
struct SeriesConstant {
  Rational coeff;
  Integer alpha = 1;
  ConstantKind kind = ConstantKind::RationalOverPi;
};

/// "4/(3*pi)", "1444*sqrt(95)/(95*pi)", "-3/7"
std::string to_string(const SeriesConstant& c);

/// A known evaluation sum_{n>=0} W(n) F(n) = lambda * kappa with L F = 0.
struct SeedIdentity {
  std::string name;
  RecOperator op;
  UniPoly weight;
  Rational lambda;
  Integer alpha = 1;
  ConstantKind kind = ConstantKind::RationalOverPi;
  /// Catalog name of the unweighted sequence and the weighting applied to
  /// it; used only for numeric verification and rendering.
  std::string sequence;
  bool alternating = false;
  Rational geom = 1;
  std::string label = "F(n)";

  SeriesConstant constant() const { return {lambda, alpha, kind}; }
};

/// Checks the SeedIdentity invariants; throws DomainError.
void validate(const SeedIdentity& seed);

/// sum P(n) Q(n) F(n) = c * lambda * kappa, certified by
///   P Q - c W = sum_s cs[s] L*(n^s).
struct NewIdentity {
  UniPoly P;
  UniPoly Q;
  Rational c;
  std::map<int, Rational> cs;
  SeedIdentity seed;
  /// P Q scaled to coprime integer coefficients with positive leading
  /// coefficient, and c scaled by the same factor.
  UniPoly normalized_weight;
  Rational normalized_c;
  /// Dimension of the solution space the identity was picked from.
  std::size_t nullspace_dim = 0;

  SeriesConstant constant() const { return {normalized_c * seed.lambda, seed.alpha, seed.kind}; }
};

/// Solves P Q = c W + sum_{s=0}^{deg P} c_s L*(n^s) for (Q, c, c_s) with
/// deg Q <= qdeg (default d - 1). Throws DomainError for constant P or a
/// degenerated operator and MathError when no solution has Q != 0.
NewIdentity generate(const SeedIdentity& seed, const UniPoly& P, std::optional<int> qdeg = std::nullopt);

/// Rescales Q, c and the c_s so that P Q is the normalized weight.
NewIdentity normalize_identity(const NewIdentity& id);

/// Independent check through the reduction: reduce(L, PQ - cW) has zero
/// residual and no kept monomials.
bool check_membership(const NewIdentity& id);

/// "sum_{n>=0} (9n^4-8n^3-n^2) * Domb(n)/(-32)^n = 4/(3*pi)"
std::string render(const NewIdentity& id);
std::string render(const SeedIdentity& seed);

}  // namespace holo
