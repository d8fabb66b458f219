#pragma once

#include <set>
#include <string>
#include <vector>

#include "holo/poly.hpp"

namespace holo {

/// L = sum_{i=0}^{J} a_i(n) sigma^i, where sigma F(n) = F(n+1).
///
/// Construction normalizes: coefficients are scaled to coprime integers and
/// the leading coefficient of a_J is made positive, so operators that differ
/// by a constant factor compare equal. a_J must be nonzero.
class RecOperator {
 public:
  RecOperator(std::vector<UniPoly> coeffs, std::string var = "n");

  /// J
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  const UniPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::string& var() const { return var_; }

  friend bool operator==(const RecOperator& a, const RecOperator& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<UniPoly> coeffs_;
  std::string var_;
};

std::string to_string(const RecOperator& L);

/// L*(p)(n) = sum_i a_i(n-i) p(n-i)
UniPoly adjoint_apply(const RecOperator& L, const UniPoly& p);

/// Coefficients u_0..u_{J-1} of the difference Lagrange identity
///   p L(F) - L*(p) F = Delta(sum_i u_i(n) F(n+i)),
/// u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) p(n-j).
struct Certificate {
  std::vector<UniPoly> u;
};

Certificate certificate(const RecOperator& L, const UniPoly& p);

struct DegreeData {
  /// b_k(n) = sum_{j=k}^{J} C(j,k) a_{J-j}(n+j-J)
  std::vector<UniPoly> b;
  /// max_k (deg b_k - k); may be negative.
  int d = 0;
  /// f(s) = sum_k [n^{d+k}] b_k * s(s-1)...(s-k+1)
  UniPoly indicial;
  /// Nonnegative integer roots of f.
  std::set<Integer> degenerate_degrees;
  bool degenerated = false;
};

/// Degree analysis of L: deg L*(p) = d + deg p unless deg p is a root of f.
DegreeData degree_data(const RecOperator& L);

struct CoprimeCheck {
  bool coprime = false;
  /// Shifts i >= 0 with gcd(a_0(n), a_J(n+i)) nonconstant.
  std::set<Integer> violations;
};

/// gcd(a_0(n), a_J(n+i)) = 1 for all i >= 0? Throws InapplicableError when
/// a_0 = 0.
CoprimeCheck shift_coprime_check(const RecOperator& L);

/// If L annihilates A(n), the result annihilates A(n) r^n.
RecOperator scale_operator(const RecOperator& L, const Rational& r);

}  // namespace holo
