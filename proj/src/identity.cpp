#include "holo/identity.hpp"

#include <algorithm>

#include "holo/error.hpp"
#include "holo/linalg.hpp"
#include "holo/reduction.hpp"

namespace holo {

std::string to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::RationalOverPi:
      return "rational_over_pi";
    case ConstantKind::SqrtAlphaOverPi:
      return "sqrt_alpha_over_pi";
    case ConstantKind::RationalConstant:
      return "rational_constant";
  }
  return "?";
}

ConstantKind constant_kind_from_string(const std::string& s) {
  if (s == "rational_over_pi") return ConstantKind::RationalOverPi;
  if (s == "sqrt_alpha_over_pi") return ConstantKind::SqrtAlphaOverPi;
  if (s == "rational_constant") return ConstantKind::RationalConstant;
  throw DomainError("unknown constant kind '" + s + "'");
}

std::string to_string(const SeriesConstant& c) {
  if (c.coeff == 0) return "0";
  if (c.kind == ConstantKind::RationalConstant) return holo::to_string(c.coeff);
  std::string num = c.coeff.get_num().get_str();
  const bool has_sqrt = c.kind == ConstantKind::SqrtAlphaOverPi && c.alpha != 1;
  if (has_sqrt) {
    const std::string root = "sqrt(" + c.alpha.get_str() + ")";
    if (num == "1")
      num = root;
    else if (num == "-1")
      num = "-" + root;
    else
      num += "*" + root;
  }
  if (c.coeff.get_den() == 1) return num + "/pi";
  return num + "/(" + c.coeff.get_den().get_str() + "*pi)";
}

void validate(const SeedIdentity& seed) {
  if (seed.weight.is_zero()) throw DomainError("seed weight must be nonzero");
  if (seed.alpha < 1) throw DomainError("alpha must be a positive integer");
  if (seed.kind != ConstantKind::SqrtAlphaOverPi && seed.alpha != 1)
    throw DomainError("alpha must be 1 unless kind is sqrt_alpha_over_pi");
}

namespace {

struct Candidate {
  std::vector<Rational> v;
  bool c_nonzero = false;
  std::size_t bits = 0;
};

}  // namespace

NewIdentity generate(const SeedIdentity& seed, const UniPoly& P, std::optional<int> qdeg_opt) {
  validate(seed);
  if (P.is_constant()) throw DomainError("P must be nonconstant");
  const RecOperator& L = seed.op;
  const DegreeData dd = degree_data(L);
  if (dd.degenerated) throw DomainError("generation over a degenerated operator is not supported");
  const int qdeg = qdeg_opt.value_or(dd.d - 1);
  if (qdeg < 0) throw DomainError("Q degree must be nonnegative (d - 1 = " + std::to_string(dd.d - 1) + ")");
  const int ell = P.degree().value();

  std::vector<UniPoly> columns;  // e_0..e_q, c, c_0..c_ell
  for (int i = 0; i <= qdeg; ++i) columns.push_back(P * UniPoly::monomial(static_cast<unsigned>(i)));
  columns.push_back(-seed.weight);
  for (int s = 0; s <= ell; ++s) columns.push_back(-adjoint_apply(L, UniPoly::monomial(static_cast<unsigned>(s))));

  int top = 0;
  for (const auto& col : columns)
    if (!col.is_zero()) top = std::max(top, col.degree().value());
  Matrix m(static_cast<std::size_t>(top + 1), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r <= top; ++r) m(static_cast<std::size_t>(r), c) = columns[c].coeff(r);

  const auto basis = nullspace(m);
  const std::size_t q_count = static_cast<std::size_t>(qdeg + 1);
  const std::size_t c_index = q_count;

  std::optional<Candidate> best;
  for (const auto& v : basis) {
    if (std::all_of(v.begin(), v.begin() + static_cast<long>(q_count), [](const Rational& x) { return x == 0; }))
      continue;
    UniPoly Q(std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(q_count)));
    const Rational t = 1 / primitive_form(P * Q).scale;
    Candidate cand{v, v[c_index] != 0, 0};
    for (const auto& x : v) cand.bits += bit_size(Rational(x * t));
    const bool better = !best || (cand.c_nonzero && !best->c_nonzero) ||
                        (cand.c_nonzero == best->c_nonzero && cand.bits < best->bits);
    if (better) best = std::move(cand);
  }
  if (!best) throw MathError("no solution with nonzero Q (nullspace dimension " + std::to_string(basis.size()) + ")");

  NewIdentity id{P, UniPoly{}, 0, {}, seed, UniPoly{}, 0, basis.size()};
  const auto& v = best->v;
  id.Q = UniPoly(std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(q_count)));
  id.c = v[c_index];
  for (int s = 0; s <= ell; ++s) {
    const Rational& cs = v[c_index + 1 + static_cast<std::size_t>(s)];
    if (cs != 0) id.cs[s] = cs;
  }
  const PrimitiveForm pf = primitive_form(P * id.Q);
  id.normalized_weight = pf.primitive;
  id.normalized_c = id.c / pf.scale;
  return id;
}

NewIdentity normalize_identity(const NewIdentity& id) {
  NewIdentity out = id;
  const PrimitiveForm pf = primitive_form(id.P * id.Q);
  if (pf.primitive.is_zero()) return out;
  const Rational t = 1 / pf.scale;
  out.Q *= t;
  out.c *= t;
  for (auto& [s, c] : out.cs) c *= t;
  out.normalized_weight = pf.primitive;
  out.normalized_c = out.c;
  return out;
}

bool check_membership(const NewIdentity& id) {
  const UniPoly diff = id.P * id.Q - id.seed.weight * id.c;
  const ReductionResult r = reduce(id.seed.op, diff);
  return r.residual.is_zero() && r.kept.empty();
}

std::string render(const NewIdentity& id) {
  return "sum_{n>=0} (" + to_string(id.normalized_weight, "n", PolyStyle::Compact) + ") * " + id.seed.label +
         " = " + to_string(id.constant());
}

std::string render(const SeedIdentity& seed) {
  return "sum_{n>=0} (" + to_string(seed.weight, "n", PolyStyle::Compact) + ") * " + seed.label + " = " +
         to_string(seed.constant());
}

}  // namespace holo
