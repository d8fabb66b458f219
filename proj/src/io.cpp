#include "holo/io.hpp"

#include <fstream>
#include <sstream>

#include "holo/error.hpp"
#include "holo/parse.hpp"

namespace holo {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what(), e.byte);
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational (integer or \"p/q\" string)", 0);
}

RecOperator operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("operator needs a \"coeffs\" array", 0);
  const std::string var = j.value("var", std::string("n"));
  std::vector<UniPoly> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_number_integer())
      coeffs.push_back(UniPoly::constant(Rational(Integer(c.get<long>()))));
    else if (c.is_string())
      coeffs.push_back(parse_poly(c.get<std::string>(), var));
    else
      throw ParseError("operator coefficient must be a polynomial string", 0);
  }
  return RecOperator(std::move(coeffs), var);
}

Json operator_to_json(const RecOperator& L) {
  Json j;
  j["var"] = L.var();
  Json arr = Json::array();
  for (const auto& a : L.coeffs()) arr.push_back(to_string(a, L.var()));
  j["coeffs"] = arr;
  return j;
}

namespace {

Json rational_map(const std::map<int, Rational>& m) {
  Json j = Json::object();
  for (const auto& [s, c] : m) j[std::to_string(s)] = to_string(c);
  return j;
}

}  // namespace

Json reduction_to_json(const ReductionResult& r, const std::string& var) {
  Json j;
  j["cs"] = rational_map(r.cs);
  j["kept"] = rational_map(r.kept);
  j["residual"] = to_string(r.residual, var);
  return j;
}

Json degree_data_to_json(const DegreeData& dd, const std::string& var) {
  Json j;
  Json b = Json::array();
  for (const auto& bk : dd.b) b.push_back(to_string(bk, var));
  j["b"] = b;
  j["d"] = dd.d;
  j["f"] = to_string(dd.indicial, "s");
  Json roots = Json::array();
  for (const auto& r : dd.degenerate_degrees) roots.push_back(r.get_str());
  j["R_L"] = roots;
  j["degenerated"] = dd.degenerated;
  return j;
}

Json closed_form_to_json(const SumClosedForm& form, const std::string& var) {
  Json j;
  j["constant"] = rational_map(form.constant);
  Json b = Json::array();
  for (const auto& t : form.boundary) {
    Json term;
    term["offset"] = t.offset;
    Json coeff = Json::object();
    for (const auto& [shift, c] : t.coeff) coeff[std::to_string(shift)] = to_string(c, var);
    term["p_shift_coeffs"] = coeff;
    b.push_back(term);
  }
  j["boundary"] = b;
  j["valid_from"] = form.valid_from;
  j["window_normalized"] = form.window_normalized;
  if (!form.note.empty()) j["note"] = form.note;
  j["rendered"] = render(form, var);
  return j;
}

namespace {

LinearForm linear_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("linear form must be [n, k, const]", 0);
  return {j[0].get<long>(), j[1].get<long>(), j[2].get<long>()};
}

}  // namespace

SequenceDef sequence_from_json(const Json& j) {
  SequenceDef def;
  def.name = j.at("name").get<std::string>();
  def.label = j.value("label", def.name + "(n)");
  def.summed = j.value("summed", true);
  def.alternating = j.value("alternating", false);
  if (j.contains("geom")) def.geom = rational_from_json(j["geom"]);
  for (const auto& f : j.at("factors")) {
    BinomialFactor bf;
    bf.top = linear_from_json(f.at("top"));
    bf.bottom = linear_from_json(f.at("bottom"));
    bf.power = f.value("power", 1U);
    def.factors.push_back(bf);
  }
  if (j.contains("operator")) {
    def.base_operator = operator_from_json(j["operator"]);
    const Rational r = def.alternating ? Rational(-def.geom) : def.geom;
    def.known_operator = scale_operator(*def.base_operator, r);
  }
  return def;
}

RecOperator operator_ref_from_json(const Json& j, const std::string& base_dir) {
  if (j.is_string()) return operator_from_json(load_json_file(base_dir + "/" + j.get<std::string>()));
  return operator_from_json(j);
}

std::string dirname_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return slash == 0 ? "/" : path.substr(0, slash);
}

SequenceDef resolve_sequence(const Catalog& catalog, const std::string& name, bool alternating, const Rational& geom) {
  return weighted(catalog.get(name), alternating, geom);
}

namespace {

void read_sequence_ref(const Json& j, std::string& name, bool& alternating, Rational& geom) {
  if (!j.is_object()) throw ParseError("\"sequence\" must be an object", 0);
  name = j.at("name").get<std::string>();
  alternating = j.value("alternating", false);
  geom = j.contains("geom") ? rational_from_json(j["geom"]) : Rational(1);
}

template <class F>
auto with_context(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what(), 0);
  }
}

}  // namespace

SeedIdentity seed_from_json(const Json& j, const std::string& base_dir, const Catalog* catalog) {
  return with_context("seed", [&] {
    SeedIdentity seed{
        j.value("name", std::string("seed")), RecOperator({UniPoly::constant(1)}), UniPoly{}, 0, 1, {}, {}, {}, 1, {}};
    if (j.contains("sequence")) read_sequence_ref(j["sequence"], seed.sequence, seed.alternating, seed.geom);
    if (j.contains("operator")) {
      seed.op = operator_ref_from_json(j["operator"], base_dir);
    } else {
      if (!catalog || seed.sequence.empty()) throw ParseError("seed has no operator and no catalog sequence", 0);
      const SequenceDef def = resolve_sequence(*catalog, seed.sequence, seed.alternating, seed.geom);
      if (!def.known_operator) throw ParseError("catalog sequence " + seed.sequence + " has no operator", 0);
      seed.op = *def.known_operator;
    }
    seed.weight = parse_poly(j.at("weight").get<std::string>(), seed.op.var());
    seed.lambda = rational_from_json(j.at("lambda"));
    if (j.contains("alpha")) seed.alpha = Integer(j["alpha"].get<long>());
    seed.kind = constant_kind_from_string(j.value("kind", std::string("rational_over_pi")));
    seed.label = j.value("label", std::string("F(n)"));
    validate(seed);
    return seed;
  });
}

SeedIdentity load_seed(const std::string& path, const Catalog* catalog) {
  return seed_from_json(load_json_file(path), dirname_of(path), catalog);
}

Json identity_to_json(const NewIdentity& id) {
  const std::string& var = id.seed.op.var();
  Json j;
  j["seed"] = id.seed.name;
  j["P"] = to_string(id.P, var);
  j["Q"] = to_string(id.Q, var);
  j["c"] = to_string(id.c);
  j["cs"] = rational_map(id.cs);
  j["weight"] = to_string(id.normalized_weight, var);
  j["constant"] = to_string(id.constant());
  j["nullspace_dim"] = id.nullspace_dim;
  j["rendered"] = render(id);
  return j;
}

ClaimSpec claim_from_json(const Json& j, const std::string& base_dir) {
  return with_context("claim", [&] {
    ClaimSpec spec;
    CongruenceClaim& c = spec.claim;
    c.name = j.value("name", std::string("claim"));
    c.var = j.value("var", std::string("n"));
    read_sequence_ref(j.at("sequence"), c.sequence, c.alternating, c.geom);
    const std::string wvar = j.value("weight_var", std::string("k"));
    if (j.contains("weight")) {
      c.weight = parse_poly(j["weight"].get<std::string>(), wvar);
    } else if (j.contains("adjoint_of")) {
      const Json& a = j["adjoint_of"];
      const RecOperator L = operator_ref_from_json(a.at("operator"), base_dir);
      c.weight = adjoint_apply(L, parse_poly(a.at("p").get<std::string>(), L.var()));
    } else {
      throw ParseError("claim needs \"weight\" or \"adjoint_of\"", 0);
    }
    if (j.contains("scale")) c.scale = rational_from_json(j["scale"]);
    c.lower = j.value("lower", 0L);
    c.upper_offset = j.value("upper_offset", 0L);
    const Json& m = j.at("modulus");
    if (m.contains("prime_power")) {
      c.modulus_kind = ModulusKind::PrimePower;
      c.prime_exponent = m["prime_power"].get<unsigned>();
    } else {
      c.modulus_kind = ModulusKind::Polynomial;
      if (m.contains("const")) c.modulus_const = Integer(m["const"].get<long>());
      if (m.contains("poly")) c.modulus_poly = parse_poly(m["poly"].get<std::string>(), c.var);
      if (c.modulus_const <= 0) throw ParseError("modulus constant must be positive", 0);
    }
    if (j.contains("rhs")) {
      const Json& r = j["rhs"];
      c.rhs.coeff = r.contains("coeff") ? rational_from_json(r["coeff"]) : Rational(0);
      c.rhs.legendre3 = r.value("legendre3", false);
      c.rhs.p_power = r.value("p_power", 0U);
      c.rhs.two_pow_minus_one_power = r.value("two_pow_minus_one_power", 0U);
    }
    if (j.contains("range")) {
      const Json& r = j["range"];
      spec.lo = r.value("lo", spec.lo);
      spec.hi = r.value("hi", spec.hi);
      spec.primes_only = r.value("primes_only", false);
    }
    if (spec.lo > spec.hi) throw ParseError("claim range is empty", 0);
    return spec;
  });
}

ClaimSpec load_claim(const std::string& path) { return claim_from_json(load_json_file(path), dirname_of(path)); }

Json point_to_json(const PointRecord& r) {
  Json j;
  j["n"] = r.n;
  j["lhs_mod"] = r.lhs_mod.get_str();
  j["rhs_mod"] = r.rhs_mod.get_str();
  j["pass"] = r.pass;
  return j;
}

Json series_report_to_json(const SeriesReport& r) {
  Json j;
  j["target"] = r.target;
  j["partial_terms"] = r.partial_terms;
  j["abs_residual"] = r.abs_residual;
  j["pass"] = r.pass;
  j["accelerated"] = r.accelerated;
  j["last_term"] = r.last_term;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json family_to_json(const FamilyClaim& f) {
  const std::string& var = f.claim.var;
  Json j;
  j["weight"] = to_string(f.weight, var);
  j["closed_form"] = closed_form_to_json(f.symbolic, var);
  j["constant"] = to_string(f.concrete.constant);
  j["poly_factor"] = to_string(f.poly_factor, var);
  j["integer_factor"] = f.integer_factor.get_str();
  j["integer_factor_checked_up_to"] = f.checked_up_to;
  j["claim"] = f.claim.to_string();
  return j;
}

}  // namespace holo
