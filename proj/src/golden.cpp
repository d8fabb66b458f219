#include "holo/golden.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "holo/error.hpp"
#include "holo/io.hpp"
#include "holo/parse.hpp"

namespace holo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Ctx {
  const Catalog& catalog;
  std::string dir;
  double millis = 0;

  template <class F>
  auto timed(F&& f) {
    const auto t0 = Clock::now();
    auto r = f();
    millis += ms_since(t0);
    return r;
  }
};

// Collects mismatches; a case passes when none were recorded.
struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

RecOperator case_operator(const Json& c, const Ctx& ctx) {
  if (c.contains("operator")) return operator_ref_from_json(c["operator"], ctx.dir);
  const Json& s = c.at("sequence");
  const SequenceDef def = resolve_sequence(ctx.catalog, s.at("name").get<std::string>(), s.value("alternating", false),
                                           s.contains("geom") ? rational_from_json(s["geom"]) : Rational(1));
  if (!def.known_operator) throw DomainError("sequence " + def.name + " has no operator");
  return *def.known_operator;
}

SequenceDef case_sequence(const Json& s, const Ctx& ctx) {
  return resolve_sequence(ctx.catalog, s.at("name").get<std::string>(), s.value("alternating", false),
                          s.contains("geom") ? rational_from_json(s["geom"]) : Rational(1));
}

UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-9, 9);
  const int d = deg(rng);
  std::vector<Rational> cs(static_cast<std::size_t>(d + 1));
  for (auto& x : cs) x = coef(rng);
  if (cs.back() == 0) cs.back() = 1;
  return UniPoly(std::move(cs));
}

std::string rationals(const std::map<int, Rational>& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    os << (first ? "" : ", ") << k << ": " << to_string(v);
    first = false;
  }
  os << "}";
  return os.str();
}

std::map<int, Rational> rational_map_from_json(const Json& j) {
  std::map<int, Rational> m;
  for (const auto& [k, v] : j.items()) m[std::stoi(k)] = rational_from_json(v);
  return m;
}

void run_adjoint(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const UniPoly p = parse_poly(c.at("p").get<std::string>(), L.var());
  const UniPoly want = parse_poly(c.at("expect").get<std::string>(), L.var());
  const UniPoly got = ctx.timed([&] { return adjoint_apply(L, p); });
  chk.expect(got == want, "L*(p) = " + to_string(got, L.var()) + ", expected " + to_string(want, L.var()));
}

void run_reduce(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const UniPoly Q = parse_poly(c.at("poly").get<std::string>(), L.var());
  const Json& e = c.at("expect");
  const ReductionResult r = ctx.timed([&] { return reduce(L, Q); });
  const auto cs = rational_map_from_json(e.at("cs"));
  const auto kept = rational_map_from_json(e.value("kept", Json::object()));
  const UniPoly residual = parse_poly(e.at("residual").get<std::string>(), L.var());
  chk.expect(r.cs == cs, "cs = " + rationals(r.cs) + ", expected " + rationals(cs));
  chk.expect(r.kept == kept, "kept = " + rationals(r.kept) + ", expected " + rationals(kept));
  chk.expect(r.residual == residual, "residual = " + to_string(r.residual, L.var()));
  chk.expect(reconstruct(L, r) == Q, "reconstruction mismatch");
}

void run_degree(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const DegreeData dd = ctx.timed([&] { return degree_data(L); });
  const Json& e = c.at("expect");
  chk.expect(dd.d == e.at("d").get<int>(), "d = " + std::to_string(dd.d));
  std::set<Integer> roots;
  for (const auto& r : e.at("R_L")) roots.insert(Integer(r.get<std::string>()));
  chk.expect(dd.degenerate_degrees == roots, "R_L mismatch");
  chk.expect(dd.degenerated == !roots.empty(), "degenerated flag mismatch");
  if (e.contains("f")) {
    const UniPoly f = parse_poly(e["f"].get<std::string>(), "s");
    chk.expect(dd.indicial == f, "f = " + to_string(dd.indicial, "s"));
  }
  if (e.contains("coprime")) {
    const CoprimeCheck cc = shift_coprime_check(L);
    chk.expect(cc.coprime == e["coprime"].get<bool>(), "coprime check mismatch");
  }
}

void run_generate(const Json& c, Ctx& ctx, Check& chk) {
  const SeedIdentity seed = load_seed(ctx.dir + "/" + c.at("seed").get<std::string>(), &ctx.catalog);
  const std::string& var = seed.op.var();
  const UniPoly P = parse_poly(c.at("P").get<std::string>(), var);
  const NewIdentity id = ctx.timed([&] { return generate(seed, P); });
  const Json& e = c.at("expect");
  const UniPoly want = parse_poly(e.at("weight").get<std::string>(), var);
  chk.expect(id.normalized_weight == want, "weight = " + to_string(id.normalized_weight, var));
  chk.expect(to_string(id.constant()) == e.at("constant").get<std::string>(),
             "constant = " + to_string(id.constant()));
  if (e.contains("leading"))
    chk.expect(id.normalized_weight.leading() == Rational(Integer(e["leading"].get<std::string>())),
               "leading coefficient = " + to_string(id.normalized_weight.leading()));
  if (e.contains("cs_over_c")) {
    const auto want_cs = rational_map_from_json(e["cs_over_c"]);
    const int ell = P.degree().value();
    for (int s = 0; s <= ell; ++s) {
      const Rational got = id.cs.contains(s) ? Rational(id.cs.at(s) / id.c) : Rational(0);
      const Rational exp = want_cs.contains(s) ? want_cs.at(s) : Rational(0);
      chk.expect(got == exp, "c_" + std::to_string(s) + "/c = " + to_string(got) + ", expected " + to_string(exp));
    }
  }
  chk.expect(check_membership(id), "membership check through reduce failed");
}

void run_telescope(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const SequenceDef def = case_sequence(c.at("sequence"), ctx);
  const Json& chkspec = c.at("check");
  const long upto = chkspec.at("upto").get<long>();
  const std::vector<Rational> F = seq_terms(def, upto);
  const std::span<const Rational> init(F.data(), static_cast<std::size_t>(L.order()));
  const SumClosedForm form = ctx.timed([&] { return normalize_window(telescoped_sum(L, init), L); });
  const Json& e = c.at("expect");
  chk.expect(form.window_normalized, "window normalization failed: " + form.note);
  chk.expect(form.constant == rational_map_from_json(e.at("constant")), "constant = " + rationals(form.constant));
  chk.expect(form.valid_from == e.at("valid_from").get<int>(), "valid_from = " + std::to_string(form.valid_from));
  std::map<int, ShiftCombination> want;
  for (const auto& b : e.at("boundary"))
    for (const auto& [j, poly] : b.at("coeffs").items())
      want[b.at("offset").get<int>()][std::stoi(j)] = parse_poly(poly.get<std::string>(), L.var());
  std::map<int, ShiftCombination> got;
  for (const auto& t : form.boundary)
    for (const auto& [j, poly] : t.coeff)
      if (!poly.is_zero()) got[t.offset][j] = poly;
  chk.expect(got == want, "boundary mismatch: " + render(form));
  if (e.contains("rendered"))
    chk.expect(render(form) == e["rendered"].get<std::string>(), "rendered as " + render(form));

  std::vector<UniPoly> ps;
  for (const auto& p : chkspec.at("p")) ps.push_back(parse_poly(p.get<std::string>(), L.var()));
  std::mt19937_64 rng(chkspec.value("seed", 1UL));
  for (int i = 0; i < chkspec.value("random_degree4", 0); ++i) {
    UniPoly p = random_poly(rng, 4);
    while (p.degree().value() != 4) p = random_poly(rng, 4);
    ps.push_back(p);
  }
  ctx.timed([&] {
    for (const auto& p : ps) {
      const ConcreteClosedForm cf = instantiate(form, p);
      const UniPoly w = adjoint_apply(L, p);
      Rational lhs = 0;
      for (long n = 0; n <= upto; ++n) {
        if (n >= cf.valid_from && lhs != evaluate(cf, n, F)) {
          chk.expect(false, "closed form fails at n=" + std::to_string(n) + " for p=" + to_string(p, L.var()));
          break;
        }
        if (n < upto) lhs += w(Rational(n)) * F[static_cast<std::size_t>(n)];
      }
    }
    return 0;
  });
}

std::string claim_summary(const ClaimReport& r) {
  std::string s = std::to_string(r.points.size()) + " points";
  if (r.first_failure) s += ", first failure at n=" + std::to_string(*r.first_failure);
  return s;
}

void run_claim(const Json& c, Ctx& ctx, Check& chk) {
  const ClaimSpec spec = load_claim(ctx.dir + "/" + c.at("claim").get<std::string>());
  const SequenceDef def = resolve_sequence(ctx.catalog, spec.claim.sequence, spec.claim.alternating, spec.claim.geom);
  const std::vector<Rational> F = seq_terms(def, spec.hi - 1 + spec.claim.upper_offset);
  const ClaimReport r = ctx.timed([&] { return check_claim(spec.claim, F, spec.lo, spec.hi, spec.primes_only); });
  chk.expect(r.pass && !r.points.empty(), spec.claim.to_string() + ": " + claim_summary(r));
}

void run_adjoint_family(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const SequenceDef def = case_sequence(c.at("sequence"), ctx);
  const long lo = c.at("range").at("lo").get<long>();
  const long hi = c.at("range").at("hi").get<long>();
  const std::vector<Rational> F = seq_terms(def, hi);
  CongruenceClaim claim;
  claim.name = c.value("id", std::string());
  claim.var = "n";
  const Json& m = c.at("modulus");
  if (m.contains("const")) claim.modulus_const = Integer(m["const"].get<long>());
  claim.modulus_poly = parse_poly(m.at("poly").get<std::string>(), "n");
  std::mt19937_64 rng(c.value("seed", 1UL));
  const int count = c.at("count").get<int>();
  const int max_degree = c.at("max_degree").get<int>();
  ctx.timed([&] {
    for (int i = 0; i < count; ++i) {
      const UniPoly p = random_poly(rng, max_degree);
      claim.weight = adjoint_apply(L, p);
      const ClaimReport r = check_claim(claim, F, lo, hi, false);
      if (!r.pass) {
        chk.expect(false, "p=" + to_string(p, L.var()) + ": " + claim_summary(r));
        break;
      }
    }
    return 0;
  });
}

void run_family(const Json& c, Ctx& ctx, Check& chk) {
  const RecOperator L = case_operator(c, ctx);
  const SequenceDef def = case_sequence(c.at("sequence"), ctx);
  const long upto = c.at("upto").get<long>();
  const std::vector<Rational> F = seq_terms(def, upto);
  const UniPoly p = parse_poly(c.at("p").get<std::string>(), L.var());
  const FamilyClaim fam = ctx.timed([&] { return derive_family(L, F, p); });
  const Json& e = c.at("expect");
  chk.expect(fam.poly_factor == parse_poly(e.at("poly_factor").get<std::string>(), "n"),
             "g = " + to_string(fam.poly_factor, "n"));
  chk.expect(fam.integer_factor.get_str() == e.at("integer_factor").get<std::string>(),
             "integer factor = " + fam.integer_factor.get_str());
  const ClaimReport r = ctx.timed([&] { return check_claim(fam.claim, F, 1, upto, false); });
  chk.expect(r.pass, fam.claim.to_string() + ": " + claim_summary(r));
}

void run_facts(const Json& c, Ctx& ctx, Check& chk) {
  const long lo = c.at("range").at("lo").get<long>();
  const long hi = c.at("range").at("hi").get<long>();
  const std::vector<Rational> f = seq_terms(ctx.catalog.get("franel"), hi);
  const auto facts = ctx.timed([&] { return known_fact_checks(f, lo, hi); });
  chk.expect(!facts.empty(), "no primes in range");
  for (const auto& r : facts) chk.expect(r.pass, r.name + " at p=" + std::to_string(r.p) + ": " + r.detail);
}

void run_series(const Json& c, Ctx& ctx, Check& chk) {
  const SeedIdentity seed = load_seed(ctx.dir + "/" + c.at("seed").get<std::string>(), &ctx.catalog);
  UniPoly weight = seed.weight;
  SeriesConstant target = seed.constant();
  if (c.contains("weight")) weight = parse_poly(c["weight"].get<std::string>(), seed.op.var());
  if (c.contains("constant")) {
    const Json& k = c["constant"];
    target.coeff = rational_from_json(k.at("coeff"));
    target.kind = constant_kind_from_string(k.at("kind").get<std::string>());
    target.alpha = k.contains("alpha") ? Integer(k["alpha"].get<long>()) : Integer(1);
  }
  const long N = c.at("N").get<long>();
  const bool accelerate = c.value("accelerate", false);
  const Rational tol(1, ipow(Integer(10), c.at("tolerance_digits").get<unsigned long>()));
  const SequenceDef def = resolve_sequence(ctx.catalog, seed.sequence, seed.alternating, seed.geom);
  const SeriesReport rep = ctx.timed([&] {
    const std::vector<Rational> F = seq_terms(def, N);
    const PrecisionContext pc(c.value("digits", 100U), {target.alpha.get_ui()});
    return verify_series(weight, target, F, N, pc, accelerate, tol);
  });
  chk.expect(rep.pass, "residual " + rep.abs_residual + " vs " + rep.target + (rep.note.empty() ? "" : " (" + rep.note + ")"));
}

void run_guess(const Json& c, Ctx& ctx, Check& chk) {
  const SequenceDef def = case_sequence(c.at("sequence"), ctx);
  const RecOperator want = operator_ref_from_json(c.at("expect"), ctx.dir);
  const std::vector<Rational> F = seq_terms(def, c.at("terms").get<long>() - 1);
  const auto got = ctx.timed([&] { return guess_recurrence(F, c.at("J").get<int>(), c.at("D").get<int>(), want.var()); });
  chk.expect(got.has_value(), "no recurrence found");
  if (got) chk.expect(*got == want, "guessed " + to_string(*got));
}

const std::map<std::string, std::function<void(const Json&, Ctx&, Check&)>>& runners() {
  static const std::map<std::string, std::function<void(const Json&, Ctx&, Check&)>> table = {
      {"adjoint", run_adjoint},     {"reduce", run_reduce},         {"degree", run_degree},
      {"generate", run_generate},   {"telescope", run_telescope},   {"claim", run_claim},
      {"adjoint_family", run_adjoint_family}, {"family", run_family}, {"facts", run_facts},
      {"series", run_series},       {"guess", run_guess},
  };
  return table;
}

}  // namespace

GoldenSuite run_golden_file(const std::string& path, const Catalog& catalog) {
  GoldenSuite suite;
  const std::string file = std::filesystem::path(path).filename().string();
  Json doc;
  try {
    doc = load_json_file(path);
  } catch (const std::exception& e) {
    suite.results.push_back({file, "<file>", 0, false, e.what(), 0});
    return suite;
  }
  const int criterion = doc.value("criterion", 0);
  if (doc.contains("max_total_ms")) suite.budget_ms[criterion] = doc["max_total_ms"].get<double>();
  for (const auto& c : doc.value("cases", Json::array())) {
    GoldenResult res;
    res.file = file;
    res.id = c.value("id", std::string("?"));
    res.criterion = c.value("criterion", criterion);
    Ctx ctx{catalog, dirname_of(path)};
    Check chk;
    try {
      const std::string kind = c.at("kind").get<std::string>();
      const auto it = runners().find(kind);
      if (it == runners().end()) throw DomainError("unknown golden kind '" + kind + "'");
      it->second(c, ctx, chk);
      if (c.contains("max_ms") && ctx.millis > c["max_ms"].get<double>())
        chk.expect(false, "took " + std::to_string(ctx.millis) + " ms");
    } catch (const std::exception& e) {
      chk.expect(false, std::string("error: ") + e.what());
    }
    res.millis = ctx.millis;
    res.pass = chk.problems.empty();
    for (const auto& p : chk.problems) res.detail += (res.detail.empty() ? "" : "; ") + p;
    suite.results.push_back(std::move(res));
  }
  return suite;
}

GoldenSuite run_golden_dir(const std::string& dir, const Catalog& catalog) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  GoldenSuite all;
  for (const auto& f : files) {
    GoldenSuite one = run_golden_file(f, catalog);
    all.results.insert(all.results.end(), one.results.begin(), one.results.end());
    all.budget_ms.insert(one.budget_ms.begin(), one.budget_ms.end());
  }
  return all;
}

bool within_budget(const GoldenSuite& suite, int criterion, double* total_ms) {
  double total = 0;
  for (const auto& r : suite.results)
    if (r.criterion == criterion) total += r.millis;
  if (total_ms) *total_ms = total;
  const auto it = suite.budget_ms.find(criterion);
  return it == suite.budget_ms.end() || total <= it->second;
}

}  // namespace holo
