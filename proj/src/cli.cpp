#include "holo/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holo/error.hpp"
#include "holo/golden.hpp"
#include "holo/io.hpp"
#include "holo/parse.hpp"

namespace holo {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string operator_file;
  std::string seed_file;
  std::string claim_file;
  std::string data_dir;
  std::string sequence;
  std::string poly;
  std::string P;
  std::string weight;
  std::string geom = "1";
  bool alternating = false;
  bool json = false;
  bool exhaustive = false;
  bool accelerate = false;
  bool family = false;
  bool recurrence = false;
  std::optional<int> qdeg;
  std::optional<long> lo;
  std::optional<long> hi;
  int order = 2;
  int degree = 2;
  long N = 20;
  long terms = 0;
  std::optional<unsigned> digits;
  unsigned tolerance_digits = 30;
};

unsigned default_digits() {
  if (const char* env = std::getenv("HOLOREDUCE_DIGITS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("HOLOREDUCE_DIGITS is not a number: ") + env);
    }
  }
  return 100;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int run() {
    const std::string& c = cfg_.command;
    if (c == "adjoint") return adjoint();
    if (c == "analyze") return analyze();
    if (c == "reduce") return reduce_cmd();
    if (c == "telescope") return telescope();
    if (c == "generate") return generate_cmd();
    if (c == "guess") return guess();
    if (c == "seq") return seq();
    if (c == "verify-series") return verify_series_cmd();
    if (c == "verify-congruence") return verify_congruence();
    if (c == "selftest") return selftest();
    throw UsageError("a subcommand is required");
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::optional<Catalog> catalog_;

  const Catalog& catalog() {
    if (!catalog_) catalog_ = Catalog::load(data_dir() + "/catalog.json");
    return *catalog_;
  }
  std::string data_dir() const { return cfg_.data_dir.empty() ? default_data_dir() : cfg_.data_dir; }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  SequenceDef sequence() {
    if (cfg_.sequence.empty()) throw UsageError("--sequence is required");
    return resolve_sequence(catalog(), cfg_.sequence, cfg_.alternating, parse_rational(cfg_.geom));
  }

  RecOperator op() {
    if (!cfg_.operator_file.empty()) return operator_from_json(load_json_file(cfg_.operator_file));
    if (!cfg_.sequence.empty()) {
      const SequenceDef def = sequence();
      if (!def.known_operator) throw UsageError("sequence " + def.name + " has no known operator");
      return *def.known_operator;
    }
    throw UsageError("--operator or --sequence is required");
  }

  unsigned digits() const {
    const unsigned d = cfg_.digits.value_or(default_digits());
    if (d < 20) throw UsageError("precision must be at least 20 digits");
    return d;
  }

  int adjoint() {
    const RecOperator L = op();
    const UniPoly p = parse_poly(cfg_.poly, L.var());
    const UniPoly q = adjoint_apply(L, p);
    const Certificate cert = certificate(L, p);
    if (cfg_.json) {
      Json j;
      j["operator"] = operator_to_json(L);
      j["p"] = to_string(p, L.var());
      j["adjoint"] = to_string(q, L.var());
      Json u = Json::array();
      for (const auto& ui : cert.u) u.push_back(to_string(ui, L.var()));
      j["certificate"] = u;
      emit(j);
    } else {
      out_ << "L = " << to_string(L) << "\n";
      out_ << "L*(" << to_string(p, L.var()) << ") = " << to_string(q, L.var()) << "\n";
      for (std::size_t i = 0; i < cert.u.size(); ++i)
        out_ << "u_" << i << " = " << to_string(cert.u[i], L.var()) << "\n";
    }
    return kExitOk;
  }

  int analyze() {
    const RecOperator L = op();
    const DegreeData dd = degree_data(L);
    std::optional<CoprimeCheck> cc;
    std::string coprime_note;
    try {
      cc = shift_coprime_check(L);
    } catch (const InapplicableError& e) {
      coprime_note = e.what();
    }
    if (cfg_.json) {
      Json j = degree_data_to_json(dd, L.var());
      if (cc) {
        j["coprime"] = cc->coprime;
        Json v = Json::array();
        for (const auto& i : cc->violations) v.push_back(i.get_str());
        j["coprime_violations"] = v;
      } else {
        j["coprime"] = nullptr;
        j["coprime_note"] = coprime_note;
      }
      emit(j);
      return kExitOk;
    }
    out_ << "L = " << to_string(L) << "\n";
    for (std::size_t k = 0; k < dd.b.size(); ++k) out_ << "b_" << k << " = " << to_string(dd.b[k], L.var()) << "\n";
    out_ << "d = " << dd.d << "\n";
    out_ << "f(s) = " << to_string(dd.indicial, "s") << "\n";
    out_ << "R_L = ";
    if (dd.degenerate_degrees.empty()) {
      out_ << "{} (empty)";
    } else {
      out_ << "{";
      bool first = true;
      for (const auto& r : dd.degenerate_degrees) {
        out_ << (first ? "" : ", ") << r.get_str();
        first = false;
      }
      out_ << "}";
    }
    out_ << "\n" << (dd.degenerated ? "degenerated" : "not degenerated") << "\n";
    if (cc) {
      out_ << "coprime check: " << (cc->coprime ? "pass" : "fail");
      for (const auto& i : cc->violations) out_ << " [shift " << i.get_str() << "]";
      out_ << "\n";
    } else {
      out_ << "coprime check: inapplicable (" << coprime_note << ")\n";
    }
    return kExitOk;
  }

  int reduce_cmd() {
    const RecOperator L = op();
    const UniPoly Q = parse_poly(cfg_.poly, L.var());
    const ReductionResult r = reduce(L, Q);
    if (cfg_.json) {
      emit(reduction_to_json(r, L.var()));
      return kExitOk;
    }
    out_ << to_string(Q, L.var()) << " =";
    bool any = false;
    for (const auto& [s, c] : r.cs) {
      out_ << (any ? " + " : " ") << "(" << to_string(c) << ")*L*(" << L.var() << "^" << s << ")";
      any = true;
    }
    for (const auto& [s, c] : r.kept) {
      out_ << (any ? " + " : " ") << "(" << to_string(c) << ")*" << L.var() << "^(d+" << s << ")";
      any = true;
    }
    out_ << (any ? " + " : " ") << "(" << to_string(r.residual, L.var()) << ")\n";
    return kExitOk;
  }

  int telescope() {
    const RecOperator L = op();
    const SequenceDef def = sequence();
    const long upto = cfg_.hi.value_or(200);
    const std::vector<Rational> F = seq_terms(def, std::max<long>(upto, L.order()));
    const std::span<const Rational> init(F.data(), static_cast<std::size_t>(L.order()));
    if (cfg_.family) {
      const UniPoly p = parse_poly(cfg_.poly.empty() ? "1" : cfg_.poly, L.var());
      const FamilyClaim fam = derive_family(L, F, p);
      const ClaimReport r = check_claim(fam.claim, F, cfg_.lo.value_or(1), upto, false, cfg_.exhaustive);
      if (cfg_.json) {
        Json j = family_to_json(fam);
        j["checked"] = Json{{"lo", cfg_.lo.value_or(1)}, {"hi", upto}, {"pass", r.pass}};
        emit(j);
      } else {
        out_ << "weight: " << to_string(fam.weight, L.var()) << "\n";
        out_ << "closed form: sum_{k<n} L*(p)(k) F(k) = " << render(fam.symbolic) << "\n";
        out_ << "claim: " << fam.claim.to_string() << "\n";
        out_ << "integer factor observed for n <= " << fam.checked_up_to << "\n";
        out_ << "checked n <= " << upto << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      }
      return r.pass ? kExitOk : kExitMathFailure;
    }
    const SumClosedForm raw = telescoped_sum(L, init);
    const SumClosedForm form = L.order() == 2 ? normalize_window(raw, L) : raw;
    // Exact check against the direct sum for the given p (default p = 1).
    const UniPoly p = parse_poly(cfg_.poly.empty() ? "1" : cfg_.poly, L.var());
    const ConcreteClosedForm cf = instantiate(form, p);
    const UniPoly w = adjoint_apply(L, p);
    Rational lhs = 0;
    std::optional<long> bad;
    for (long n = 0; n <= upto; ++n) {
      if (n >= cf.valid_from && lhs != evaluate(cf, n, F)) {
        bad = n;
        break;
      }
      lhs += w(Rational(n)) * F[static_cast<std::size_t>(n)];
    }
    if (cfg_.json) {
      Json j;
      j["raw"] = closed_form_to_json(raw, L.var());
      j["normalized"] = closed_form_to_json(form, L.var());
      j["p"] = to_string(p, L.var());
      j["checked_up_to"] = upto;
      j["pass"] = !bad;
      emit(j);
    } else {
      out_ << "sum_{k=0}^{n-1} L*(p)(k) F(k) = " << render(raw) << "   (n >= " << raw.valid_from << ")\n";
      if (form.window_normalized)
        out_ << "window-normalized: " << render(form) << "   (n >= " << form.valid_from << ")\n";
      else if (!form.note.empty())
        out_ << "window normalization skipped: " << form.note << "\n";
      out_ << "p = " << to_string(p, L.var()) << ", checked n <= " << upto << ": "
           << (bad ? "FAIL at n=" + std::to_string(*bad) : std::string("pass")) << "\n";
    }
    return bad ? kExitMathFailure : kExitOk;
  }

  SeedIdentity seed() {
    if (cfg_.seed_file.empty()) throw UsageError("--seed is required");
    return load_seed(cfg_.seed_file, &catalog());
  }

  int generate_cmd() {
    const SeedIdentity s = seed();
    const UniPoly P = parse_poly(cfg_.P, s.op.var());
    const NewIdentity id = generate(s, P, cfg_.qdeg);
    const bool member = check_membership(id);
    if (cfg_.json) {
      Json j = identity_to_json(id);
      j["membership_check"] = member;
      emit(j);
    } else {
      out_ << "seed: " << render(s) << "\n";
      out_ << "P = " << to_string(id.P, s.op.var()) << ", Q = " << to_string(id.Q, s.op.var())
           << ", c = " << to_string(id.c) << "\n";
      for (const auto& [k, v] : id.cs) out_ << "c_" << k << " = " << to_string(v) << "\n";
      out_ << render(id) << "\n";
      out_ << "membership check: " << (member ? "pass" : "FAIL") << "\n";
    }
    return member ? kExitOk : kExitMathFailure;
  }

  int guess() {
    const SequenceDef def = sequence();
    const long needed = static_cast<long>((cfg_.order + 1) * (cfg_.degree + 1) + cfg_.order + kGuessMargin);
    const long count = cfg_.terms > 0 ? cfg_.terms : needed + 10;
    const std::vector<Rational> F = seq_terms(def, count - 1);
    const auto L = guess_recurrence(F, cfg_.order, cfg_.degree);
    if (cfg_.json) {
      Json j;
      j["sequence"] = def.name;
      j["terms"] = count;
      j["operator"] = L ? operator_to_json(*L) : Json(nullptr);
      emit(j);
    } else {
      out_ << (L ? to_string(*L) : std::string("no recurrence found")) << "\n";
    }
    return L ? kExitOk : kExitMathFailure;
  }

  int seq() {
    const SequenceDef def = sequence();
    std::vector<Rational> F;
    if (cfg_.recurrence) {
      if (!def.known_operator) throw UsageError("sequence " + def.name + " has no known operator");
      const auto init = seq_terms(def, def.known_operator->order() - 1);
      F = seq_terms_rec(*def.known_operator, init, cfg_.N);
    } else {
      F = seq_terms(def, cfg_.N);
    }
    for (std::size_t n = 0; n < F.size(); ++n) {
      if (cfg_.json)
        emit(Json{{"n", n}, {"value", to_string(F[n])}});
      else
        out_ << n << " " << to_string(F[n]) << "\n";
    }
    return kExitOk;
  }

  int verify_series_cmd() {
    const SeedIdentity s = seed();
    UniPoly weight = s.weight;
    SeriesConstant constant = s.constant();
    if (!cfg_.P.empty()) {
      const NewIdentity id = generate(s, parse_poly(cfg_.P, s.op.var()), cfg_.qdeg);
      weight = id.normalized_weight;
      constant = id.constant();
    }
    if (cfg_.N < 1) throw UsageError("-N must be at least 1");
    const SequenceDef def = resolve_sequence(catalog(), s.sequence, s.alternating, s.geom);
    const std::vector<Rational> F = seq_terms(def, cfg_.N);
    const PrecisionContext ctx(digits(), {constant.alpha.get_ui()});
    const Rational tol(1, ipow(Integer(10), cfg_.tolerance_digits));
    const SeriesReport rep = verify_series(weight, constant, F, cfg_.N, ctx, cfg_.accelerate, tol);
    if (cfg_.json) {
      emit(series_report_to_json(rep));
    } else {
      out_ << "sum_{n=0}^{" << cfg_.N << "} (" << to_string(weight, s.op.var(), PolyStyle::Compact) << ") * "
           << s.label << (rep.accelerated ? " [accelerated]" : "") << "\n";
      out_ << "target " << rep.target << ", |S - target| = " << rep.abs_residual << ", tolerance 1e-"
           << cfg_.tolerance_digits << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
      if (!rep.note.empty()) out_ << "note: " << rep.note << "\n";
    }
    return rep.pass ? kExitOk : kExitMathFailure;
  }

  int verify_congruence() {
    if (cfg_.claim_file.empty()) throw UsageError("--claim is required");
    const ClaimSpec spec = load_claim(cfg_.claim_file);
    const long lo = cfg_.lo.value_or(spec.lo);
    const long hi = cfg_.hi.value_or(spec.hi);
    if (lo > hi) throw UsageError("empty range");
    const CongruenceClaim& c = spec.claim;
    const SequenceDef def = resolve_sequence(catalog(), c.sequence, c.alternating, c.geom);
    const std::vector<Rational> F = seq_terms(def, std::max<long>(0, hi - 1 + c.upper_offset));
    const ClaimReport r = check_claim(c, F, lo, hi, spec.primes_only, cfg_.exhaustive);
    if (cfg_.json) {
      for (const auto& pt : r.points) emit(point_to_json(pt));
    } else {
      out_ << c.name << ": " << c.to_string() << "\n";
      out_ << (spec.primes_only ? "primes" : "n") << " in [" << lo << ", " << hi << "]: " << r.points.size()
           << " tested, " << (r.pass ? "all pass" : "FAIL") << "\n";
      for (const auto& pt : r.points)
        if (!pt.pass)
          out_ << "  counterexample n=" << pt.n << ": lhs " << pt.lhs_mod.get_str() << ", rhs " << pt.rhs_mod.get_str()
               << "\n";
    }
    return r.pass ? kExitOk : kExitMathFailure;
  }

  int selftest() {
    const GoldenSuite suite = run_golden_dir(data_dir() + "/golden", catalog());
    bool ok = !suite.results.empty();
    for (const auto& r : suite.results) {
      ok = ok && r.pass;
      if (cfg_.json) {
        Json j{{"file", r.file}, {"id", r.id}, {"criterion", r.criterion}, {"pass", r.pass}};
        if (!r.detail.empty()) j["detail"] = r.detail;
        emit(j);
      } else {
        out_ << (r.pass ? "PASS " : "FAIL ") << r.file << ": " << r.id;
        if (!r.detail.empty()) out_ << " -- " << r.detail;
        out_ << "\n";
      }
    }
    for (const auto& [criterion, budget] : suite.budget_ms) {
      double total = 0;
      const bool in = within_budget(suite, criterion, &total);
      ok = ok && in;
      if (!in && !cfg_.json) out_ << "FAIL criterion " << criterion << " over its time budget\n";
      if (!in && cfg_.json) emit(Json{{"criterion", criterion}, {"budget_exceeded", true}});
    }
    if (!cfg_.json) out_ << (ok ? "selftest: all golden cases pass" : "selftest: FAILURES") << "\n";
    return ok ? kExitOk : kExitMathFailure;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial reduction for holonomic sequences", "holoreduce"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Line-delimited JSON output");
  app.add_option("--data", cfg.data_dir, "Data directory (catalog.json, golden/)");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&cfg, name] { cfg.command = name; });
    return s;
  };
  auto seq_opts = [&](CLI::App* s) {
    s->add_option("--sequence", cfg.sequence, "Catalog sequence name");
    s->add_flag("--alternating", cfg.alternating, "Apply (-1)^n");
    s->add_option("--geom", cfg.geom, "Apply r^n, r rational");
  };

  CLI::App* adj = sub("adjoint", "Apply the adjoint operator to a polynomial");
  adj->add_option("--operator", cfg.operator_file, "Operator JSON file");
  adj->add_option("--poly,-p", cfg.poly, "Polynomial p")->required();
  seq_opts(adj);

  CLI::App* ana = sub("analyze", "Degree analysis and shift-coprimality check");
  ana->add_option("--operator", cfg.operator_file, "Operator JSON file");
  seq_opts(ana);

  CLI::App* red = sub("reduce", "Polynomial reduction of Q modulo the image of L*");
  red->add_option("--operator", cfg.operator_file, "Operator JSON file");
  red->add_option("--poly,-p", cfg.poly, "Polynomial Q")->required();
  seq_opts(red);

  CLI::App* tel = sub("telescope", "Telescoped closed form of sum L*(p)(k) F(k)");
  tel->add_option("--operator", cfg.operator_file, "Operator JSON file");
  tel->add_option("--poly,-p", cfg.poly, "Polynomial p (default 1)");
  tel->add_flag("--family", cfg.family, "Derive and check the divisibility claim");
  tel->add_option("--lo", cfg.lo, "First n checked");
  tel->add_option("--hi", cfg.hi, "Last n checked (default 200)");
  tel->add_flag("--exhaustive", cfg.exhaustive, "Do not stop at the first counterexample");
  seq_opts(tel);

  CLI::App* gen = sub("generate", "New identity sum P(n)Q(n)F(n) from a seed");
  gen->add_option("--seed", cfg.seed_file, "Seed identity JSON file")->required();
  gen->add_option("--P,-P", cfg.P, "Polynomial P")->required();
  gen->add_option("--qdeg", cfg.qdeg, "Degree bound for Q (default d-1)");

  CLI::App* gue = sub("guess", "Guess a recurrence from sequence terms");
  gue->add_option("--order,-J", cfg.order, "Order J")->check(CLI::Range(1, 20));
  gue->add_option("--degree,-D", cfg.degree, "Coefficient degree D")->check(CLI::Range(0, 40));
  gue->add_option("--terms", cfg.terms, "Number of terms to use");
  seq_opts(gue);

  CLI::App* sq = sub("seq", "Sequence terms F(0..N)");
  sq->add_option("-N", cfg.N, "Last index")->check(CLI::NonNegativeNumber);
  sq->add_flag("--recurrence", cfg.recurrence, "Use the known operator instead of the binomial sum");
  seq_opts(sq);

  CLI::App* vs = sub("verify-series", "Numeric check of a seed or generated series");
  vs->add_option("--seed", cfg.seed_file, "Seed identity JSON file")->required();
  vs->add_option("--P,-P", cfg.P, "Verify the identity generated with this P instead of the seed");
  vs->add_option("--qdeg", cfg.qdeg, "Degree bound for Q");
  vs->add_option("-N", cfg.N, "Last term index (number of terms when accelerated)");
  vs->add_option("--digits", cfg.digits, "Working precision (default $HOLOREDUCE_DIGITS or 100)");
  vs->add_option("--tolerance-digits", cfg.tolerance_digits, "Pass when |S - target| <= 10^-k");
  vs->add_flag("--accelerate", cfg.accelerate, "Alternating-series acceleration");

  CLI::App* vc = sub("verify-congruence", "Check a congruence claim over a range");
  vc->add_option("--claim", cfg.claim_file, "Claim JSON file")->required();
  vc->add_option("--lo", cfg.lo, "First n (or prime)");
  vc->add_option("--hi", cfg.hi, "Last n (or prime)");
  vc->add_flag("--exhaustive", cfg.exhaustive, "Do not stop at the first counterexample");

  sub("selftest", "Run every golden case under data/golden");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return Runner(cfg, out).run();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "math failure: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace holo
