#include "holo/sequences.hpp"

#include <algorithm>
#include <cstdlib>

#include "holo/error.hpp"
#include "holo/io.hpp"
#include "holo/linalg.hpp"

namespace holo {

SequenceDef weighted(const SequenceDef& def, bool alternating, const Rational& geom) {
  if (geom == 0) throw DomainError("geometric factor must be nonzero");
  SequenceDef out = def;
  if (alternating) out.alternating = !out.alternating;
  out.geom *= geom;
  out.name = def.name;
  if (out.alternating) out.name += ":alt";
  if (out.geom != 1) out.name += ":geom=" + to_string(out.geom);
  if (def.base_operator) {
    const Rational r = out.alternating ? Rational(-out.geom) : out.geom;
    out.known_operator = scale_operator(*def.base_operator, r);
  } else if (def.known_operator) {
    const Rational r = alternating ? Rational(-geom) : geom;
    out.known_operator = scale_operator(*def.known_operator, r);
  }
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

class PascalRows {
 public:
  const Integer& get(long n, long k) {
    static const Integer zero = 0;
    if (k < 0 || k > n) return zero;
    while (static_cast<long>(rows_.size()) <= n) {
      const std::size_t m = rows_.size();
      std::vector<Integer> row(m + 1, Integer(1));
      for (std::size_t i = 1; i < m; ++i) row[i] = rows_[m - 1][i - 1] + rows_[m - 1][i];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace

std::vector<Rational> seq_terms(const SequenceDef& def, long N) {
  if (N < 0) return {};
  PascalRows pascal;
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  Rational weight = 1;
  const Rational step = def.alternating ? Rational(-def.geom) : def.geom;
  for (long n = 0; n <= N; ++n) {
    Integer total = 0;
    const long kmax = def.summed ? n : 0;
    for (long k = 0; k <= kmax; ++k) {
      Integer prod = 1;
      for (const auto& f : def.factors) {
        const long top = f.top(n, k);
        if (top < 0) throw DomainError(def.name + ": negative binomial top at n=" + std::to_string(n));
        const Integer& b = pascal.get(top, f.bottom(n, k));
        if (b == 0) {
          prod = 0;
          break;
        }
        if (f.power == 1) {
          prod *= b;
        } else {
          Integer t;
          mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), f.power);
          prod *= t;
        }
      }
      total += prod;
    }
    out.emplace_back(Rational(total) * weight);
    weight *= step;
  }
  return out;
}

std::vector<Rational> seq_terms_rec(const RecOperator& L, std::span<const Rational> initial, long N) {
  const int J = L.order();
  if (initial.size() != static_cast<std::size_t>(J))
    throw DomainError("seq_terms_rec needs exactly " + std::to_string(J) + " initial values");
  std::vector<Rational> out(initial.begin(), initial.end());
  out.resize(static_cast<std::size_t>(std::max<long>(N + 1, 0)));
  if (N + 1 < J) return out;
  for (long n = 0; n + J <= N; ++n) {
    const Rational x(n);
    const Rational lead = L.coeff(J)(x);
    if (lead == 0) throw MathError("leading coefficient a_J vanishes at n=" + std::to_string(n));
    Rational acc = 0;
    for (int i = 0; i < J; ++i) acc += L.coeff(i)(x) * out[static_cast<std::size_t>(n + i)];
    out[static_cast<std::size_t>(n + J)] = -acc / lead;
  }
  return out;
}

std::optional<RecOperator> guess_recurrence(std::span<const Rational> terms, int J, int D, const std::string& var) {
  if (J < 1 || D < 0) throw DomainError("guess_recurrence needs J >= 1 and D >= 0");
  const std::size_t unknowns = static_cast<std::size_t>((J + 1) * (D + 1));
  const std::size_t needed = unknowns + static_cast<std::size_t>(J + kGuessMargin);
  if (terms.size() < needed)
    throw DomainError("guess_recurrence needs at least " + std::to_string(needed) + " terms, got " +
                      std::to_string(terms.size()));
  const std::size_t equations = terms.size() - static_cast<std::size_t>(J);

  auto fill_row = [&](Matrix& m, std::size_t row, std::size_t n) {
    Rational npow = 1;
    for (int e = 0; e <= D; ++e) {
      for (int i = 0; i <= J; ++i)
        m(row, static_cast<std::size_t>(i * (D + 1) + e)) = npow * terms[n + static_cast<std::size_t>(i)];
      npow *= static_cast<unsigned long>(n);
    }
  };

  const std::size_t window = unknowns;
  Matrix fit(window, unknowns);
  for (std::size_t n = 0; n < window; ++n) fill_row(fit, n, n);
  auto basis = nullspace(fit);
  if (basis.empty()) return std::nullopt;
  if (basis.size() > 1) {
    // Underdetermined on the window; the held-out rows must pin it down.
    Matrix all(equations, unknowns);
    for (std::size_t n = 0; n < equations; ++n) fill_row(all, n, n);
    basis = nullspace(all);
    if (basis.size() != 1) return std::nullopt;
  }
  const auto& v = basis.front();

  Matrix held(equations - window, unknowns);
  for (std::size_t n = window; n < equations; ++n) fill_row(held, n - window, n);
  for (const auto& r : multiply(held, v))
    if (r != 0) return std::nullopt;

  std::vector<UniPoly> coeffs;
  for (int i = 0; i <= J; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(D + 1));
    for (int e = 0; e <= D; ++e) c[static_cast<std::size_t>(e)] = v[static_cast<std::size_t>(i * (D + 1) + e)];
    coeffs.emplace_back(std::move(c));
  }
  if (coeffs.back().is_zero()) return std::nullopt;
  return RecOperator(std::move(coeffs), var);
}

std::vector<Rational> TermCache::terms(const SequenceDef& def, long N) {
  {
    std::lock_guard lock(mutex_);
    auto it = tables_.find(def.name);
    if (it != tables_.end() && static_cast<long>(it->second.size()) > N)
      return {it->second.begin(), it->second.begin() + (N + 1)};
  }
  auto fresh = seq_terms(def, N);
  std::lock_guard lock(mutex_);
  auto& slot = tables_[def.name];
  if (slot.size() < fresh.size()) slot = fresh;
  return fresh;
}

Catalog Catalog::from_json_text(const std::string& text) {
  const Json j = parse_json_text(text);
  Catalog cat;
  for (const auto& entry : j.at("sequences")) {
    SequenceDef def = sequence_from_json(entry);
    cat.defs_.emplace(def.name, std::move(def));
  }
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  const Json j = load_json_file(path);
  return from_json_text(j.dump());
}

Catalog Catalog::load_default() { return load(default_data_dir() + "/catalog.json"); }

const SequenceDef& Catalog::get(const std::string& name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw DomainError("unknown sequence '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, def] : defs_) out.push_back(name);
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("HOLOREDUCE_DATA"); env != nullptr && *env != '\0') return env;
  return HOLO_DATA_DIR;
}

}  // namespace holo
