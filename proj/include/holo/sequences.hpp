#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holo/operator.hpp"

namespace holo {

/// a*n + b*k + c
struct LinearForm {
  long n = 0;
  long k = 0;
  long c = 0;

  long operator()(long nv, long kv) const { return n * nv + k * kv + c; }
};

/// C(top, bottom)^power
struct BinomialFactor {
  LinearForm top;
  LinearForm bottom;
  unsigned power = 1;
};

/// F(n) = (-1)^n [if alternating] * r^n * sum_{k=0}^{n} prod_f C(top_f, bottom_f)^{power_f}
///
/// With `summed` false the product is taken at k = 0 only.
struct SequenceDef {
  std::string name;
  std::string label;  ///< human form, e.g. "Domb(n)"
  std::vector<BinomialFactor> factors;
  bool summed = true;
  bool alternating = false;
  Rational geom = 1;
  /// Operator annihilating the full weighted sequence, when known.
  std::optional<RecOperator> known_operator;
  /// Operator annihilating the unweighted binomial sum (before sign/geom).
  std::optional<RecOperator> base_operator;
};

/// Same definition with an extra (-1)^n and/or r^n applied; the operators
/// are rescaled to match.
SequenceDef weighted(const SequenceDef& def, bool alternating, const Rational& geom);

/// Binomial coefficient by the multiplicative formula; 0 when k < 0 or
/// k > n. Throws DomainError for n < 0.
Integer binomial(long n, long k);

/// F(0..N) exactly.
std::vector<Rational> seq_terms(const SequenceDef& def, long N);

/// F(0..N) from the recurrence and J initial values. Throws MathError naming
/// the first n with a_J(n) = 0.
std::vector<Rational> seq_terms_rec(const RecOperator& L, std::span<const Rational> initial, long N);

/// Fits sum_i a_i(n) t_{n+i} = 0 with deg a_i <= D on a window of the data
/// and validates on the remaining terms. Throws DomainError when fewer than
/// (J+1)(D+1) + J + 8 terms are supplied.
std::optional<RecOperator> guess_recurrence(std::span<const Rational> terms, int J, int D,
                                            const std::string& var = "n");

inline constexpr int kGuessMargin = 8;

/// Memoized term tables, keyed by sequence name. Safe for concurrent use;
/// returned tables are immutable snapshots.
class TermCache {
 public:
  std::vector<Rational> terms(const SequenceDef& def, long N);

 private:
  std::mutex mutex_;
  std::map<std::string, std::vector<Rational>> tables_;
};

/// Sequence catalog as shipped in data/catalog.json.
class Catalog {
 public:
  static Catalog from_json_text(const std::string& text);
  static Catalog load(const std::string& path);
  /// data/catalog.json under the data directory.
  static Catalog load_default();

  const SequenceDef& get(const std::string& name) const;
  bool contains(const std::string& name) const { return defs_.contains(name); }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, SequenceDef> defs_;
};

/// HOLOREDUCE_DATA if set, otherwise the compiled-in source data directory.
std::string default_data_dir();

}  // namespace holo
