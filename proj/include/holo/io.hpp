#pragma once

#include <string>

#include <json.hpp>

#include "holo/congruence.hpp"
#include "holo/identity.hpp"
#include "holo/operator.hpp"
#include "holo/reduction.hpp"
#include "holo/sequences.hpp"
#include "holo/verify.hpp"

namespace holo {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Syntax errors become ParseError with the
/// byte offset; an unreadable file is a std::runtime_error.
Json load_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

/// {"var": "n", "coeffs": ["(n+1)^3", ...]}
RecOperator operator_from_json(const Json& j);
Json operator_to_json(const RecOperator& L);

Rational rational_from_json(const Json& j);

/// {"cs": {"1": "1/3"}, "kept": {}, "residual": "2*n+2/3"}
Json reduction_to_json(const ReductionResult& r, const std::string& var = "n");

Json degree_data_to_json(const DegreeData& dd, const std::string& var = "n");

Json closed_form_to_json(const SumClosedForm& form, const std::string& var = "n");

SequenceDef sequence_from_json(const Json& j);

/// An inline operator object, or a path string resolved against base_dir.
RecOperator operator_ref_from_json(const Json& j, const std::string& base_dir);

/// {"name", "operator", "weight", "lambda", "alpha", "kind",
///  "sequence": {"name", "alternating", "geom"}, "label"}
/// A missing "operator" is taken from the catalog entry of the sequence.
SeedIdentity seed_from_json(const Json& j, const std::string& base_dir, const Catalog* catalog = nullptr);
SeedIdentity load_seed(const std::string& path, const Catalog* catalog = nullptr);

Json identity_to_json(const NewIdentity& id);

/// Claim file plus the default tested range.
struct ClaimSpec {
  CongruenceClaim claim;
  long lo = 1;
  long hi = 100;
  bool primes_only = false;
};

/// {"name", "sequence": {...}, "weight": "3*k+2" | "adjoint_of": {"operator", "p"},
///  "scale", "lower", "upper_offset",
///  "modulus": {"const", "poly"} | {"prime_power": e},
///  "rhs": {"coeff", "legendre3", "p_power", "two_pow_minus_one_power"},
///  "range": {"lo", "hi", "primes_only"}}
ClaimSpec claim_from_json(const Json& j, const std::string& base_dir);
ClaimSpec load_claim(const std::string& path);

/// {"n": 17, "lhs_mod": "0", "rhs_mod": "0", "pass": true}
Json point_to_json(const PointRecord& r);
/// {"target", "partial_terms", "abs_residual", "pass", ...}
Json series_report_to_json(const SeriesReport& r);
Json family_to_json(const FamilyClaim& f);

/// The weighted sequence a seed or claim refers to.
SequenceDef resolve_sequence(const Catalog& catalog, const std::string& name, bool alternating, const Rational& geom);

/// Directory part of a path ("." when there is none).
std::string dirname_of(const std::string& path);

}  // namespace holo
