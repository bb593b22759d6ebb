#pragma once

/**
 * JSON wire format. Every document carries "v": 1. Exact scalars travel as
 * strings ("p", "p/q", or a decimal such as "-0.125", read exactly); complex
 * entries as {"re": ..., "im": ...}. Serialized documents are canonical:
 * sorted keys, reduced fractions, compact output.
 */

#include "conjclass/classify.hpp"
#include "conjclass/homeo.hpp"

#include <json.hpp>

#include <string>

namespace conjclass::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Any schema violation; maps to ErrorCode::Parse.
Error schema_error(const std::string& what);

Json to_json(const Rational& r);
Json to_json(const Gaussian& z);
Rational rational_from_json(const Json& j);
Gaussian gaussian_from_json(const Json& j);

Json to_json(const AffineMap& f);
AffineMap map_from_json(const Json& j);

Json to_json(const ConjugacySignature& s);
ConjugacySignature signature_from_json(const Json& j);

Json to_json(const Homeomorphism& h);
Homeomorphism homeomorphism_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json to_json(const WitnessReport& w);

/// conjugate, basis, distinguishing_invariant, warnings; the caller adds the rest.
Json to_json(const Verdict& v);

/// Parses text into JSON, raising a Parse error on malformed input.
Json parse(const std::string& text);
std::string dump(const Json& j);

}  // namespace conjclass::io
