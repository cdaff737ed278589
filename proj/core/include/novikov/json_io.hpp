#pragma once

#include <nlohmann/json.hpp>

#include "novikov/abelianization.hpp"
#include "novikov/catalog.hpp"
#include "novikov/chain_complex.hpp"
#include "novikov/fibring.hpp"
#include "novikov/novikov.hpp"
#include "novikov/quotient.hpp"

namespace novikov {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"1": "3", "2": "-2"} for 3 - 2 sqrt(2); the zero value is {}.
Json to_json(const RealValue& value);
/// "inf" or a RealValue object.
Json to_json(const ExtendedValue& value);
RealValue real_value_from_json(const Json& json);
ExtendedValue extended_value_from_json(const Json& json);

/// [{"word": "a b^-1", "coeff": "3/2"}, ...] in shortlex order of words.
Json to_json(const RingElement& element);
/// Accepts terms in any order; repeated words are summed.
RingElement ring_element_from_json(const Json& json, const GroupPtr& group);

/// {"terms": [...], "cutoff": ...}.
Json to_json(const NovikovElement& element);

/// {"schema": 1, "rank": r, "coeffs": [[...], ...], "basis_primes": [...]};
/// row 0 holds rational parts, row i the coefficients of sqrt(basis_primes[i-1]).
Json to_json(const Character& character);
Character character_from_json(const Json& json);

Json to_json(const Abelianization& abelianization);

/// {"table": [[...]], "images": {"a": 1}, "section": {"1": "t"}}.
FiniteQuotient quotient_from_json(const Json& json, const Group& group,
                                  std::size_t max_order = kDefaultMaxQuotientOrder);
Json to_json(const FiniteQuotient& quotient, const Group& group);

Json to_json(const ChainComplex& complex);
Json to_json(const Certificate& certificate, const Group& group);
/// Inverse of to_json(Certificate); the result can be handed to
/// verify_certificate without rerunning the elimination.
Certificate certificate_from_json(const Json& json, const GroupPtr& group);
Json to_json(const CertificationResult& result, const Group& group);
/// {"character", "plus", "minus", "verdict", "cutoff", "margin",
///  "certificate_digest", ...}.
Json to_json(const FibringVerdict& verdict, const Group& group);
Json to_json(const ScanReport& report, const Group& group);
Json to_json(const HarnessReport& report);

/// Digest of the canonical serialisation of both certificates of a verdict.
std::string certificate_digest(const FibringVerdict& verdict, const Group& group);

}  // namespace novikov
