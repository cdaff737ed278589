#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace novikov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace novikov
