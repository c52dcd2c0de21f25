#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcasimir {

/// Arbitrary-precision rational, always in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders as "num/den"; integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// x^e for any integer e; x must be nonzero when e < 0.
Rational pow(const Rational& x, long e);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qcasimir
