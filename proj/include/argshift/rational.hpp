#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace argshift {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q"; throws InvalidArgument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

}  // namespace argshift
