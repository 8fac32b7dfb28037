#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freehopf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-', q > 0) into a canonical rational.
/// Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace freehopf
