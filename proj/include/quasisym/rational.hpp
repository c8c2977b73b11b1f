#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quasisym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `p`, `-p` or `p/q` (q > 0 after sign normalisation). Throws
/// ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Reduced form, positive denominator, bare integer when q = 1.
std::string to_string(const Rational& r);

} // namespace quasisym
