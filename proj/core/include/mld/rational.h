#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mld {

using Rational = mpq_class;

// Parses "p", "p/q" or a finite decimal such as "-0.125". The result is exact
// and canonical. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace mld
