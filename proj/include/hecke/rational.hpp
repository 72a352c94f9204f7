#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hecke {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "3/2", "-1", "0".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p", "p/q" (surrounding blanks allowed). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Comma-separated rationals, blanks ignored. An empty string gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Joins with ", " (the series wire format).
std::string join_rationals(const std::vector<Rational>& xs, std::string_view sep = ", ");

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer factorial(int n);

}  // namespace hecke
