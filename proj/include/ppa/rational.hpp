#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ppa {

/// Exact rational scalar; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" or "p"; accepts an optional leading '-'.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

Rational pow(const Rational& base, std::int64_t exponent);

/// Exact k-th root when one exists in Q (sign handled for odd k).
std::optional<Rational> exact_root(const Rational& value, std::uint64_t k);

long double to_long_double(const Rational& value);

}  // namespace ppa
