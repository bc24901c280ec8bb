#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mae {

// Always canonical: mpq_class operations reduce and keep the denominator positive.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
Rational make_rational(std::int64_t num, std::int64_t den = 1);
double to_double(const Rational& q);

}  // namespace mae
