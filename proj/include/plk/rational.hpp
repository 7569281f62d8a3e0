#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plk {

// Exact scalars. mpq_class keeps results canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "[+-]digits" or "[+-]digits/digits". Throws InputError otherwise,
// including for a zero denominator.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace plk
