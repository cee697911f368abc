#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kbox {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Binomial coefficient C(a, b). Zero whenever b < 0 or b > a, which also
/// covers every negative top argument.
ExactInt binomial(std::int64_t a, std::int64_t b);

/// Divides and throws std::logic_error if the division leaves a remainder.
ExactInt exact_div(const ExactInt& num, const ExactInt& den);

/// Canonical rational num/den. Throws std::domain_error on a zero denominator.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

/// Decimal text, "p/q" for non-integral rationals.
std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& v);

} // namespace kbox
