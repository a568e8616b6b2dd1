#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wmn {

/// Exact rational coefficient. gmp keeps results canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input or zero denominator.
Scalar parse_scalar(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Scalar& x);

bool is_integer(const Scalar& x);

/// a/b in canonical form (mpq_class(a, b) alone does not reduce).
Scalar frac(long a, long b);

Scalar binomial(long n, long k);
Scalar factorial(long n);

/// (-1)^k as a small integer.
constexpr int sign_pow(int k) { return (k & 1) ? -1 : 1; }

}  // namespace wmn
