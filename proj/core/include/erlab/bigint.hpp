#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace erlab {

/// Arbitrary-precision nonnegative integer used for every exact count.
using BigCount = mpz_class;
/// Exact rational, used for exponents, slack factors and interval endpoints.
using Rational = mpq_class;

/// C(n, k), with the convention C(n, k) = 0 when k < 0, n < 0 or k > n.
BigCount binomial(long n, long k);
BigCount factorial(unsigned long n);
BigCount power(const BigCount& base, unsigned long exponent);
/// r (r-1) ... (r-m+1); equals 1 for m = 0 and 0 for m > r.
BigCount falling_factorial(unsigned long r, unsigned long m);

std::string to_decimal(const BigCount& value);
std::string to_string(const Rational& value);
/// Parses "a" or "a/b" (optionally signed); throws ConfigError on junk.
Rational parse_rational(const std::string& text);

/// Exact conversion; throws CapacityError if the value does not fit.
std::uint64_t to_u64(const BigCount& value);

}  // namespace erlab
