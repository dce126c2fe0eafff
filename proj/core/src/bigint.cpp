#include "erlab/bigint.hpp"

#include <limits>

#include "erlab/errors.hpp"

namespace erlab {

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigCount factorial(unsigned long n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount power(const BigCount& base, unsigned long exponent) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigCount falling_factorial(unsigned long r, unsigned long m) {
  if (m > r) return 0;
  BigCount out = 1;
  for (unsigned long i = 0; i < m; ++i) out *= r - i;
  return out;
}

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty rational");
  Rational out;
  if (out.set_str(text, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
  if (out.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
  out.canonicalize();
  return out;
}

std::uint64_t to_u64(const BigCount& value) {
  if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
    throw CapacityError("value " + to_decimal(value) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace erlab
