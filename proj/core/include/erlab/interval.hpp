#pragma once

#include <functional>
#include <string>

#include <mpfr.h>

#include "erlab/bigint.hpp"

namespace erlab {

inline constexpr unsigned kDefaultPrecisionBits = 512;
inline constexpr unsigned kMinPrecisionBits = 64;

/// Closed interval [lo, hi] with binary floating endpoints of a fixed working precision.
/// Every operation rounds lo down and hi up, so the result encloses the exact value
/// whenever the operands enclose theirs.
class CertifiedInterval {
 public:
  explicit CertifiedInterval(unsigned precision = kMinPrecisionBits);
  CertifiedInterval(const BigCount& value, unsigned precision);
  CertifiedInterval(const Rational& value, unsigned precision);
  CertifiedInterval(const Rational& lo, const Rational& hi, unsigned precision);
  CertifiedInterval(long value, unsigned precision) : CertifiedInterval(BigCount(value), precision) {}
  CertifiedInterval(const CertifiedInterval& other);
  CertifiedInterval(CertifiedInterval&& other) noexcept;
  CertifiedInterval& operator=(const CertifiedInterval& other);
  CertifiedInterval& operator=(CertifiedInterval&& other) noexcept;
  ~CertifiedInterval();

  unsigned precision() const noexcept { return prec_; }
  Rational lo() const;
  Rational hi() const;
  double lo_double() const;
  double hi_double() const;
  double mid() const { return 0.5 * (lo_double() + hi_double()); }
  /// Width as an exact rational.
  Rational width() const { return hi() - lo(); }

  bool contains(const Rational& x) const;
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }

  friend CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b);
  /// Throws DomainError if b contains 0.
  friend CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a);

  /// Natural and binary logarithms; throw DomainError unless lo > 0.
  friend CertifiedInterval ln(const CertifiedInterval& a);
  friend CertifiedInterval lg(const CertifiedInterval& a);
  friend CertifiedInterval exp(const CertifiedInterval& a);
  friend CertifiedInterval max(const CertifiedInterval& a, const CertifiedInterval& b);

  /// Enclosure of e.
  static CertifiedInterval euler(unsigned precision);

  std::string describe() const;

 private:
  unsigned prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

enum class Sign { Positive, Negative, Inconclusive };
const char* to_string(Sign s);

struct Certificate {
  Sign sign = Sign::Inconclusive;
  CertifiedInterval enclosure;
  unsigned precision = 0;  // working precision at which the sign was decided (or the cap)
};

/// Evaluates expr at 64, 128, ... bits until the enclosure excludes 0 or the cap is passed.
Certificate certify_sign(const std::function<CertifiedInterval(unsigned)>& expr,
                         unsigned max_precision_bits = kDefaultPrecisionBits,
                         unsigned start_precision_bits = kMinPrecisionBits);

}  // namespace erlab
