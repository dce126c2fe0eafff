#pragma once

#include <optional>
#include <string>

#include "erlab/bigint.hpp"
#include "erlab/field.hpp"
#include "erlab/ground.hpp"
#include "erlab/interval.hpp"

namespace erlab {

struct ParameterPoint {
  Setting setting = Setting::Sets;
  long n = 0;
  long k = 0;  // ignored for permutations
  long t = 1;
  long r = 3;
  unsigned long q = 0;          // Vectors only
  std::optional<Rational> slack;  // multiplier on the N1 entries that carry an unquantified o(1)

  static ParameterPoint sets(long n, long k, long t, long r = 3);
  static ParameterPoint vectors(unsigned long q, long n, long k, long t, long r = 3);
  static ParameterPoint permutations(long n, long t, long r = 3);

  /// Throws DomainError on inconsistent parameters.
  void validate() const;
  /// Whether the catalog's N1 for this point needs a slack factor.
  bool needs_slack() const;
};

/// Closed-form census values for a parameter point.
/// N1 = n1_rational, times (1 - 1/e) when n1_e_factor; lg M <= lg_m_coefficient * lg(lg_m_base).
struct CatalogEntry {
  bool n1_available = true;  // false when a required slack factor was not supplied
  BigCount N0;
  BigCount N2;
  Rational n1_rational;
  bool n1_e_factor = false;
  BigCount lg_m_coefficient;
  BigCount lg_m_base;

  CertifiedInterval N1(unsigned precision) const;
  CertifiedInterval max_N1_N2(unsigned precision) const;
  CertifiedInterval lg_M(unsigned precision) const;
};

/// With require_n1, throws ConfigError when the point needs a slack factor and none is set.
CatalogEntry catalog(const ParameterPoint& p, bool require_n1 = true);

/// Binomials with the zero convention outside 0 <= k <= n.
BigCount gauss_or_zero(long n, long k, unsigned long q);

/// N0 - max(N1, N2) - 6 lg M / (2 lg 3 - 3) with catalog values.
CertifiedInterval eq1_value(const ParameterPoint& p, unsigned precision);
Certificate certify_3col_inequality(const ParameterPoint& p, unsigned max_precision_bits = kDefaultPrecisionBits);

/// (n - t)! / (2e) - 36 * 2^(2n - 2t + 1) * n * lg n.
CertifiedInterval permutation_sufficient_bound(long n, long t, unsigned precision);
Certificate certify_permutation_bound(long n, long t, unsigned max_precision_bits = kDefaultPrecisionBits);

/// q^((k-1)(n-k)) - q^k - 9 * 4^k * (2 + k(n-k) lg q); k >= 2.
CertifiedInterval vector_3col_margin(long n, long k, unsigned long q, unsigned precision);
/// The same at n = 2k + 1: q^(k^2 - 1) - q^k - 9 * 4^k * (2 + k(k+1) lg q).
CertifiedInterval vector_3col_margin_critical(long k, unsigned long q, unsigned precision);
Certificate certify_vector_margin(long n, long k, unsigned long q,
                                  unsigned max_precision_bits = kDefaultPrecisionBits);

/// Threshold offset for set families; 1 <= t < k. Cases are tested in the order
/// min(t, k - t) >= 3, then t = 1 (ceil(k + 10 ln k)), then everything else (10000 k).
long sets_eta(long k, long t);

/// (lg 9 - 3) N0 - r max(N1, N2) - (r N2 / 3) lg OPT(r) - r lg M.
CertifiedInterval delta_value(const ParameterPoint& p, unsigned precision);

struct DeltaReport {
  Certificate delta;  // sign of the margin itself
  Certificate gate;   // sign of delta - 2; positive means the gate delta >= 2 holds
};
DeltaReport certify_delta(const ParameterPoint& p, unsigned max_precision_bits = kDefaultPrecisionBits);

/// Lower bound (lg 9 - 3 - k r^2 (k-t)/(n-t) - r k lg(ne/k) ((2(k-t)+1)/(n-t))^(k-t)) C(n-t, k-t)
/// on delta for set families.
CertifiedInterval sets_delta_margin(long n, long k, long t, long r, unsigned precision);

enum class LowerBoundKind { Generic, V1SmallK, V1LargeK, V2 };
const char* to_string(LowerBoundKind kind);

struct LowerBound {
  std::optional<BigCount> value;  // exact, when the bound is a nonnegative integer
  Rational exponent;              // of OPT(r) for Generic, of 3 otherwise (before the V2 factor)
  BigCount base;                  // OPT(r) for Generic, 3 otherwise
  CertifiedInterval lg_value;     // lg of the bound
};

/// Generic: OPT(r)^floor(N0 - r N2 / 3). V1SmallK: 3^(s [n-t, k-t]).
/// V1LargeK: 3^(s [n-t, k-t] - C(s, 2) [n-2t, k-2t]). V2: 3^(s [n-t, k-t]) (s 3^(1-s))^[n-2t, k-2t].
LowerBound lower_bound_colourings(LowerBoundKind kind, const ParameterPoint& p, long s,
                                  unsigned precision = kDefaultPrecisionBits);

/// Binary entropy H(x) = -x lg x - (1-x) lg(1-x), 0 < x < 1.
CertifiedInterval entropy_enclosure(const Rational& x, unsigned precision = kDefaultPrecisionBits);

}  // namespace erlab
