#include "erlab/bounds.hpp"

#include <string>

#include "erlab/errors.hpp"
#include "erlab/optimisation.hpp"

namespace erlab {

ParameterPoint ParameterPoint::sets(long n, long k, long t, long r) {
  ParameterPoint p;
  p.setting = Setting::Sets;
  p.n = n;
  p.k = k;
  p.t = t;
  p.r = r;
  return p;
}

ParameterPoint ParameterPoint::vectors(unsigned long q, long n, long k, long t, long r) {
  ParameterPoint p = sets(n, k, t, r);
  p.setting = Setting::Vectors;
  p.q = q;
  return p;
}

ParameterPoint ParameterPoint::permutations(long n, long t, long r) {
  ParameterPoint p;
  p.setting = Setting::Permutations;
  p.n = n;
  p.t = t;
  p.r = r;
  return p;
}

void ParameterPoint::validate() const {
  if (r < 2) throw DomainError("r must be at least 2");
  if (setting == Setting::Permutations) {
    if (t < 1 || t > n) throw DomainError("permutation points need 1 <= t <= n");
    return;
  }
  if (!(1 <= t && t < k && k <= n)) throw DomainError("need 1 <= t < k <= n");
  if (setting == Setting::Vectors) {
    if (q > 256) throw DomainError("field order above 256");
    prime_power_decomposition(static_cast<unsigned>(q));
  }
  if (slack && *slack <= 0) throw DomainError("slack must be positive");
}

bool ParameterPoint::needs_slack() const {
  return setting == Setting::Permutations || (setting == Setting::Vectors && t >= 2);
}

BigCount gauss_or_zero(long n, long k, unsigned long q) {
  if (k < 0 || n < 0 || k > n) return 0;
  return gaussian_binomial(n, k, q);
}

CertifiedInterval CatalogEntry::N1(unsigned prec) const {
  if (!n1_available) throw ConfigError("N1 needs a slack factor for this setting");
  CertifiedInterval v(n1_rational, prec);
  if (n1_e_factor) {
    const CertifiedInterval one(1L, prec);
    v = v * (one - one / CertifiedInterval::euler(prec));
  }
  return v;
}

CertifiedInterval CatalogEntry::max_N1_N2(unsigned prec) const {
  return max(N1(prec), CertifiedInterval(N2, prec));
}

CertifiedInterval CatalogEntry::lg_M(unsigned prec) const {
  return CertifiedInterval(lg_m_coefficient, prec) * lg(CertifiedInterval(lg_m_base, prec));
}

CatalogEntry catalog(const ParameterPoint& p, bool require_n1) {
  p.validate();
  if (p.needs_slack() && !p.slack && require_n1) {
    throw ConfigError("this setting's N1 carries an unquantified o(1); supply a slack factor");
  }
  const Rational slack = p.slack.value_or(1);
  const long n = p.n, k = p.k, t = p.t;
  CatalogEntry c;
  c.n1_available = !p.needs_slack() || p.slack.has_value();
  switch (p.setting) {
    case Setting::Sets: {
      c.N0 = binomial(n - t, k - t);
      c.N2 = binomial(n - t - 1, k - t - 1);
      if (t == 1) {
        c.n1_rational = Rational(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1);
      } else {
        const BigCount h1 = (t + 2) * binomial(n - t - 2, k - t - 1) + binomial(n - t - 2, k - t - 2);
        const BigCount h2 = binomial(n - t, k - t) - binomial(n - k - 1, k - t) + t;
        c.n1_rational = Rational(h1 > h2 ? h1 : h2);
      }
      c.lg_m_coefficient = binomial(2 * (k - t) + 1, k - t);
      c.lg_m_base = binomial(n, k);
      break;
    }
    case Setting::Vectors: {
      const unsigned long q = p.q;
      c.N0 = gauss_or_zero(n - t, k - t, q);
      c.N2 = gauss_or_zero(n - t - 1, k - t - 1, q);
      if (t == 1) {
        c.n1_rational = Rational(gauss_or_zero(n - 1, k - 1, q) -
                                 power(BigCount(q), static_cast<unsigned long>(k * (k - 1))) *
                                     gauss_or_zero(n - k - 1, k - 1, q) +
                                 power(BigCount(q), static_cast<unsigned long>(k)));
      } else {
        const BigCount a = gauss_or_zero(t + 2, 1, q);
        const BigCount b = gauss_or_zero(k - t + 1, 1, q);
        c.n1_rational = slack * Rational((a > b ? a : b) * gauss_or_zero(n - t - 1, k - t - 1, q));
      }
      c.lg_m_coefficient = binomial(2 * (k - t) + 1, k - t);
      c.lg_m_base = gauss_or_zero(n, k, q);
      break;
    }
    case Setting::Permutations: {
      c.N0 = factorial(static_cast<unsigned long>(n - t));
      c.N2 = n - t - 1 >= 0 ? factorial(static_cast<unsigned long>(n - t - 1)) : BigCount(0);
      c.n1_rational = slack * Rational(c.N0);
      c.n1_e_factor = true;
      c.lg_m_coefficient = n * power(BigCount(2), static_cast<unsigned long>(2 * n - 2 * t + 1));
      c.lg_m_base = n;
      break;
    }
  }
  return c;
}

namespace {

CertifiedInterval two_lg3_minus_3(unsigned prec) {
  return CertifiedInterval(2L, prec) * lg(CertifiedInterval(3L, prec)) - CertifiedInterval(3L, prec);
}

}  // namespace

CertifiedInterval eq1_value(const ParameterPoint& p, unsigned prec) {
  const CatalogEntry c = catalog(p);
  return CertifiedInterval(c.N0, prec) - c.max_N1_N2(prec) -
         CertifiedInterval(6L, prec) * c.lg_M(prec) / two_lg3_minus_3(prec);
}

Certificate certify_3col_inequality(const ParameterPoint& p, unsigned max_prec) {
  catalog(p);  // surface configuration errors before any evaluation
  return certify_sign([&](unsigned prec) { return eq1_value(p, prec); }, max_prec);
}

CertifiedInterval permutation_sufficient_bound(long n, long t, unsigned prec) {
  if (!(n > t && t >= 1)) throw DomainError("the permutation bound needs n > t >= 1");
  const CertifiedInterval fact(factorial(static_cast<unsigned long>(n - t)), prec);
  const CertifiedInterval first = fact / (CertifiedInterval(2L, prec) * CertifiedInterval::euler(prec));
  const BigCount coeff = 36 * power(BigCount(2), static_cast<unsigned long>(2 * n - 2 * t + 1)) * n;
  return first - CertifiedInterval(coeff, prec) * lg(CertifiedInterval(n, prec));
}

Certificate certify_permutation_bound(long n, long t, unsigned max_prec) {
  return certify_sign([&](unsigned prec) { return permutation_sufficient_bound(n, t, prec); }, max_prec);
}

CertifiedInterval vector_3col_margin(long n, long k, unsigned long q, unsigned prec) {
  if (k < 2) throw DomainError("the vector margin needs k >= 2");
  if (n < k) throw DomainError("the vector margin needs n >= k");
  const BigCount bq = q;
  const BigCount lead = power(bq, static_cast<unsigned long>((k - 1) * (n - k))) - power(bq, static_cast<unsigned long>(k));
  const BigCount c = 9 * power(BigCount(4), static_cast<unsigned long>(k));
  const CertifiedInterval inner =
      CertifiedInterval(2L, prec) + CertifiedInterval(k * (n - k), prec) * lg(CertifiedInterval(bq, prec));
  return CertifiedInterval(lead, prec) - CertifiedInterval(c, prec) * inner;
}

CertifiedInterval vector_3col_margin_critical(long k, unsigned long q, unsigned prec) {
  if (k < 2) throw DomainError("the vector margin needs k >= 2");
  const BigCount bq = q;
  const BigCount lead = power(bq, static_cast<unsigned long>(k * k - 1)) - power(bq, static_cast<unsigned long>(k));
  const BigCount c = 9 * power(BigCount(4), static_cast<unsigned long>(k));
  const CertifiedInterval inner =
      CertifiedInterval(2L, prec) + CertifiedInterval(k * (k + 1), prec) * lg(CertifiedInterval(bq, prec));
  return CertifiedInterval(lead, prec) - CertifiedInterval(c, prec) * inner;
}

Certificate certify_vector_margin(long n, long k, unsigned long q, unsigned max_prec) {
  return certify_sign([&](unsigned prec) { return vector_3col_margin(n, k, q, prec); }, max_prec);
}

long sets_eta(long k, long t) {
  if (!(1 <= t && t < k)) throw DomainError("sets_eta needs 1 <= t < k");
  if (std::min(t, k - t) >= 3) return 1;
  if (t == 1) {
    for (unsigned prec = kMinPrecisionBits; prec <= 4096; prec *= 2) {
      const CertifiedInterval v =
          CertifiedInterval(k, prec) + CertifiedInterval(10L, prec) * ln(CertifiedInterval(k, prec));
      BigCount lo, hi;
      const Rational l = v.lo(), h = v.hi();
      mpz_cdiv_q(lo.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      mpz_cdiv_q(hi.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
      if (lo == hi) return lo.get_si();
    }
    throw Error("could not resolve the ceiling of k + 10 ln k");
  }
  return 10000 * k;
}

CertifiedInterval delta_value(const ParameterPoint& p, unsigned prec) {
  const CatalogEntry c = catalog(p);
  const CertifiedInterval r(p.r, prec);
  const CertifiedInterval lg9m3 = lg(CertifiedInterval(9L, prec)) - CertifiedInterval(3L, prec);
  const CertifiedInterval n2(c.N2, prec);
  return lg9m3 * CertifiedInterval(c.N0, prec) - r * c.max_N1_N2(prec) -
         r * n2 / CertifiedInterval(3L, prec) * lg(CertifiedInterval(opt_value(p.r), prec)) - r * c.lg_M(prec);
}

DeltaReport certify_delta(const ParameterPoint& p, unsigned max_prec) {
  catalog(p);
  DeltaReport rep;
  rep.delta = certify_sign([&](unsigned prec) { return delta_value(p, prec); }, max_prec);
  rep.gate = certify_sign([&](unsigned prec) { return delta_value(p, prec) - CertifiedInterval(2L, prec); }, max_prec);
  return rep;
}

CertifiedInterval sets_delta_margin(long n, long k, long t, long r, unsigned prec) {
  const ParameterPoint p = ParameterPoint::sets(n, k, t, r);
  p.validate();
  const CertifiedInterval N(n, prec), K(k, prec), T(t, prec), R(r, prec);
  const CertifiedInterval lg9m3 = lg(CertifiedInterval(9L, prec)) - CertifiedInterval(3L, prec);
  const CertifiedInterval second = K * R * R * CertifiedInterval(k - t, prec) / (N - T);
  CertifiedInterval ratio_pow(1L, prec);
  const CertifiedInterval ratio = CertifiedInterval(2 * (k - t) + 1, prec) / (N - T);
  for (long i = 0; i < k - t; ++i) ratio_pow = ratio_pow * ratio;
  const CertifiedInterval third = R * K * lg(N * CertifiedInterval::euler(prec) / K) * ratio_pow;
  return (lg9m3 - second - third) * CertifiedInterval(binomial(n - t, k - t), prec);
}

const char* to_string(LowerBoundKind kind) {
  switch (kind) {
    case LowerBoundKind::Generic: return "generic";
    case LowerBoundKind::V1SmallK: return "v1-small-k";
    case LowerBoundKind::V1LargeK: return "v1-large-k";
    case LowerBoundKind::V2: return "v2";
  }
  return "?";
}

namespace {

BigCount floor_of(const Rational& x) {
  BigCount out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::optional<BigCount> exact_power(const BigCount& base, const BigCount& exponent) {
  if (exponent < 0) return std::nullopt;
  if (!exponent.fits_ulong_p()) throw CapacityError("exponent too large for an exact value");
  return power(base, exponent.get_ui());
}

}  // namespace

LowerBound lower_bound_colourings(LowerBoundKind kind, const ParameterPoint& p, long s, unsigned prec) {
  p.validate();
  LowerBound out{std::nullopt, 0, 3, CertifiedInterval(prec)};
  const CertifiedInterval lg3 = lg(CertifiedInterval(3L, prec));
  if (kind == LowerBoundKind::Generic) {
    const CatalogEntry c = catalog(p, false);
    out.base = opt_value(p.r);
    out.exponent = Rational(c.N0) - Rational(p.r * c.N2, 3);
    out.exponent.canonicalize();
    const BigCount e = floor_of(out.exponent);
    out.value = exact_power(out.base, e);
    out.lg_value = CertifiedInterval(e, prec) * lg(CertifiedInterval(out.base, prec));
    return out;
  }
  if (p.setting != Setting::Vectors) throw DomainError("vector-space constructions need a vector point");
  if (s < 1) throw DomainError("the number of stars must be positive");
  const unsigned long q = p.q;
  const BigCount A = gauss_or_zero(p.n - p.t, p.k - p.t, q);
  const BigCount B = gauss_or_zero(p.n - 2 * p.t, p.k - 2 * p.t, q);
  switch (kind) {
    case LowerBoundKind::V1SmallK: out.exponent = Rational(s * A); break;
    case LowerBoundKind::V1LargeK: out.exponent = Rational(s * A - binomial(s, 2) * B); break;
    case LowerBoundKind::V2: {
      if (q + 1 < static_cast<unsigned long>(s)) throw DomainError("greedy feasibility requires q ≥ s−1");
      out.exponent = Rational(s * A);
      const BigCount e3 = s * A - (s - 1) * B;
      if (e3 >= 0 && B.fits_ulong_p()) out.value = *exact_power(3, e3) * power(BigCount(s), B.get_ui());
      out.lg_value = CertifiedInterval(e3, prec) * lg3 + CertifiedInterval(B, prec) * lg(CertifiedInterval(s, prec));
      return out;
    }
    case LowerBoundKind::Generic: break;
  }
  const BigCount e = out.exponent.get_num();
  out.value = exact_power(3, e);
  out.lg_value = CertifiedInterval(e, prec) * lg3;
  return out;
}

CertifiedInterval entropy_enclosure(const Rational& x, unsigned prec) {
  if (!(x > 0 && x < 1)) throw DomainError("entropy needs 0 < x < 1");
  const CertifiedInterval X(x, prec);
  const CertifiedInterval Y(Rational(1) - x, prec);
  return -(X * lg(X)) - Y * lg(Y);
}

}  // namespace erlab
