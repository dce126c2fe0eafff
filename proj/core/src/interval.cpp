#include "erlab/interval.hpp"

#include <algorithm>
#include <sstream>

#include "erlab/errors.hpp"

namespace erlab {

CertifiedInterval::CertifiedInterval(unsigned precision) : prec_(std::max(precision, 2U)) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CertifiedInterval::CertifiedInterval(const BigCount& value, unsigned precision)
    : CertifiedInterval(precision) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(const Rational& value, unsigned precision)
    : CertifiedInterval(value, value, precision) {}

CertifiedInterval::CertifiedInterval(const Rational& lo, const Rational& hi, unsigned precision)
    : CertifiedInterval(precision) {
  if (lo > hi) throw DomainError("interval endpoints out of order");
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(const CertifiedInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(CertifiedInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

CertifiedInterval& CertifiedInterval::operator=(const CertifiedInterval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

CertifiedInterval& CertifiedInterval::operator=(CertifiedInterval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

CertifiedInterval::~CertifiedInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational CertifiedInterval::lo() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational CertifiedInterval::hi() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double CertifiedInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double CertifiedInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool CertifiedInterval::contains(const Rational& x) const { return lo() <= x && x <= hi(); }

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

CertifiedInterval operator-(const CertifiedInterval& a) {
  CertifiedInterval out(a.prec_);
  mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
  return out;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Hull of op over the four endpoint pairs, each rounded in the safe direction.
void four_corner(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr a0, mpfr_srcptr a1, mpfr_srcptr b0,
                 mpfr_srcptr b1, unsigned prec, BinaryOp op) {
  mpfr_t d, u;
  mpfr_init2(d, prec);
  mpfr_init2(u, prec);
  mpfr_srcptr as[2] = {a0, a1};
  mpfr_srcptr bs[2] = {b0, b1};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      op(d, x, y, MPFR_RNDD);
      op(u, x, y, MPFR_RNDU);
      if (first || mpfr_less_p(d, lo)) mpfr_set(lo, d, MPFR_RNDD);
      if (first || mpfr_greater_p(u, hi)) mpfr_set(hi, u, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(d);
  mpfr_clear(u);
}

}  // namespace

CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  four_corner(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, out.prec_, &mpfr_mul);
  return out;
}

CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw DomainError("interval division by a range containing 0");
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  four_corner(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_, out.prec_, &mpfr_div);
  return out;
}

CertifiedInterval ln(const CertifiedInterval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw DomainError("logarithm of a range reaching 0");
  CertifiedInterval out(a.prec_);
  mpfr_log(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval lg(const CertifiedInterval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw DomainError("logarithm of a range reaching 0");
  CertifiedInterval out(a.prec_);
  mpfr_log2(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log2(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval exp(const CertifiedInterval& a) {
  CertifiedInterval out(a.prec_);
  mpfr_exp(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval max(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval out(std::max(a.prec_, b.prec_));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

CertifiedInterval CertifiedInterval::euler(unsigned precision) {
  return exp(CertifiedInterval(1L, precision));
}

std::string CertifiedInterval::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << '[' << lo_double() << ", " << hi_double() << ']';
  return os.str();
}

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Inconclusive: return "inconclusive";
  }
  return "?";
}

Certificate certify_sign(const std::function<CertifiedInterval(unsigned)>& expr,
                         unsigned max_precision_bits, unsigned start_precision_bits) {
  if (max_precision_bits < kMinPrecisionBits) throw ConfigError("precision must be at least 64 bits");
  Certificate cert;
  unsigned prec = std::min(std::max(start_precision_bits, kMinPrecisionBits), max_precision_bits);
  while (true) {
    cert.enclosure = expr(prec);
    cert.precision = prec;
    if (cert.enclosure.positive()) {
      cert.sign = Sign::Positive;
      return cert;
    }
    if (cert.enclosure.negative()) {
      cert.sign = Sign::Negative;
      return cert;
    }
    if (prec >= max_precision_bits) break;
    prec = std::min(prec * 2, max_precision_bits);
  }
  cert.sign = Sign::Inconclusive;
  return cert;
}

}  // namespace erlab
