#pragma once

// Interval expressions paired with a 100-digit decimal reference evaluation.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <random>

#include "erlab/interval.hpp"

namespace oracle {

using erlab::CertifiedInterval;
using erlab::Rational;
using Ref = boost::multiprecision::cpp_dec_float_100;

inline Ref to_ref(const Rational& x) { return Ref(x.get_num().get_str()) / Ref(x.get_den().get_str()); }

// Reference error allowance: the oracle carries about 100 significant digits.
inline const Ref kRefSlack("1e-80");

inline bool encloses(const CertifiedInterval& iv, const Ref& x) {
  const Ref pad = kRefSlack * (1 + abs(x));
  return to_ref(iv.lo()) <= x + pad && x - pad <= to_ref(iv.hi());
}

struct Expr {
  CertifiedInterval iv;
  Ref ref;
};

inline Expr random_expr(std::mt19937_64& rng, unsigned prec, int depth) {
  if (depth == 0 || rng() % 4 == 0) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = 1 + static_cast<long>(rng() % 97);
    const Rational x(num, den);
    return {CertifiedInterval(Rational(x), prec), to_ref(Rational(x))};
  }
  Expr a = random_expr(rng, prec, depth - 1);
  switch (rng() % 7) {
    case 0: {
      Expr b = random_expr(rng, prec, depth - 1);
      return {a.iv + b.iv, a.ref + b.ref};
    }
    case 1: {
      Expr b = random_expr(rng, prec, depth - 1);
      return {a.iv - b.iv, a.ref - b.ref};
    }
    case 2: {
      Expr b = random_expr(rng, prec, depth - 1);
      return {a.iv * b.iv, a.ref * b.ref};
    }
    case 3: {
      Expr b = random_expr(rng, prec, depth - 1);
      if (b.iv.lo() <= 0 && b.iv.hi() >= 0) return a;
      return {a.iv / b.iv, a.ref / b.ref};
    }
    case 4:
      if (!a.iv.positive()) return {-a.iv, -a.ref};
      return {ln(a.iv), log(a.ref)};
    case 5:
      if (!a.iv.positive()) return a;
      return {lg(a.iv), log(a.ref) / log(Ref(2))};
    default:
      if (a.iv.hi() > 50 || a.iv.lo() < -50) return a;
      return {exp(a.iv), exp(a.ref)};
  }
}


}  // namespace oracle
