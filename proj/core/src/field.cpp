#include "erlab/field.hpp"

#include <map>
#include <string>

#include "erlab/errors.hpp"

namespace erlab {
namespace {

using Poly = std::vector<unsigned>;  // low-order coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly decode(unsigned value, unsigned p, unsigned e) {
  Poly out(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

unsigned encode(const Poly& a, unsigned p) {
  unsigned out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
  return out;
}

const std::map<unsigned, Poly>& default_moduli() {
  static const std::map<unsigned, Poly> table = {
      {4, {1, 1, 1}},        // x^2 + x + 1
      {8, {1, 1, 0, 1}},     // x^3 + x + 1
      {9, {1, 0, 1}},        // x^2 + 1
      {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {25, {2, 1, 1}},       // x^2 + x + 2
      {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
  };
  return table;
}

Poly least_irreducible(unsigned p, unsigned e) {
  unsigned count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (unsigned lower = 0; lower < count; ++lower) {
    Poly candidate = decode(lower, p, e);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for a prime p
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q) {
  if (q < 2) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  return {p, e};
}

bool is_irreducible(unsigned p, const Poly& poly) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2 || a.back() != 1) return false;
  const unsigned degree = static_cast<unsigned>(a.size() - 1);
  for (unsigned d = 1; d <= degree / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned lower = 0; lower < count; ++lower) {
      Poly divisor = decode(lower, p, d);
      divisor.push_back(1);
      if (poly_mod(a, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr GaloisField::make(unsigned q) {
  const auto [p, e] = prime_power_decomposition(q);
  if (const auto it = default_moduli().find(q); it != default_moduli().end()) {
    return std::make_shared<const GaloisField>(p, e, it->second);
  }
  if (e == 1) return std::make_shared<const GaloisField>(p, 1, Poly{0, 1});
  return std::make_shared<const GaloisField>(p, e, least_irreducible(p, e));
}

FieldPtr GaloisField::make(unsigned p, unsigned e, std::vector<unsigned> modulus) {
  return std::make_shared<const GaloisField>(p, e, std::move(modulus));
}

GaloisField::GaloisField(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("field degree must be positive");
  for (unsigned i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > 256) throw DomainError("field order exceeds 256");
  }
  if (modulus_.size() != e + 1 || modulus_.back() != 1) {
    throw DomainError("modulus must be monic of degree " + std::to_string(e));
  }
  for (auto c : modulus_)
    if (c >= p) throw DomainError("modulus coefficient out of range");
  if (e > 1 && !is_irreducible(p, modulus_)) throw DomainError("modulus is reducible over GF(p)");

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    const Poly pa = decode(a, p_, e_);
    Poly na(e_);
    for (unsigned i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = static_cast<Element>(encode(na, p_));
    for (unsigned b = 0; b < q_; ++b) {
      const Poly pb = decode(b, p_, e_);
      Poly s(e_);
      for (unsigned i = 0; i < e_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = static_cast<Element>(encode(s, p_));
    }
  }

  auto slow_mul = [&](unsigned a, unsigned b) {
    const Poly pa = decode(a, p_, e_);
    const Poly pb = decode(b, p_, e_);
    Poly prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(e_, 0);
    return encode(r, p_);
  };

  // Search for a primitive element: one whose powers reach every nonzero element.
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (unsigned g = 1; g < q_; ++g) {
    std::vector<bool> seen(q_, false);
    unsigned x = 1;
    unsigned steps = 0;
    bool primitive = true;
    for (; steps < q_ - 1; ++steps) {
      if (seen[x]) {
        primitive = false;
        break;
      }
      seen[x] = true;
      exp_[steps] = static_cast<Element>(x);
      log_[x] = steps;
      x = slow_mul(x, g);
    }
    if (primitive && x == 1) break;
    if (g + 1 == q_) throw DomainError("no primitive element found");
  }
  for (unsigned i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

}  // namespace erlab
