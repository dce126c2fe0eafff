#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace erlab {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

/// GF(p^e) for q = p^e <= 256.
///
/// Elements are polynomial residues modulo a monic irreducible polynomial of
/// degree e over GF(p), encoded as the integer sum c_i p^i of their
/// coefficients. Addition uses a q x q table, multiplication log/antilog
/// tables built from a primitive element found at construction. Tables are
/// immutable once built, so a field may be shared freely across threads.
class GaloisField {
 public:
  using Element = std::uint8_t;

  /// Field of order q with the shipped default modulus (q in {4, 8, 9, 16, 25, 27}),
  /// the modulus x for a prime q, or otherwise the lexicographically least monic
  /// irreducible polynomial of the right degree.
  static FieldPtr make(unsigned q);

  /// Field with an explicit modulus, given low-order coefficient first
  /// (e + 1 entries, the last equal to 1). Irreducibility is checked by trial
  /// division against every monic polynomial of degree <= e / 2.
  static FieldPtr make(unsigned p, unsigned e, std::vector<unsigned> modulus);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  unsigned order() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Precondition: a != 0.
  Element inv(Element a) const noexcept { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  Element div(Element a, Element b) const noexcept { return mul(a, inv(b)); }

  friend bool same_field(const GaloisField& a, const GaloisField& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

  GaloisField(unsigned p, unsigned e, std::vector<unsigned> modulus);

 private:
  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<unsigned> log_;
  std::vector<Element> exp_;
};

bool is_prime(unsigned long n);
/// Returns (p, e) with q = p^e, or throws DomainError if q is not a prime power.
std::pair<unsigned, unsigned> prime_power_decomposition(unsigned q);
/// Monic irreducibility over GF(p) by trial division; coefficients low-order first.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

}  // namespace erlab
