#pragma once

#include <cstdint>

namespace segcalc {

using Int = std::int64_t;

/// Residue-field cardinality q together with a prime ell not dividing q.
class PrimePair {
 public:
  PrimePair(Int q, Int ell);

  Int q() const noexcept { return q_; }
  Int ell() const noexcept { return ell_; }

  friend bool operator==(const PrimePair&, const PrimePair&) = default;
  friend auto operator<=>(const PrimePair&, const PrimePair&) = default;

 private:
  Int q_;
  Int ell_;
};

bool is_prime(Int n) noexcept;

/// x^e mod n for n >= 1; x may be negative.
Int pow_mod(Int x, Int e, Int n);

/// Smallest t >= 1 with x^t = 1 mod n. Throws DomainError unless gcd(x, n) = 1.
Int mult_order(Int x, Int n);

struct EllSplit {
  Int ell_power;  // ell^v
  Int rest;       // n / ell^v, prime to ell
  int valuation;  // v
};

EllSplit ell_part(Int n, Int ell);

inline Int prime_to_ell_part(Int n, Int ell) { return ell_part(n, ell).rest; }
inline int valuation(Int n, Int ell) { return ell_part(n, ell).valuation; }

/// ell^e, throwing std::overflow_error past 2^62.
Int ipow(Int base, int e);

/// ell-adic valuation of q^n - 1 by lifting the exponent.
int c_valuation(const PrimePair& pair, Int n);

/// Largest power of ell dividing q^n - 1.
Int c_value(const PrimePair& pair, Int n);

}  // namespace segcalc
