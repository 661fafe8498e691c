#include "segcalc/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "segcalc/errors.hpp"

namespace segcalc {

namespace {

constexpr Int kPowLimit = Int{1} << 62;

Int normalize(Int x, Int n) {
  Int r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_prime(Int n) noexcept {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimePair::PrimePair(Int q, Int ell) : q_(q), ell_(ell) {
  if (q < 2) throw DomainError("q must be >= 2, got " + std::to_string(q));
  if (!is_prime(ell)) throw DomainError("ell must be prime, got " + std::to_string(ell));
  if (std::gcd(q, ell) != 1) {
    throw DomainError("ell = " + std::to_string(ell) + " divides q = " + std::to_string(q));
  }
}

Int pow_mod(Int x, Int e, Int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (e < 0) throw DomainError("negative exponent");
  if (n == 1) return 0;
  __int128 base = normalize(x, n);
  __int128 acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % n;
    base = base * base % n;
    e >>= 1;
  }
  return static_cast<Int>(acc);
}

Int mult_order(Int x, Int n) {
  if (n < 2) throw DomainError("mult_order: modulus must be >= 2");
  if (std::gcd(normalize(x, n), n) != 1) {
    throw DomainError("mult_order: " + std::to_string(x) + " is not a unit mod " + std::to_string(n));
  }
  const Int base = normalize(x, n);
  __int128 acc = base;
  for (Int t = 1;; ++t) {
    if (acc == 1) return t;
    acc = acc * base % n;
  }
}

EllSplit ell_part(Int n, Int ell) {
  if (n < 1) throw DomainError("ell_part: n must be positive");
  if (ell < 2) throw DomainError("ell_part: ell must be >= 2");
  EllSplit out{1, n, 0};
  while (out.rest % ell == 0) {
    out.rest /= ell;
    out.ell_power *= ell;
    ++out.valuation;
  }
  return out;
}

Int ipow(Int base, int e) {
  Int acc = 1;
  for (int i = 0; i < e; ++i) {
    if (acc > kPowLimit / base) throw std::overflow_error("ipow overflow");
    acc *= base;
  }
  return acc;
}

int c_valuation(const PrimePair& pair, Int n) {
  if (n < 1) throw DomainError("c_value: n must be positive");
  const Int q = pair.q();
  const Int ell = pair.ell();
  if (ell == 2) {
    // q is odd; the even lifting-the-exponent rule.
    if (n % 2 == 1) return valuation(q - 1, 2);
    return valuation(q - 1, 2) + valuation(q + 1, 2) + valuation(n, 2) - 1;
  }
  const Int e = mult_order(q, ell);
  if (n % e != 0) return 0;
  int base_val = 0;
  Int modulus = ell;
  while (pow_mod(q, e, modulus) == 1) {
    ++base_val;
    if (modulus > kPowLimit / ell) throw std::overflow_error("c_value: valuation too large");
    modulus *= ell;
  }
  return base_val + valuation(n / e, ell);
}

Int c_value(const PrimePair& pair, Int n) { return ipow(pair.ell(), c_valuation(pair, n)); }

}  // namespace segcalc
