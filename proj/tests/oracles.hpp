#pragma once

// Independent reference implementations used only by tests. Each one takes
// the most direct route (big integers, exhaustive enumeration) and shares no
// code with the library beyond plain types.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Big = boost::multiprecision::cpp_int;

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline Int mult_order(Int x, Int n) {
  Int y = ((x % n) + n) % n;
  for (Int t = 1; t <= n; ++t) {
    if (y == 1 % n) return t;
    y = y * (((x % n) + n) % n) % n;
  }
  return -1;
}

/// ell-part of q^n - 1 from the full integer.
inline Int c_value(Int q, Int ell, Int n) {
  Big x = boost::multiprecision::pow(Big(q), static_cast<unsigned>(n)) - 1;
  Int out = 1;
  while (x % ell == 0) {
    x /= ell;
    out *= ell;
  }
  return out;
}

inline Int prime_to(Int n, Int ell) {
  while (n % ell == 0) n /= ell;
  return n;
}

inline int val(Int n, Int ell) {
  int v = 0;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

/// t from the three-case formula in exact rationals; nullopt unless a positive integer.
inline std::optional<Int> t_value(Int w, Int c, Int ell) {
  using R = boost::rational<Int>;
  R tw;
  if (w == 1) tw = R(c);
  else if (w < ell) tw = R(c - 1);
  else tw = R(c) * R(ell - 1, ell);
  const R t = tw / R(w);
  if (t.denominator() != 1 || t.numerator() < 1) return std::nullopt;
  return t.numerator();
}

/// Admissible triples: prime-to-ell part of w divides ell - 1, ell | w once
/// w >= ell, and v(w) < v(c) for w > 1 (from n = a n_mod ell^u with eps | a).
inline bool admissible(Int w, Int c, Int ell) {
  if (w == 1) return true;
  if ((ell - 1) % prime_to(w, ell) != 0) return false;
  if (w >= ell && w % ell != 0) return false;
  return val(w, ell) < val(c, ell);
}

/// Partitions of n through compositions (bitmask over n - 1 gaps), sorted and deduplicated.
inline std::set<std::vector<Int>> partitions(Int n) {
  std::set<std::vector<Int>> out;
  if (n == 0) {
    out.insert(std::vector<Int>{});
    return out;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<Int> parts;
    Int run = 1;
    for (Int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

inline bool dominated(const std::vector<Int>& mu, const std::vector<Int>& nu) {
  const std::size_t len = std::max(mu.size(), nu.size());
  Int sm = 0, sn = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sn += i < nu.size() ? nu[i] : 0;
    if (sm > sn) return false;
  }
  return true;
}

inline std::vector<Int> conjugate(const std::vector<Int>& p) {
  std::vector<Int> out;
  for (Int i = 1; !p.empty() && i <= p.front(); ++i) {
    out.push_back(std::count_if(p.begin(), p.end(), [i](Int x) { return x >= i; }));
  }
  return out;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Count of t in [0, k) with e' | delta + t s', from the solution class of the congruence.
inline Int y_count(Int ep, Int sp, Int k, Int delta) {
  const Int g = std::gcd(ep, sp);
  if (((delta % g) + g) % g != 0) return 0;
  const Int period = ep / g;
  Int t0 = -1;
  for (Int t = 0; t < period; ++t) {
    if ((((delta + t * sp) % ep) + ep) % ep == 0) {
      t0 = t;
      break;
    }
  }
  if (t0 < 0 || t0 >= k) return 0;
  return (k - 1 - t0) / period + 1;
}

using Chains = std::map<std::vector<Int>, Int>;

/// All shuffles of the given sequences, with multiplicity.
inline void shuffles(std::vector<std::vector<Int>> seqs, std::vector<std::size_t> pos, std::vector<Int>& prefix,
                     Chains& out) {
  bool done = true;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (pos[i] < seqs[i].size()) {
      done = false;
      prefix.push_back(seqs[i][pos[i]]);
      ++pos[i];
      shuffles(seqs, pos, prefix, out);
      --pos[i];
      prefix.pop_back();
    }
  }
  if (done) ++out[prefix];
}

/// Chains of sum over compositions of prod_i Z(i, n_i), exponent step a*s, modulo eps.
inline Chains segment_product_chains(Int a, Int n, Int s, Int eps) {
  Chains out;
  std::vector<Int> alpha(static_cast<std::size_t>(a), 0);
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i + 1 == alpha.size()) {
      alpha[i] = left;
      std::vector<std::vector<Int>> seqs;
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        std::vector<Int> seq;
        for (Int r = 0; r < alpha[j]; ++r) seq.push_back(((static_cast<Int>(j) + r * a * s) % eps + eps) % eps);
        seqs.push_back(seq);
      }
      std::vector<Int> prefix;
      shuffles(seqs, std::vector<std::size_t>(seqs.size(), 0), prefix, out);
      return;
    }
    for (Int x = 0; x <= left; ++x) {
      alpha[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// prod_{j<n} {(i + j s) mod eps : i < a} as a multiset of sequences.
inline Chains termwise_reduction_chains(Int a, Int n, Int s, Int eps) {
  Chains out{{{}, 1}};
  for (Int j = 0; j < n; ++j) {
    Chains next;
    for (const auto& [seq, c] : out) {
      for (Int i = 0; i < a; ++i) {
        auto longer = seq;
        longer.push_back(((i + j * s) % eps + eps) % eps);
        next[longer] += c;
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
