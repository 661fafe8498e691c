#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "segcalc/census.hpp"

namespace segcalc {

/// (-1)^(r-1).
int zelevinski_sign(Int r);

/// Every admissible w' >= w (admissible in the sense of is_admissible_triple
/// for the same c and ell) with t(w') >= t(w).
std::vector<Int> partner_candidates(Int w, Int c, Int ell);

/// Replays the squeeze w(partner) <= w together with w(partner) >= w: returns
/// w, or throws CounterexampleError if some other w' survives. Throws
/// DomainError when (w, c, ell) is not admissible.
Int infer_partner_w(Int w, Int c, Int ell);

struct PartnerSweepLine {
  Int ell = 2;
  Int c = 1;
  std::size_t tested = 0;
  std::size_t counterexamples = 0;
  std::optional<std::string> witness;

  nlohmann::json to_json() const;
};

/// One line per (ell, c = ell^v), v = 0..v_max, over admissible w <= w_max.
std::vector<PartnerSweepLine> partner_sweep(const std::vector<Int>& ells, int v_max, Int w_max);

struct TransferRecord {
  SpehRecord source;
  SpehRecord target;
  int sign = 1;
};

/// A-side image of a Speh record: r = 1, same degree, same (n, c, w, t, level).
/// Throws DomainError when the invariant vector is inadmissible.
TransferRecord transfer(const SpehRecord& source);

std::vector<TransferRecord> transfer_batch(const std::vector<SpehRecord>& sources, unsigned threads = 1);

/// The five transported invariants (n, c, w, t, level) agree.
bool same_invariants(const SpehRecord& x, const SpehRecord& y);

struct TransferCellReport {
  Int w = 1;
  Rational j{0};
  Int m = 1;
  Int a_count = 0;
  std::size_t sources = 0;  // distinct source classes
  std::size_t images = 0;   // distinct target classes
  bool injective = true;
  bool preserved = true;
  bool signs_ok = true;
  bool pass = true;
  std::optional<std::string> witness;

  nlohmann::json to_json() const;
};

/// Transfers the Speh view of every (w, level, m) cell with m <= m_max.
std::vector<TransferCellReport> transfer_universe(const Universe& u, unsigned threads = 1);

nlohmann::json to_json(const TransferRecord& t);

}  // namespace segcalc
