#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "segcalc/census.hpp"
#include "segcalc/identity_suite.hpp"

namespace segcalc {

/// Grid bounds for the verification suites. Defaults are the acceptance grids.
struct VerifyOptions {
  // mackey
  Int b_max = 4;
  Int n_max = 8;
  // tof, lemma57
  std::vector<Int> ells{2, 3, 5, 7, 11, 13};
  int v_max = 6;
  Int w_max = 64;
  // bigebra
  Int atom_n_max = 6;
  int random_products = 200;
  // y_count
  Int e_max = 12;
  Int s_max = 12;
  Int k_max = 36;
  // unitriangular
  Int partition_n_max = 6;
  int random_matrices = 100;
  // conjecture77
  Int c77_a_max = 4;
  Int c77_n_max = 5;
  Int c77_s_max = 4;
  std::vector<Int> c77_ells{3, 5, 7};
  // arith
  Int q_max = 32;
  Int ell_max = 31;
  Int arith_n_max = 64;

  std::uint64_t seed = 20240611;
  unsigned threads = 1;
};

using Suite = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

/// Names accepted by `run_suite`, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws DomainError on an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<CheckResult> verify_tof(const VerifyOptions& opts);
std::vector<CheckResult> verify_lemma57(const VerifyOptions& opts);
std::vector<CheckResult> verify_mackey(const VerifyOptions& opts);
std::vector<CheckResult> verify_bigebra(const VerifyOptions& opts);
std::vector<CheckResult> verify_y_count(const VerifyOptions& opts);
std::vector<CheckResult> verify_unitriangular(const VerifyOptions& opts);
std::vector<CheckResult> verify_conjecture77(const VerifyOptions& opts);
std::vector<CheckResult> verify_twist(const VerifyOptions& opts);
std::vector<CheckResult> verify_reduction(const VerifyOptions& opts);
std::vector<CheckResult> verify_census(const VerifyOptions& opts);
std::vector<CheckResult> verify_arith(const VerifyOptions& opts);

/// v_ell(q^n - 1) by testing q^n = 1 modulo growing powers of ell.
int c_valuation_by_modpow(const PrimePair& pair, Int n);

/// Universe configs used by the census suite: three (q, ell) contexts.
std::vector<UniverseConfig> census_contexts();

/// Coassociativity and multiplicativity witnesses (empty when they hold).
std::optional<std::string> coassociativity_witness(const RingElement& x);
std::optional<std::string> multiplicativity_witness(const RingElement& x, const RingElement& y);

/// Random product of 1..3 segment atoms of total length <= n_max.
RingElement random_segment_product(std::mt19937_64& rng, Int n_max);

}  // namespace segcalc
