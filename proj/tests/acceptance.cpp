// Acceptance gate: one PASS/FAIL line per property, each with a time limit.
// A property passes only if every case holds and it finishes within its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "segcalc/census.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/identity_suite.hpp"
#include "segcalc/jl_transfer.hpp"
#include "segcalc/verify.hpp"

using namespace segcalc;

namespace {

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool all_pass(const std::vector<CheckResult>& rs, Outcome& o) {
  for (const auto& r : rs) {
    ++o.cases;
    if (!r.pass) o.fail(r.check + ": " + r.witness.value_or("failed"));
  }
  return o.pass;
}

const std::vector<Int> kGridElls{2, 3, 5, 7, 11, 13};

Outcome t_formula() {
  Outcome o;
  for (Int ell : kGridElls) {
    for (int v = 0; v <= 6; ++v) {
      const Int c = ipow(ell, v);
      for (Int w = 1; w <= 64; ++w) {
        if (!oracle::admissible(w, c, ell)) continue;
        ++o.cases;
        try {
          const Int t = t_of(w, c, ell);
          if (t < 1 || t != oracle::t_value(w, c, ell)) o.fail("t(" + std::to_string(w) + ") wrong");
        } catch (const InconsistencyError& e) {
          o.fail(e.what());
        }
      }
    }
  }
  return o;
}

Outcome partner_uniqueness() {
  Outcome o;
  for (Int ell : kGridElls) {
    for (int v = 0; v <= 6; ++v) {
      const Int c = ipow(ell, v);
      for (Int w = 1; w <= 64; ++w) {
        if (!oracle::admissible(w, c, ell)) continue;
        ++o.cases;
        try {
          if (infer_partner_w(w, c, ell) != w) o.fail("partner differs");
        } catch (const CounterexampleError& e) {
          o.fail(e.what());
        }
      }
    }
  }
  return o;
}

Outcome mackey() {
  Outcome o;
  for (Int b = 1; b <= 4; ++b) {
    for (Int n = 2; n <= 8; ++n) {
      for (Int k = 1; k < n; ++k) {
        ++o.cases;
        const auto r = check_mackey_rearrangement(b, n, k);
        const Int expected = oracle::binomial(k + b - 1, b - 1) * oracle::binomial(n - k + b - 1, b - 1);
        if (!r.equal) o.fail(r.witness.value_or("tensors differ"));
        if (static_cast<Int>(r.coproduct_terms) != expected || static_cast<Int>(r.rearranged_terms) != expected) {
          o.fail("term count at b=" + std::to_string(b) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  return o;
}

Outcome bigebra() {
  Outcome o;
  for (const AtomContext& ctx : {AtomContext{}, AtomContext{"s", 1, 3, 2}}) {
    for (Int n = 1; n <= 6; ++n) {
      for (const Atom& a : {Atom::zseg(0, n, ctx), Atom::zfin(0, n, ctx)}) {
        ++o.cases;
        if (auto w = coassociativity_witness(RingElement(a))) o.fail(*w);
      }
    }
  }
  std::mt19937_64 rng(VerifyOptions{}.seed);
  for (int i = 0; i < 200; ++i) {
    ++o.cases;
    const auto x = random_segment_product(rng, 6);
    const auto y = random_segment_product(rng, 6);
    if (auto w = multiplicativity_witness(x, y)) o.fail(*w);
  }
  return o;
}

Outcome residue_count() {
  Outcome o;
  for (Int ep = 1; ep <= 12; ++ep) {
    for (Int sp = 1; sp <= 12; ++sp) {
      for (Int k = 1; k <= 36; ++k) {
        for (Int delta = 0; delta < ep; ++delta) {
          if (!y_count_admissible(ep, sp, k, delta)) continue;
          ++o.cases;
          const Int got = y_count(ep, sp, k, delta);
          if (got != k * std::gcd(ep, sp) / ep || got != oracle::y_count(ep, sp, k, delta)) o.fail("count differs");
        }
      }
    }
  }
  return o;
}

Outcome unitriangular() {
  Outcome o;
  all_pass(verify_unitriangular(VerifyOptions{}), o);
  return o;
}

Outcome chain_consistency() {
  Outcome o;
  for (Int ell : {3, 5, 7}) {
    for (Int a = 1; a <= 4; ++a) {
      for (Int eps = 1; eps <= a; ++eps) {
        if (a % eps) continue;
        for (Int n = 1; n <= 5; ++n) {
          for (Int s = 1; s <= 4; ++s) {
            try {
              check_conjecture77_params(a, n, s, eps, ell);
            } catch (const DomainError&) {
              continue;
            }
            ++o.cases;
            const auto r = check_conjecture77(a, n, s, eps, ell);
            const auto lhs = oracle::termwise_reduction_chains(a, n, s, eps);
            if (!r.consistent) o.fail(r.witness.value_or("chains differ"));
            if (r.lhs_chains != ChainMultiset(lhs.begin(), lhs.end())) o.fail("reduction side differs from oracle");
          }
        }
      }
    }
  }
  o.detail = o.pass ? "necessary-condition evidence, not proof" : o.detail;
  return o;
}

Outcome reduction_constraints() {
  Outcome o;
  all_pass(verify_reduction(VerifyOptions{}), o);
  return o;
}

Outcome census_bijections() {
  Outcome o;
  all_pass(verify_census(VerifyOptions{}), o);
  if (census_contexts().size() < 3) o.fail("fewer than three contexts");
  return o;
}

Outcome arith_oracle() {
  Outcome o;
  for (Int ell = 2; ell <= 31; ++ell) {
    if (!oracle::is_prime(ell)) continue;
    for (Int q = 2; q <= 32; ++q) {
      if (q % ell == 0) continue;
      const PrimePair pair(q, ell);
      for (Int n = 1; n <= 64; ++n) {
        ++o.cases;
        if (c_value(pair, n) != oracle::c_value(q, ell, n)) {
          o.fail("q=" + std::to_string(q) + " ell=" + std::to_string(ell) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return o;
}

struct Property {
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Property> properties{
      {"t_formula_integral", 1.0, t_formula},
      {"partner_w_unique", 1.0, partner_uniqueness},
      {"mackey_rearrangement", 10.0, mackey},
      {"bigebra_laws", 5.0, bigebra},
      {"residue_count", 5.0, residue_count},
      {"unitriangular_logic", 5.0, unitriangular},
      {"chain_consistency", 10.0, chain_consistency},
      {"reduction_constraints", 5.0, reduction_constraints},
      {"census_bijections", 30.0, census_bijections},
      {"arith_oracle", 5.0, arith_oracle},
  };
  int failures = 0;
  int index = 0;
  for (const auto& p : properties) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = p.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > p.limit_s) o.fail("over time limit");
    if (!o.pass) ++failures;
    std::printf("%s %2d %-22s cases=%-6ld time=%.3fs limit=%.0fs%s%s\n", o.pass ? "PASS" : "FAIL", index, p.name,
                o.cases, secs, p.limit_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%s: %d/%zu properties passed\n", failures ? "FAIL" : "PASS",
              static_cast<int>(properties.size()) - failures, properties.size());
  return failures ? 1 : 0;
}
