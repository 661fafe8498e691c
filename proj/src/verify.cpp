#include "segcalc/verify.hpp"

#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "segcalc/errors.hpp"
#include "segcalc/jl_transfer.hpp"
#include "segcalc/parallel.hpp"

namespace segcalc {

namespace {

using nlohmann::json;

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

CheckResult result(std::string check, json params) { return CheckResult{std::move(check), std::move(params), true, {}}; }

void record_failure(CheckResult& r, const std::string& witness) {
  if (r.pass) r.witness = witness;
  r.pass = false;
}

std::vector<Int> primes_up_to(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<CheckResult> flatten(std::vector<std::vector<CheckResult>> parts) {
  std::vector<CheckResult> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

// ------------------------------------------------------------ t and w

std::vector<CheckResult> verify_tof(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (Int ell : opts.ells) {
    for (int v = 0; v <= opts.v_max; ++v) {
      const Int c = ipow(ell, v);
      CheckResult r = result("tof", {{"ell", ell}, {"c", c}});
      Int tested = 0;
      Int prev_t = 0;
      for (Int w = 1; w <= opts.w_max; ++w) {
        if (!is_admissible_triple(w, c, ell)) continue;
        ++tested;
        try {
          const Int t = t_of(w, c, ell);
          if (t < 1) record_failure(r, "t(" + std::to_string(w) + ") = " + std::to_string(t));
          if (prev_t && t >= prev_t) record_failure(r, "t not decreasing at w=" + std::to_string(w));
          prev_t = t;
        } catch (const InconsistencyError& e) {
          record_failure(r, e.what());
        }
      }
      r.params["tested"] = tested;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> verify_lemma57(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& line : partner_sweep(opts.ells, opts.v_max, opts.w_max)) {
    CheckResult r = result("lemma57", {{"ell", line.ell}, {"c", line.c}, {"tested", line.tested}});
    if (line.counterexamples) record_failure(r, *line.witness);
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------ ring identities

std::vector<CheckResult> verify_mackey(const VerifyOptions& opts) {
  std::vector<std::tuple<Int, Int, Int>> cases;
  for (Int b = 1; b <= opts.b_max; ++b) {
    for (Int n = 2; n <= opts.n_max; ++n) {
      for (Int k = 1; k <= n - 1; ++k) cases.emplace_back(b, n, k);
    }
  }
  return parallel_map(
      cases.size(),
      [&](std::size_t i) {
        const auto [b, n, k] = cases[i];
        const MackeyResult m = check_mackey_rearrangement(b, n, k);
        const Int expected = binomial(k + b - 1, b - 1) * binomial(n - k + b - 1, b - 1);
        CheckResult r = result("mackey", {{"b", b}, {"n", n}, {"k", k}, {"terms", m.coproduct_terms}});
        if (!m.equal) record_failure(r, m.witness.value_or("tensors differ"));
        if (static_cast<Int>(m.coproduct_terms) != expected || static_cast<Int>(m.rearranged_terms) != expected) {
          record_failure(r, "term counts " + std::to_string(m.coproduct_terms) + "/" +
                                std::to_string(m.rearranged_terms) + " vs " + std::to_string(expected));
        }
        return r;
      },
      opts.threads);
}

std::optional<std::string> coassociativity_witness(const RingElement& x) {
  const Tensor d = coproduct(x);
  const Tensor left = d.apply_coproduct(0);
  const Tensor right = d.apply_coproduct(1);
  if (left == right) return std::nullopt;
  return "coassociativity fails on " + format(x);
}

std::optional<std::string> multiplicativity_witness(const RingElement& x, const RingElement& y) {
  if (coproduct(x * y) == coproduct(x) * coproduct(y)) return std::nullopt;
  return "Delta(xy) != Delta(x)Delta(y) for x = " + format(x) + ", y = " + format(y);
}

RingElement random_segment_product(std::mt19937_64& rng, Int n_max) {
  static const std::vector<AtomContext> contexts{{"sigma", 1, 0, 1}, {"sigma", 2, 0, 3}, {"rho", 1, 3, 2}, {"tau", 1, 0, 1}};
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<std::size_t> ctx_dist(0, contexts.size() - 1);
  std::uniform_int_distribution<Int> exp_dist(-3, 3);
  std::bernoulli_distribution finite(0.3);
  const int count = count_dist(rng);
  Int budget = n_max;
  RingElement out = RingElement::unit();
  for (int i = 0; i < count && budget > 0; ++i) {
    std::uniform_int_distribution<Int> len_dist(1, std::min<Int>(budget, 3));
    const Int len = len_dist(rng);
    budget -= len;
    const Atom atom = finite(rng) ? Atom::zfin(exp_dist(rng), len, {"tau1", 1, 0, 1})
                                  : Atom::zseg(exp_dist(rng), len, contexts[ctx_dist(rng)]);
    out = out * RingElement(atom);
  }
  return out;
}

std::vector<CheckResult> verify_bigebra(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::vector<AtomContext> contexts{{"sigma", 1, 0, 1}, {"sigma", 1, 0, 2}, {"sigma", 2, 3, 2}, {"sigma", 1, 4, 1}};
  CheckResult atoms = result("bigebra_atoms", {{"n_max", opts.atom_n_max}});
  Int tested = 0;
  for (const auto& ctx : contexts) {
    for (Int n = 1; n <= opts.atom_n_max; ++n) {
      for (Int e = -2; e <= 2; ++e) {
        for (const Atom& atom : {Atom::zseg(e, n, ctx), Atom::zfin(e, n, ctx)}) {
          ++tested;
          const RingElement x(atom);
          if (auto w = coassociativity_witness(x)) record_failure(atoms, *w);
          // Twisting commutes with the coproduct.
          for (Int j : {1, 2}) {
            if (coproduct(twist(x, j)) != coproduct(x).twisted(j)) {
              record_failure(atoms, "twist does not commute with Delta on " + format(x));
            }
          }
        }
      }
    }
  }
  atoms.params["tested"] = tested;
  out.push_back(std::move(atoms));

  CheckResult products = result("bigebra_products", {{"samples", opts.random_products}, {"seed", opts.seed}});
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.random_products; ++i) {
    const RingElement x = random_segment_product(rng, opts.atom_n_max);
    const RingElement y = random_segment_product(rng, opts.atom_n_max);
    if (auto w = multiplicativity_witness(x, y)) record_failure(products, *w);
    if (auto w = coassociativity_witness(x)) record_failure(products, *w);
  }
  out.push_back(std::move(products));
  return out;
}

// ------------------------------------------------------------ counting

std::vector<CheckResult> verify_y_count(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (Int ep = 1; ep <= opts.e_max; ++ep) {
    for (Int sp = 1; sp <= opts.s_max; ++sp) {
      for (Int k = 1; k <= opts.k_max; ++k) {
        for (Int delta = 0; delta < ep; ++delta) {
          if (!y_count_admissible(ep, sp, k, delta)) continue;
          const Int got = y_count(ep, sp, k, delta);
          const Int want = y_count_expected(ep, sp, k);
          CheckResult r = result("y_count", {{"e_prime", ep}, {"s_prime", sp}, {"k", k}, {"delta", delta}, {"count", got}});
          if (got != want) record_failure(r, "expected " + std::to_string(want));
          out.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify_unitriangular(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (Int n = 1; n <= opts.partition_n_max; ++n) {
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<Int> dist(-5, 5);
    for (int s = 0; s < opts.random_matrices; ++s) {
      CheckResult r = result("unitriangular", {{"n", n}, {"sample", s}, {"seed", opts.seed}});
      const UniTriMatrix e = random_unitriangular(n, rng);
      if (!unitriangular_kernel_trivial(e)) record_failure(r, "minimal-mu step failed");
      std::vector<Int> d(e.size());
      for (auto& x : d) x = dist(rng);
      if (unitriangular_solve(e, e.apply(d)) != d) record_failure(r, "solve round trip");
      const UniTriMatrix inv = unitriangular_inverse(e);
      const UniTriMatrix id = UniTriMatrix::identity(e.index());
      if (!is_unitriangular(inv.index(), inv.entries())) record_failure(r, "inverse is not unitriangular");
      if (e * inv != id || inv * e != id) record_failure(r, "inverse round trip");
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> verify_conjecture77(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (Int ell : opts.c77_ells) {
    for (Int a = 1; a <= opts.c77_a_max; ++a) {
      for (Int eps = 1; eps <= a; ++eps) {
        if (a % eps != 0) continue;
        for (Int n = 1; n <= opts.c77_n_max; ++n) {
          for (Int s = 1; s <= opts.c77_s_max; ++s) {
            try {
              check_conjecture77_params(a, n, s, eps, ell);
            } catch (const DomainError&) {
              continue;
            }
            const auto res = check_conjecture77(a, n, s, eps, ell);
            CheckResult r = result("conjecture77", {{"a", a},
                                                    {"n", n},
                                                    {"s_tilde", s},
                                                    {"eps", eps},
                                                    {"ell", ell},
                                                    {"chains", res.lhs_chains.size()},
                                                    {"evidence", "necessary-condition evidence, not proof"}});
            if (!res.consistent) record_failure(r, res.witness.value_or("chain multisets differ"));
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify_twist(const VerifyOptions&) {
  std::vector<CheckResult> out;
  for (Int modulus : {2, 3, 4}) {
    for (Int n = 1; n <= 4; ++n) {
      const RingElement x = residue_orbit_sum(modulus, n);
      for (Int j = -3; j <= 3; ++j) {
        CheckResult r = result("twist", {{"modulus", modulus}, {"n", n}, {"j", j}});
        const auto res = twist_multiplicity_symmetry(x, j);
        if (!res.invariant || !res.multiplicities_match) record_failure(r, res.witness.value_or("not twist invariant"));
        if (coproduct(twist(x, j)) != coproduct(x).twisted(j)) record_failure(r, "twist does not commute with Delta");
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ parameters

std::vector<CheckResult> verify_reduction(const VerifyOptions&) {
  struct Case {
    Int q, ell, n_tors, shift, a, n_mod, shift_mod;
    bool valid;
    const char* failing;
  };
  const std::vector<Case> cases{
      {2, 7, 3, 1, 3, 1, 3, true, ""},
      {3, 2, 4, 1, 2, 1, 2, true, ""},
      {2, 7, 2, 1, 2, 1, 2, false, kPrimeToEllConstraint},
  };
  std::vector<CheckResult> out;
  for (const auto& c : cases) {
    const PrimePair pair(c.q, c.ell);
    CuspidalParam sigma{1, c.n_tors, c.shift, Rational(0), "theta", pair, std::nullopt};
    ModLReduction red{c.a, c.n_mod, c.shift_mod, 1, epsilon(pair, c.n_mod), std::nullopt, std::nullopt};
    CheckResult r = result("reduction", json::parse("{}"));
    r.params = to_json(sigma);
    r.params.update(to_json(red));
    r.params["expect_valid"] = c.valid;
    const ValidationReport rep = validate_reduction(sigma, red);
    if (rep.valid() != c.valid) record_failure(r, "validity differs");
    if (!c.valid && (!rep.first_failure() || rep.first_failure()->name != c.failing)) {
      record_failure(r, std::string("expected failing constraint ") + c.failing);
    }
    out.push_back(std::move(r));
  }
  struct ACase {
    Int q, ell, n_tors, d;
    std::set<Int> expected;
  };
  for (const auto& c : std::vector<ACase>{{2, 7, 3, 3, {1, 3}}, {2, 3, 4, 4, {1}}, {5, 3, 1, 1, {1}}}) {
    const PrimePair pair(c.q, c.ell);
    CheckResult r = result("admissible_a", {{"q", c.q}, {"ell", c.ell}, {"n_tors", c.n_tors}, {"d", c.d}});
    // Direct reading of the constraint system, candidate by candidate.
    std::set<Int> brute;
    for (Int a = 1; a <= c.n_tors; ++a) {
      if (c.n_tors % a || c.d % a) continue;
      const Int n_mod = prime_to_ell_part(c.n_tors / a, c.ell);
      CuspidalParam sigma{1, c.n_tors, 1, Rational(0), "theta", pair, c.d};
      ModLReduction red{a, n_mod, a, 1, epsilon(pair, n_mod), std::nullopt, std::nullopt};
      if (validate_reduction(sigma, red).valid()) brute.insert(a);
    }
    const auto got = enumerate_admissible_a(pair, c.n_tors, c.d);
    if (got != c.expected || brute != c.expected) record_failure(r, "admissible a set differs");
    r.params["got"] = got;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<UniverseConfig> census_contexts() {
  std::vector<UniverseConfig> out;
  auto make = [](Int q, Int ell, std::optional<Int> d) {
    UniverseConfig c;
    c.q = q;
    c.ell = ell;
    c.m_max = 4;
    c.d = d;
    c.n_tors_max = 12;
    c.shift_max = 2;
    c.k_max = 4;
    c.u_max = 2;
    c.levels = {Rational(0), Rational(1, 2)};
    c.endos = {"theta", "theta'"};
    return c;
  };
  out.push_back(make(2, 7, std::nullopt));
  out.push_back(make(2, 3, std::nullopt));
  out.push_back(make(3, 2, std::nullopt));
  out.push_back(make(4, 5, 4));
  return out;
}

std::vector<CheckResult> verify_census(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& config : census_contexts()) {
    const Universe u = build_universe(config, opts.threads);
    json ctx{{"q", config.q}, {"ell", config.ell}, {"tuples", u.tuples.size()}, {"rejected", u.rejected.size()}};
    if (config.d) ctx["d"] = *config.d;

    CheckResult gen = result("census_universe", ctx);
    for (const auto& t : u.tuples) {
      const auto rep = validate_reduction(t.sigma, t.red);
      if (!rep.valid()) record_failure(gen, "stored tuple fails " + rep.first_failure()->name);
      if (t.inv.w > 1 && (config.ell - 1) % prime_to_ell_part(t.inv.w, config.ell) != 0) {
        record_failure(gen, "prime-to-ell part of w does not divide ell - 1");
      }
      if (t.red.a > 1 && t.inv.c <= 1) record_failure(gen, "a > 1 with c = 1");
      if (t_of(t.inv.w, t.inv.c, config.ell) != t.inv.t) record_failure(gen, "stored t differs");
    }
    const Universe again = build_universe(config, 1);
    if (again.tuples != u.tuples) record_failure(gen, "regeneration changed the universe");
    out.push_back(std::move(gen));

    CheckResult cells = result("census_cells", ctx);
    Int compared = 0;
    for (const auto& [w, j] : census_cells(u)) {
      for (Int m = 1; m <= config.m_max; ++m) {
        const auto rep = census_equalities(u, w, j, m);
        ++compared;
        if (!rep.pass) record_failure(cells, rep.first_unmatched.value_or("mismatch"));
      }
    }
    cells.params["cells"] = compared;
    cells.params["note"] = kSyntheticModelNote;
    out.push_back(std::move(cells));

    CheckResult transfer_check = result("transfer_cells", ctx);
    Int transferred = 0;
    for (const auto& rep : transfer_universe(u, opts.threads)) {
      transferred += static_cast<Int>(rep.sources);
      if (!rep.pass) record_failure(transfer_check, rep.witness.value_or("transfer cell failed"));
    }
    transfer_check.params["source_classes"] = transferred;
    out.push_back(std::move(transfer_check));

    // Negative control: dropping one Speh record from the largest cell must be seen.
    CheckResult control = result("census_negative_control", ctx);
    std::optional<std::tuple<Int, Rational, Int>> target;
    std::size_t best = 0;
    for (const auto& [w, j] : census_cells(u)) {
      for (Int m = 1; m <= config.m_max; ++m) {
        const std::size_t size = e_view(u, w, j, m).size();
        if (size > best) {
          best = size;
          target = {w, j, m};
        }
      }
    }
    if (!target) {
      record_failure(control, "universe has no Speh records");
    } else {
      const auto [w, j, m] = *target;
      auto records = e_view(u, w, j, m);
      records.erase(records.begin());
      if (census_equalities(u, w, j, m, records).pass) record_failure(control, "removed record went unnoticed");
    }
    out.push_back(std::move(control));
  }
  return out;
}

int c_valuation_by_modpow(const PrimePair& pair, Int n) {
  const Int ell = pair.ell();
  int v = 0;
  Int modulus = ell;
  while (pow_mod(pair.q(), n, modulus) == 1) {
    ++v;
    if (__builtin_mul_overflow(modulus, ell, &modulus) || modulus > (Int{1} << 62)) {
      throw std::overflow_error("c_valuation_by_modpow: valuation exceeds 64-bit moduli");
    }
  }
  return v;
}

std::vector<CheckResult> verify_arith(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (Int ell : primes_up_to(opts.ell_max)) {
    CheckResult r = result("arith_c_value", {{"ell", ell}, {"q_max", opts.q_max}, {"n_max", opts.arith_n_max}});
    Int tested = 0;
    for (Int q = 2; q <= opts.q_max; ++q) {
      if (q % ell == 0) continue;
      const PrimePair pair(q, ell);
      for (Int n = 1; n <= opts.arith_n_max; ++n) {
        ++tested;
        if (c_valuation(pair, n) != c_valuation_by_modpow(pair, n)) {
          record_failure(r, "q=" + std::to_string(q) + ", n=" + std::to_string(n));
        }
      }
    }
    r.params["tested"] = tested;
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"arith",   "tof",     "lemma57",       "reduction",    "mackey",
                                              "bigebra", "y_count", "unitriangular", "conjecture77", "twist",
                                              "census"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
  static const std::map<std::string, Suite> suites{
      {"arith", verify_arith},     {"tof", verify_tof},         {"lemma57", verify_lemma57},
      {"reduction", verify_reduction}, {"mackey", verify_mackey}, {"bigebra", verify_bigebra},
      {"y_count", verify_y_count}, {"unitriangular", verify_unitriangular},
      {"conjecture77", verify_conjecture77}, {"twist", verify_twist}, {"census", verify_census}};
  if (name == "all") {
    std::vector<std::vector<CheckResult>> parts;
    for (const auto& n : suite_names()) parts.push_back(suites.at(n)(opts));
    return flatten(std::move(parts));
  }
  const auto it = suites.find(name);
  if (it == suites.end()) throw DomainError("unknown suite: " + name);
  return it->second(opts);
}

}  // namespace segcalc
