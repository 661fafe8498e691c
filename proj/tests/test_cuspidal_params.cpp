#include <doctest.h>

#include "oracles.hpp"
#include "segcalc/cuspidal_params.hpp"
#include "segcalc/errors.hpp"

using namespace segcalc;

namespace {

CuspidalParam lift(Int q, Int ell, Int n_tors, Int shift, std::optional<Int> d = std::nullopt) {
  return CuspidalParam{1, n_tors, shift, Rational(0), "theta", PrimePair(q, ell), d};
}

ModLReduction reduction(const PrimePair& pair, Int a, Int n_mod, Int shift_mod) {
  return ModLReduction{a, n_mod, shift_mod, 1, epsilon(pair, n_mod), std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("omega examples") {
  CHECK(omega(PrimePair(2, 7), 1, 1) == 3);
  CHECK(omega(PrimePair(2, 7), 3, 1) == 1);
  CHECK(omega(PrimePair(4, 3), 1, 1) == 1);
}

TEST_CASE("epsilon examples") {
  CHECK(epsilon(PrimePair(2, 7), 1) == 3);
  CHECK(epsilon(PrimePair(3, 5), 1) == 4);
  CHECK(epsilon(PrimePair(2, 7), 3) == 1);
}

TEST_CASE("epsilon divides ell - 1") {
  for (Int ell : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (Int q = 2; q <= 40; ++q) {
      if (q % ell == 0) continue;
      for (Int n = 1; n <= 30; ++n) {
        const Int e = epsilon(PrimePair(q, ell), n);
        CHECK((ell - 1) % e == 0);
        const Int ord = oracle::mult_order(q, ell);
        CHECK(e == ord / std::gcd(ord, n));
      }
    }
  }
}

TEST_CASE("epsilon_from_supercuspidal examples") {
  CHECK(epsilon_from_supercuspidal(6, 4) == 2);
  CHECK(epsilon_from_supercuspidal(4, 1) == 1);
  CHECK(epsilon_from_supercuspidal(3, 6) == 3);
}

TEST_CASE("validate_reduction accepts and rejects the worked examples") {
  {
    const PrimePair p(2, 7);
    const auto rep = validate_reduction(lift(2, 7, 3, 1), reduction(p, 3, 1, 3));
    CHECK(rep.valid());
  }
  {
    const PrimePair p(3, 2);
    const auto rep = validate_reduction(lift(3, 2, 4, 1), reduction(p, 2, 1, 2));
    CHECK(rep.valid());
  }
  {
    const PrimePair p(2, 7);
    const auto rep = validate_reduction(lift(2, 7, 2, 1), reduction(p, 2, 1, 2));
    CHECK_FALSE(rep.valid());
    REQUIRE(rep.first_failure() != nullptr);
    CHECK(rep.first_failure()->name == kPrimeToEllConstraint);
    CHECK(rep.get(kTorsionConstraint).passed);
    CHECK(rep.get(kShiftConstraint).passed);
  }
}

TEST_CASE("validate_reduction reports each constraint") {
  const PrimePair p(2, 7);
  SUBCASE("a does not divide n_tors") {
    const auto rep = validate_reduction(lift(2, 7, 4, 1), reduction(p, 3, 1, 3));
    CHECK_FALSE(rep.get(kTorsionConstraint).passed);
  }
  SUBCASE("wrong n_mod") {
    const auto rep = validate_reduction(lift(2, 7, 3, 1), reduction(p, 1, 1, 1));
    CHECK_FALSE(rep.get(kTorsionConstraint).passed);
  }
  SUBCASE("wrong shift") {
    const auto rep = validate_reduction(lift(2, 7, 3, 1), reduction(p, 3, 1, 2));
    CHECK_FALSE(rep.get(kShiftConstraint).passed);
  }
  SUBCASE("supercuspidal gcd") {
    auto red = reduction(p, 3, 1, 3);
    red.sc_eps = 3;
    red.sc_shift = 3;
    CHECK(validate_reduction(lift(2, 7, 3, 1), red).valid());
    red.sc_shift = 2;
    const auto rep = validate_reduction(lift(2, 7, 3, 1), red);
    CHECK_FALSE(rep.get(kSupercuspidalConstraint).passed);
  }
  SUBCASE("a divides d") {
    const auto rep = validate_reduction(lift(2, 7, 3, 1, 2), reduction(p, 3, 1, 3));
    CHECK_FALSE(rep.valid());
    CHECK(validate_reduction(lift(2, 7, 3, 1, 6), reduction(p, 3, 1, 3)).valid());
  }
}

TEST_CASE("dropping supercuspidal data never invalidates the first three constraints") {
  for (Int q : {2, 3, 4, 5}) {
    for (Int ell : {2, 3, 5, 7}) {
      if (q % ell == 0) continue;
      const PrimePair p(q, ell);
      for (Int n = 1; n <= 12; ++n) {
        for (Int a = 1; a <= n; ++a) {
          if (n % a) continue;
          const Int n_mod = oracle::prime_to(n / a, ell);
          auto red = reduction(p, a, n_mod, a);
          for (Int se = 1; se <= 4; ++se) {
            for (Int ss = 1; ss <= 4; ++ss) {
              red.sc_eps = se;
              red.sc_shift = ss;
              const auto full = validate_reduction(lift(q, ell, n, 1), red);
              auto bare = red;
              bare.sc_eps.reset();
              bare.sc_shift.reset();
              const auto partial = validate_reduction(lift(q, ell, n, 1), bare);
              for (const char* name : {kTorsionConstraint, kShiftConstraint, kPrimeToEllConstraint}) {
                if (full.get(name).passed) CHECK(partial.get(name).passed);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("eps divides a and residues cover Z/eps on valid reductions") {
  for (Int q : {2, 3, 4, 5, 7}) {
    for (Int ell : {2, 3, 5, 7, 13}) {
      if (q % ell == 0) continue;
      const PrimePair p(q, ell);
      for (Int n = 1; n <= 40; ++n) {
        for (Int a = 2; a <= n; ++a) {
          if (n % a) continue;
          const auto red = reduction(p, a, oracle::prime_to(n / a, ell), a);
          if (!validate_reduction(lift(q, ell, n, 1), red).valid()) continue;
          CHECK(a % red.eps == 0);
          std::set<Int> residues;
          for (Int i = 0; i < a; ++i) residues.insert(i % red.eps);
          CHECK(static_cast<Int>(residues.size()) == red.eps);
        }
      }
    }
  }
}

TEST_CASE("w_invariant examples") {
  CHECK(w_invariant(1, 1) == 1);
  CHECK(w_invariant(2, 3) == 6);
  CHECK(w_invariant(3, 1) == 3);
}

TEST_CASE("t_of examples") {
  CHECK(t_of(1, 7, 7) == 7);
  CHECK(t_of(3, 7, 7) == 2);
  CHECK(t_of(3, 9, 3) == 2);
  CHECK_THROWS_AS(t_of(7, 7, 7), InconsistencyError);
  CHECK_THROWS_AS(t_of(2, 6, 3), DomainError);
}

TEST_CASE("t_of matches the rational formula on every triple") {
  for (Int ell : {2, 3, 5, 7, 11, 13}) {
    for (int v = 0; v <= 6; ++v) {
      const Int c = ipow(ell, v);
      for (Int w = 1; w <= 64; ++w) {
        const auto expected = oracle::t_value(w, c, ell);
        if (expected) {
          CHECK(t_of(w, c, ell) == *expected);
        } else {
          CHECK_THROWS_AS(t_of(w, c, ell), InconsistencyError);
        }
        CHECK(is_admissible_triple(w, c, ell) == oracle::admissible(w, c, ell));
        if (oracle::admissible(w, c, ell)) CHECK(expected.has_value());
      }
    }
  }
}

TEST_CASE("w_prime_to_ell_check examples") {
  ModLReduction red;
  red.sc_eps = 3;
  CHECK(w_prime_to_ell_check(6, red, 2));
  red.sc_eps = 1;
  CHECK(w_prime_to_ell_check(4, red, 2));
  red.sc_eps = 5;
  CHECK_FALSE(w_prime_to_ell_check(6, red, 2));
  CHECK_THROWS_AS(w_prime_to_ell_check(1, red, 2), DomainError);
}

TEST_CASE("b_of examples") {
  CHECK(b_of(1, 4) == 4);
  CHECK(b_of(2, 6) == 3);
  CHECK_THROWS_AS(b_of(4, 6), InconsistencyError);
}

TEST_CASE("twist_congruence examples") {
  CHECK(twist_congruence(1, 5));
  CHECK(twist_congruence(3, 6));
  CHECK_FALSE(twist_congruence(4, 6));
}

TEST_CASE("records round-trip through key=value and JSON") {
  CuspidalParam sigma{2, 6, 3, Rational(3, 2), "theta'", PrimePair(2, 7), 6};
  ModLReduction red{3, 1, 9, 2, 3, 3, 3};
  const auto kv = KeyValues::parse(to_keyvalue(sigma) + " " + to_keyvalue(red));
  CHECK(cuspidal_param_from_keyvalue(kv) == sigma);
  CHECK(reduction_from_keyvalue(kv) == red);
  const auto j = to_json(sigma);
  for (const char* key : {"deg", "n_tors", "shift", "level", "endo"}) CHECK(j.contains(key));
  CHECK(cuspidal_param_from_json(j) == sigma);
  const auto jr = to_json(red);
  for (const char* key : {"a", "n_mod", "shift_mod", "k", "eps", "sc_shift", "sc_eps"}) CHECK(jr.contains(key));
  CHECK(reduction_from_json(jr) == red);
}
