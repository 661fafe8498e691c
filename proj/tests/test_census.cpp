#include <doctest.h>

#include "oracles.hpp"
#include "segcalc/census.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/verify.hpp"

using namespace segcalc;

namespace {

UniverseConfig small(Int q, Int ell) {
  UniverseConfig c;
  c.q = q;
  c.ell = ell;
  c.m_max = 4;
  c.n_tors_max = 6;
  c.shift_max = 2;
  c.k_max = 2;
  c.u_max = 1;
  c.levels = {Rational(0), Rational(1)};
  return c;
}

// Direct reading of the constraint system for one candidate a.
std::set<Int> brute_admissible_a(const PrimePair& pair, Int n_tors, Int d) {
  std::set<Int> out;
  for (Int a = 1; a <= n_tors; ++a) {
    if (n_tors % a || d % a) continue;
    const Int n_mod = oracle::prime_to(n_tors / a, pair.ell());
    const Int ord = oracle::mult_order(pair.q(), pair.ell());
    const Int eps = ord / std::gcd(ord, n_mod);
    if (a == 1 || oracle::prime_to(a, pair.ell()) == eps) out.insert(a);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_admissible_a examples") {
  CHECK(enumerate_admissible_a(PrimePair(2, 7), 3, 3) == std::set<Int>{1, 3});
  CHECK(enumerate_admissible_a(PrimePair(2, 3), 4, 4) == std::set<Int>{1});
  CHECK(enumerate_admissible_a(PrimePair(5, 3), 1, 1) == std::set<Int>{1});
  CHECK(enumerate_admissible_a(PrimePair(3, 2), 4, std::nullopt) == std::set<Int>{1, 2, 4});
  CHECK(enumerate_admissible_a(PrimePair(3, 2), 4, std::nullopt, 0) == std::set<Int>{4});
}

TEST_CASE("enumerate_admissible_a agrees with brute force") {
  for (Int q : {2, 3, 4, 5, 7, 8}) {
    for (Int ell : {2, 3, 5, 7, 11}) {
      if (q % ell == 0) continue;
      const PrimePair pair(q, ell);
      for (Int n = 1; n <= 40; ++n) {
        for (Int d : {1, 2, 3, 6, 12, 40}) CHECK(enumerate_admissible_a(pair, n, d) == brute_admissible_a(pair, n, d));
      }
    }
  }
}

TEST_CASE("empty bounds give an empty universe") {
  UniverseConfig c;
  c.q = 2;
  c.ell = 7;
  const Universe u = build_universe(c);
  CHECK(u.tuples.empty());
  CHECK(census_by_w(u, 1, Rational(5)).count == 0);
}

TEST_CASE("generated tuples re-validate and carry consistent invariants") {
  UniverseConfig c = small(2, 7);
  c.n_tors_max = 3;
  const Universe u = build_universe(c);
  REQUIRE_FALSE(u.tuples.empty());
  for (const auto& t : u.tuples) {
    CHECK(validate_reduction(t.sigma, t.red).valid());
    CHECK(t.inv.w == t.red.k * t.red.a);
    CHECK(t.inv.c == oracle::c_value(2, 7, t.sigma.n_tors));
    CHECK(t.inv.t == *oracle::t_value(t.inv.w, t.inv.c, 7));
    if (t.inv.w > 1) CHECK(6 % oracle::prime_to(t.inv.w, 7) == 0);
    if (t.red.a > 1) CHECK(t.inv.c > 1);
  }
}

TEST_CASE("generation is deterministic, thread-independent and monotone") {
  for (const auto& [q, ell] : std::vector<std::pair<Int, Int>>{{2, 7}, {3, 2}, {2, 3}}) {
    const UniverseConfig c = small(q, ell);
    const Universe one = build_universe(c, 1);
    const Universe four = build_universe(c, 4);
    CHECK(one.tuples == four.tuples);
    UniverseConfig bigger = c;
    bigger.n_tors_max += 3;
    bigger.k_max += 1;
    const Universe big = build_universe(bigger);
    for (const auto& t : one.tuples) CHECK(std::find(big.tuples.begin(), big.tuples.end(), t) != big.tuples.end());
    for (const auto& [w, j] : census_cells(one)) CHECK(census_by_w(one, w, j).count == census_by_w(four, w, j).count);
  }
}

TEST_CASE("rejected tuples are kept with a reason") {
  // k = 2 with ell = 2 and c = 2 gives w = 2 and v(w) = v(c): t is not integral.
  UniverseConfig c;
  c.q = 3;
  c.ell = 2;
  c.m_max = 2;
  c.n_tors_max = 1;
  c.shift_max = 1;
  c.k_max = 2;
  const Universe u = build_universe(c);
  bool found = false;
  for (const auto& r : u.rejected) {
    if (r.red.k == 2) found = true;
    CHECK_FALSE(r.reason.empty());
  }
  CHECK(found);
}

TEST_CASE("census_by_w filters") {
  const Universe u = build_universe(small(2, 7));
  // prime-to-7 part of w = 4 does not divide 6.
  CHECK(census_by_w(u, 4, Rational(10)).count == 0);
  CHECK(census_by_w(u, 5, Rational(10)).count == 0);
  CHECK(census_by_w(u, 1, Rational(1)).count >= census_by_w(u, 1, Rational(0)).count);

  Universe one;
  one.config = u.config;
  one.tuples = {u.tuples.front()};
  const auto& t = one.tuples.front();
  CHECK(census_by_w(one, t.inv.w, t.sigma.level).count == 1);
  CHECK(census_by_w(one, t.inv.w + 1, t.sigma.level).count == 0);
}

TEST_CASE("speh transport") {
  const Universe u = build_universe(small(2, 7));
  const auto& t = u.tuples.back();
  const SpehRecord r1 = speh_transport(t, 1);
  CHECK(r1.deg == t.sigma.deg);
  CHECK(r1.n == t.sigma.n_tors);
  CHECK(r1.t == t.inv.t);
  const SpehRecord r2 = speh_transport(t, 2);
  CHECK(r2.deg == 2 * t.sigma.deg);
  CHECK(r2.n == r1.n);
  CHECK(r2.c == r1.c);
  CHECK(r2.w == r1.w);
  CHECK(r2.t == r1.t);
  CHECK_THROWS_AS(speh_transport(t, 0), DomainError);

  std::vector<SpehRecord> all;
  for (const auto& x : u.tuples) {
    for (Int r = 1; r <= 3; ++r) all.push_back(speh_transport(x, r));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  }
}

TEST_CASE("census equalities hold cell by cell and catch corruption") {
  for (const auto& config : census_contexts()) {
    const Universe u = build_universe(config);
    for (const auto& [w, j] : census_cells(u)) {
      for (Int m = 1; m <= config.m_max; ++m) {
        const auto rep = census_equalities(u, w, j, m);
        CHECK(rep.pass);
        CHECK(rep.a_count == rep.e_count);
        auto records = e_view(u, w, j, m);
        if (records.empty()) continue;
        records.pop_back();
        const auto bad = census_equalities(u, w, j, m, records);
        CHECK_FALSE(bad.pass);
        CHECK(bad.first_unmatched.has_value());
      }
    }
  }
}

TEST_CASE("cuspidal-only universe has equal sides trivially") {
  UniverseConfig c = small(2, 7);
  c.m_max = 1;
  const Universe u = build_universe(c);
  for (const auto& [w, j] : census_cells(u)) CHECK(census_equalities(u, w, j, 1).pass);
}

TEST_CASE("split comparison") {
  const Universe u = build_universe(small(2, 7));
  const auto rep = census_equalities(u, 1, Rational(1), 2, std::nullopt, &u, 2);
  CHECK(rep.pass);
  REQUIRE(rep.split_count.has_value());
  CHECK(*rep.split_count == rep.a_count);
  UniverseConfig smaller = small(2, 7);
  smaller.n_tors_max = 1;
  const Universe v = build_universe(smaller);
  CHECK_FALSE(census_equalities(u, 1, Rational(1), 2, std::nullopt, &v, 2).pass);
  CHECK_THROWS_AS(census_equalities(u, 1, Rational(1), 2, std::nullopt, &v), DomainError);
}

TEST_CASE("config and records serialise") {
  const UniverseConfig c = small(2, 7);
  std::string text;
  const KeyValues kv = c.to_keyvalue();
  for (const auto& [k, v] : kv.values()) text += k + "=" + v + "\n";
  const UniverseConfig back = UniverseConfig::from_keyvalue(KeyValues::parse(text));
  CHECK(back.to_keyvalue().values() == c.to_keyvalue().values());
  const auto parsed = UniverseConfig::from_keyvalue(KeyValues::parse("# comment\nq=2 ell=7\nm_max=3 levels=0,1/2 endos=a,b"));
  CHECK(parsed.m_max == 3);
  CHECK(parsed.levels == std::vector<Rational>{Rational(0), Rational(1, 2)});
  CHECK(parsed.endos == std::vector<std::string>{"a", "b"});
  CHECK_THROWS(UniverseConfig::from_keyvalue(KeyValues::parse("q=2 ell=6")));

  const Universe u = build_universe(c);
  for (const auto& t : u.tuples) CHECK(universe_tuple_from_json(to_json(t)) == t);
  const auto report = to_json(census_equalities(u, 1, Rational(0), 2));
  CHECK(report.contains("note"));
}
