#include <doctest.h>

#include "oracles.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/jl_transfer.hpp"
#include "segcalc/verify.hpp"

using namespace segcalc;

TEST_CASE("zelevinski_sign") {
  CHECK(zelevinski_sign(1) == 1);
  CHECK(zelevinski_sign(2) == -1);
  CHECK(zelevinski_sign(4) == -1);
  CHECK(zelevinski_sign(5) == 1);
  CHECK_THROWS_AS(zelevinski_sign(0), DomainError);
  for (Int r = 1; r <= 20; ++r) CHECK(zelevinski_sign(r) * zelevinski_sign(r) == 1);
}

TEST_CASE("infer_partner_w examples") {
  CHECK(infer_partner_w(1, 7, 7) == 1);
  CHECK(infer_partner_w(3, 7, 7) == 3);
  CHECK(infer_partner_w(3, 9, 3) == 3);
  CHECK_THROWS_AS(infer_partner_w(7, 7, 7), DomainError);
  CHECK_THROWS_AS(infer_partner_w(4, 49, 7), DomainError);
}

TEST_CASE("partner candidates equal a brute-force scan") {
  for (Int ell : {2, 3, 5, 7, 11, 13}) {
    for (int v = 0; v <= 4; ++v) {
      const Int c = ipow(ell, v);
      for (Int w = 1; w <= 64; ++w) {
        if (!oracle::admissible(w, c, ell)) continue;
        std::vector<Int> brute;
        const Int t = *oracle::t_value(w, c, ell);
        for (Int wp = w; wp <= c * ell; ++wp) {
          if (oracle::admissible(wp, c, ell) && *oracle::t_value(wp, c, ell) >= t) brute.push_back(wp);
        }
        CHECK(partner_candidates(w, c, ell) == brute);
        CHECK(brute == std::vector<Int>{w});
      }
    }
  }
}

TEST_CASE("uniqueness sweep over ell <= 31, c <= ell^6, w <= 64") {
  std::vector<Int> ells;
  for (Int p = 2; p <= 31; ++p) {
    if (oracle::is_prime(p)) ells.push_back(p);
  }
  for (const auto& line : partner_sweep(ells, 6, 64)) {
    CHECK(line.counterexamples == 0);
    CHECK(line.to_json()["pass"] == true);
  }
}

TEST_CASE("transfer keeps invariants and records the sign") {
  SpehRecord src;
  src.r = 1;
  src.deg = 3;
  src.ell = 7;
  src.n = 3;
  src.c = 7;
  src.w = 3;
  src.t = 2;
  const auto t1 = transfer(src);
  CHECK(t1.sign == 1);
  CHECK(same_invariants(t1.source, t1.target));
  CHECK(t1.target.r == 1);
  CHECK(t1.target.deg == 3);

  src.r = 2;
  src.deg = 6;
  const auto t2 = transfer(src);
  CHECK(t2.sign == -1);
  CHECK(t2.target.deg == 6);
  CHECK(same_invariants(t2.source, t2.target));
  CHECK(same_invariants(transfer(t2.target).target, src));

  src.t = 3;
  CHECK_THROWS_AS(transfer(src), DomainError);
  src.w = 7;
  CHECK_THROWS_AS(transfer(src), DomainError);

  const auto j = to_json(t2);
  CHECK(j.contains("source"));
  CHECK(j.contains("target"));
  CHECK(j["sign"] == -1);
}

TEST_CASE("transfer on universes is injective per cell") {
  for (const auto& config : census_contexts()) {
    const Universe u = build_universe(config);
    const auto reports = transfer_universe(u, 2);
    CHECK_FALSE(reports.empty());
    for (const auto& rep : reports) {
      CHECK(rep.pass);
      CHECK(static_cast<Int>(rep.images) == rep.a_count);
    }
  }
}
