#pragma once

#include <compare>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "segcalc/cuspidal_params.hpp"
#include "segcalc/keyvalue.hpp"

namespace segcalc {

/// Generation bounds for a synthetic universe of parameter tuples.
///
/// The universe is a model: every stored tuple satisfies the reduction
/// constraint system, but tuples are records, not representations.
struct UniverseConfig {
  Int q = 2;
  Int ell = 3;
  Int m_max = 0;                  // degrees 1..m_max
  std::optional<Int> d;           // ambient reduced degree; absent = split form
  Int n_tors_max = 0;
  Int shift_max = 0;
  Int k_max = 1;
  std::optional<Int> u_max;       // cap on the ell-exponent u
  std::vector<Rational> levels{Rational(0)};
  std::vector<std::string> endos{"theta"};

  /// Keys: q, ell, m_max, d, n_tors_max, shift_max, k_max, u_max,
  /// levels (comma list of rationals), endos (comma list of labels).
  static UniverseConfig from_keyvalue(const KeyValues& kv);
  KeyValues to_keyvalue() const;
};

struct DerivedInvariants {
  Int eps = 1;
  Int omega = 1;
  Int w = 1;
  Int c = 1;
  Int t = 1;

  friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

struct UniverseTuple {
  CuspidalParam sigma;
  ModLReduction red;
  DerivedInvariants inv;

  friend bool operator==(const UniverseTuple&, const UniverseTuple&) = default;
};

struct RejectedTuple {
  CuspidalParam sigma;
  ModLReduction red;
  std::string reason;
};

/// Congruence-class key: the mod-ell invariant vector plus the base label
/// (degree, endo-class, level).
struct ClassKey {
  Int deg = 1;
  Int n_mod = 1;
  Int shift_mod = 1;
  Int k = 1;
  Int eps = 1;
  std::string endo;
  Rational level{0};

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend bool operator<(const ClassKey& x, const ClassKey& y);
};

ClassKey class_key(const UniverseTuple& t);

struct Universe {
  UniverseConfig config;
  std::vector<UniverseTuple> tuples;
  std::vector<RejectedTuple> rejected;

  PrimePair ctx() const { return PrimePair(config.q, config.ell); }
};

/// All a >= 1 dividing n_tors whose prime-to-ell part equals epsilon(q, n_mod)
/// (or a = 1), with n_mod the prime-to-ell part of n_tors / a; filtered by
/// a | d when d is given and by u <= u_max when a cap is given.
std::set<Int> enumerate_admissible_a(const PrimePair& pair, Int n_tors, std::optional<Int> d,
                                     std::optional<Int> u_max = std::nullopt);

/// Exhaustive, deterministic generation. Tuples whose t is not integral are
/// moved to `rejected` with the reason. `threads` = 0 picks the default.
Universe build_universe(const UniverseConfig& config, unsigned threads = 1);

struct CensusCell {
  Int w = 1;
  Rational j{0};
  std::optional<Int> m;
  Int count = 0;
  std::vector<ClassKey> classes;
};

/// Classes of tuples with the given w, level <= j and (when m is given)
/// degree dividing m.
CensusCell census_by_w(const Universe& u, Int w, const Rational& j, std::optional<Int> m = std::nullopt);

/// Every (w, level) pair that occurs, ascending.
std::vector<std::pair<Int, Rational>> census_cells(const Universe& u);

/// Speh representation Z(sigma~, r) reduced to its invariants.
struct SpehRecord {
  CuspidalParam source;  // sigma~
  ClassKey source_class;
  Int r = 1;
  Int deg = 1;  // r * deg(sigma~)
  Int ell = 2;
  Int n = 1;
  Int c = 1;
  Int w = 1;
  Int t = 1;
  Rational level{0};

  friend bool operator==(const SpehRecord&, const SpehRecord&) = default;
};

/// Transport of n, c, w, t (and level) from sigma~ to Z(sigma~, r).
SpehRecord speh_transport(const UniverseTuple& sigma, Int r);

/// Speh records of degree exactly m with w and level <= j, one per tuple
/// whose degree divides m.
std::vector<SpehRecord> e_view(const Universe& u, Int w, const Rational& j, Int m);

struct CensusEqualityReport {
  Int w = 1;
  Rational j{0};
  Int m = 1;
  Int a_count = 0;
  Int e_count = 0;
  std::size_t a_tuples = 0;
  std::size_t e_records = 0;
  std::optional<Int> split_count;
  bool pass = true;
  std::optional<std::string> first_unmatched;
};

/// Compares the cuspidal view with the Speh view for the cell (w, j, m):
/// tuple-by-tuple via speh_transport, then class-by-class. `e_records`
/// replaces the generated Speh view (negative controls). When a split
/// universe and its degree are supplied, its count for the same cell must
/// match as well.
CensusEqualityReport census_equalities(const Universe& u, Int w, const Rational& j, Int m,
                                       const std::optional<std::vector<SpehRecord>>& e_records = std::nullopt,
                                       const Universe* split = nullptr, std::optional<Int> split_m = std::nullopt);

nlohmann::json to_json(const ClassKey& k);
nlohmann::json to_json(const UniverseTuple& t);
nlohmann::json to_json(const RejectedTuple& t);
nlohmann::json to_json(const CensusCell& c);
nlohmann::json to_json(const SpehRecord& r);
nlohmann::json to_json(const CensusEqualityReport& r);
UniverseTuple universe_tuple_from_json(const nlohmann::json& j);

/// Note attached to generated reports: the counts check the formulas
/// against each other on a synthetic model.
inline constexpr const char* kSyntheticModelNote =
    "synthetic model: tuples satisfy the reduction constraint system; counts check mutual consistency "
    "of the formulas, not a census of actual representations";

}  // namespace segcalc
