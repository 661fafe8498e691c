#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/keyvalue.hpp"

namespace segcalc {

/// Numeric shadow of an ell-adic cuspidal representation.
///
/// Level and endo-class are opaque: they are carried, compared and
/// filtered on, never computed. `d` is the optional ambient reduced degree;
/// when present it activates the "a divides d" check.
struct CuspidalParam {
  Int deg = 1;
  Int n_tors = 1;
  Int shift = 1;
  Rational level{0};
  std::string endo = "theta";
  PrimePair ctx{2, 3};
  std::optional<Int> d;

  void check() const;
  friend bool operator==(const CuspidalParam&, const CuspidalParam&) = default;
};

/// Mod-ell side of a reduction: length a, torsion number, shift, k, epsilon,
/// and (optionally) the supercuspidal data s(alpha), eps(alpha).
struct ModLReduction {
  Int a = 1;
  Int n_mod = 1;
  Int shift_mod = 1;
  Int k = 1;
  Int eps = 1;
  std::optional<Int> sc_shift;
  std::optional<Int> sc_eps;

  void check() const;
  friend bool operator==(const ModLReduction&, const ModLReduction&) = default;
};

/// Order of q^(n*s) in (Z/ell)^x.
Int omega(const PrimePair& pair, Int n_mod, Int shift_mod);

/// Order of q^n in (Z/ell)^x.
Int epsilon(const PrimePair& pair, Int n_mod);

/// gcd(eps(alpha), s(alpha)).
Int epsilon_from_supercuspidal(Int sc_eps, Int sc_shift);

struct ConstraintResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ConstraintResult> constraints;

  bool valid() const;
  /// First failing applicable constraint, if any.
  const ConstraintResult* first_failure() const;
  const ConstraintResult& get(const std::string& name) const;
};

// Constraint names, in report order.
inline constexpr const char* kTorsionConstraint = "torsion";            // (i)
inline constexpr const char* kShiftConstraint = "shift";                // (ii)
inline constexpr const char* kPrimeToEllConstraint = "prime_to_ell_a";  // (iii)
inline constexpr const char* kSupercuspidalConstraint = "sc_gcd";       // (iv)
inline constexpr const char* kEpsilonConstraint = "eps_value";
inline constexpr const char* kDegreeConstraint = "a_divides_d";

ValidationReport validate_reduction(const CuspidalParam& sigma, const ModLReduction& red);

/// w = k * a.
Int w_invariant(Int k, Int a);

/// Number t of congruent classes from t*w = c, c - 1 or c(ell-1)/ell
/// depending on where w sits relative to 1 and ell. Throws
/// InconsistencyError when the quotient is not a positive integer.
Int t_of(Int w, Int c, Int ell);

/// True when (w, c, ell) is a triple the counting formula can meet:
/// c is a power of ell, the prime-to-ell part of w divides ell - 1, ell | w
/// once w >= ell, and for w > 1 the ell-valuation of w stays below that of c.
bool is_admissible_triple(Int w, Int c, Int ell);

/// For w > 1: the prime-to-ell part of w equals eps(alpha). Whether it also
/// divides ell - 1 is left to is_admissible_triple.
bool w_prime_to_ell_check(Int w, const ModLReduction& red, Int ell);

/// b = [k : k0] / s.
Int b_of(Int shift, Int kk0);

/// Twisting by a character whose reduction has order `char_red_order`
/// stays in the congruence class iff that order divides n_tors.
bool twist_congruence(Int char_red_order, Int n_tors);

// Serialization: flat key=value records and JSON objects.
std::string to_keyvalue(const CuspidalParam& p);
std::string to_keyvalue(const ModLReduction& r);
CuspidalParam cuspidal_param_from_keyvalue(const KeyValues& kv);
ModLReduction reduction_from_keyvalue(const KeyValues& kv);

nlohmann::json to_json(const CuspidalParam& p);
nlohmann::json to_json(const ModLReduction& r);
nlohmann::json to_json(const ValidationReport& r);
CuspidalParam cuspidal_param_from_json(const nlohmann::json& j);
ModLReduction reduction_from_json(const nlohmann::json& j);

}  // namespace segcalc
