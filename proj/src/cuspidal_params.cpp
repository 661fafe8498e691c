#include "segcalc/cuspidal_params.hpp"

#include <numeric>
#include <sstream>

#include "segcalc/errors.hpp"

namespace segcalc {

namespace {

void require_positive(Int v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

bool is_power_of(Int c, Int ell) { return c >= 1 && ell_part(c, ell).rest == 1; }

std::string str(Int v) { return std::to_string(v); }

}  // namespace

void CuspidalParam::check() const {
  require_positive(deg, "deg");
  require_positive(n_tors, "n_tors");
  require_positive(shift, "shift");
  if (level < 0) throw DomainError("level must be nonnegative");
  if (d) require_positive(*d, "d");
}

void ModLReduction::check() const {
  require_positive(a, "a");
  require_positive(n_mod, "n_mod");
  require_positive(shift_mod, "shift_mod");
  require_positive(k, "k");
  require_positive(eps, "eps");
  if (sc_shift) require_positive(*sc_shift, "sc_shift");
  if (sc_eps) require_positive(*sc_eps, "sc_eps");
}

Int omega(const PrimePair& pair, Int n_mod, Int shift_mod) {
  require_positive(n_mod, "n_mod");
  require_positive(shift_mod, "shift_mod");
  const Int ell = pair.ell();
  if (ell == 2) return 1;
  return mult_order(pow_mod(pow_mod(pair.q(), n_mod, ell), shift_mod, ell), ell);
}

Int epsilon(const PrimePair& pair, Int n_mod) {
  require_positive(n_mod, "n_mod");
  if (pair.ell() == 2) return 1;
  return mult_order(pow_mod(pair.q(), n_mod, pair.ell()), pair.ell());
}

Int epsilon_from_supercuspidal(Int sc_eps, Int sc_shift) {
  require_positive(sc_eps, "sc_eps");
  require_positive(sc_shift, "sc_shift");
  return std::gcd(sc_eps, sc_shift);
}

bool ValidationReport::valid() const { return first_failure() == nullptr; }

const ConstraintResult* ValidationReport::first_failure() const {
  for (const auto& c : constraints) {
    if (c.applicable && !c.passed) return &c;
  }
  return nullptr;
}

const ConstraintResult& ValidationReport::get(const std::string& name) const {
  for (const auto& c : constraints) {
    if (c.name == name) return c;
  }
  throw DomainError("no constraint named '" + name + "'");
}

ValidationReport validate_reduction(const CuspidalParam& sigma, const ModLReduction& red) {
  sigma.check();
  red.check();
  const Int ell = sigma.ctx.ell();
  ValidationReport report;

  {
    ConstraintResult c{kTorsionConstraint, true, true, ""};
    if (sigma.n_tors % red.a != 0) {
      c.passed = false;
      c.detail = "a = " + str(red.a) + " does not divide n_tors = " + str(sigma.n_tors);
    } else {
      const EllSplit split = ell_part(sigma.n_tors / red.a, ell);
      c.passed = split.rest == red.n_mod;
      c.detail = "n_tors/a = " + str(sigma.n_tors / red.a) + " has prime-to-ell part " + str(split.rest) +
                 " (u = " + str(split.valuation) + "), n_mod = " + str(red.n_mod);
    }
    report.constraints.push_back(std::move(c));
  }

  {
    ConstraintResult c{kShiftConstraint, true, true, ""};
    c.passed = red.shift_mod == red.a * sigma.shift;
    c.detail = "shift_mod = " + str(red.shift_mod) + ", a*shift = " + str(red.a * sigma.shift);
    report.constraints.push_back(std::move(c));
  }

  const Int eps_expected = epsilon(sigma.ctx, red.n_mod);
  {
    ConstraintResult c{kPrimeToEllConstraint, true, true, ""};
    if (red.a == 1) {
      c.applicable = false;
      c.detail = "a = 1";
    } else {
      const Int rest = prime_to_ell_part(red.a, ell);
      c.passed = rest == eps_expected;
      c.detail = "prime-to-ell part of a = " + str(rest) + ", epsilon(q, n_mod) = " + str(eps_expected);
    }
    report.constraints.push_back(std::move(c));
  }

  {
    ConstraintResult c{kSupercuspidalConstraint, true, true, ""};
    if (!red.sc_eps || !red.sc_shift) {
      c.applicable = false;
      c.detail = "supercuspidal data absent";
    } else {
      const Int g = std::gcd(*red.sc_eps, *red.sc_shift);
      c.passed = g == red.eps;
      c.detail = "gcd(sc_eps, sc_shift) = " + str(g) + ", eps = " + str(red.eps);
    }
    report.constraints.push_back(std::move(c));
  }

  {
    ConstraintResult c{kEpsilonConstraint, true, true, ""};
    c.passed = red.eps == eps_expected;
    c.detail = "eps = " + str(red.eps) + ", order of q^n_mod mod ell = " + str(eps_expected);
    report.constraints.push_back(std::move(c));
  }

  {
    ConstraintResult c{kDegreeConstraint, true, true, ""};
    if (!sigma.d) {
      c.applicable = false;
      c.detail = "no ambient d";
    } else {
      c.passed = *sigma.d % red.a == 0;
      c.detail = "a = " + str(red.a) + ", d = " + str(*sigma.d);
    }
    report.constraints.push_back(std::move(c));
  }
  return report;
}

Int w_invariant(Int k, Int a) {
  require_positive(k, "k");
  require_positive(a, "a");
  return k * a;
}

Int t_of(Int w, Int c, Int ell) {
  require_positive(w, "w");
  if (!is_prime(ell)) throw DomainError("t_of: ell must be prime");
  if (!is_power_of(c, ell)) throw DomainError("t_of: c = " + str(c) + " is not a power of ell");
  Int numerator = 0;
  if (w == 1) {
    numerator = c;
  } else if (w < ell) {
    numerator = c - 1;
  } else {
    if (c % ell != 0) {
      throw InconsistencyError("t_of: c(ell-1)/ell not integral for c = " + str(c));
    }
    numerator = c / ell * (ell - 1);
  }
  if (numerator % w != 0 || numerator / w < 1) {
    throw InconsistencyError("t_of: no positive integer t with t*" + str(w) + " = " + str(numerator) +
                             " (c = " + str(c) + ", ell = " + str(ell) + ")");
  }
  return numerator / w;
}

bool is_admissible_triple(Int w, Int c, Int ell) {
  if (w < 1 || !is_prime(ell) || !is_power_of(c, ell)) return false;
  if (w == 1) return true;
  const EllSplit ws = ell_part(w, ell);
  if ((ell - 1) % ws.rest != 0) return false;
  if (w >= ell && ws.valuation == 0) return false;
  return ws.valuation < valuation(c, ell);
}

bool w_prime_to_ell_check(Int w, const ModLReduction& red, Int ell) {
  if (w <= 1) throw DomainError("w_prime_to_ell_check requires w > 1");
  if (!red.sc_eps) throw DomainError("w_prime_to_ell_check requires sc_eps");
  return prime_to_ell_part(w, ell) == *red.sc_eps;
}

Int b_of(Int shift, Int kk0) {
  require_positive(shift, "shift");
  require_positive(kk0, "kk0");
  if (kk0 % shift != 0) {
    throw InconsistencyError("b_of: shift " + str(shift) + " does not divide [k:k0] = " + str(kk0));
  }
  return kk0 / shift;
}

bool twist_congruence(Int char_red_order, Int n_tors) {
  require_positive(char_red_order, "char_red_order");
  require_positive(n_tors, "n_tors");
  return n_tors % char_red_order == 0;
}

std::string to_keyvalue(const CuspidalParam& p) {
  std::ostringstream os;
  os << "q=" << p.ctx.q() << " ell=" << p.ctx.ell() << " deg=" << p.deg << " n_tors=" << p.n_tors
     << " shift=" << p.shift << " level=" << format_rational(p.level) << " endo=" << p.endo;
  if (p.d) os << " d=" << *p.d;
  return os.str();
}

std::string to_keyvalue(const ModLReduction& r) {
  std::ostringstream os;
  os << "a=" << r.a << " n_mod=" << r.n_mod << " shift_mod=" << r.shift_mod << " k=" << r.k << " eps=" << r.eps;
  if (r.sc_shift) os << " sc_shift=" << *r.sc_shift;
  if (r.sc_eps) os << " sc_eps=" << *r.sc_eps;
  return os.str();
}

CuspidalParam cuspidal_param_from_keyvalue(const KeyValues& kv) {
  CuspidalParam p;
  p.ctx = PrimePair(kv.get_int("q"), kv.get_int("ell"));
  p.deg = kv.get_int("deg");
  p.n_tors = kv.get_int("n_tors");
  p.shift = kv.get_int("shift");
  if (auto level = kv.get("level")) p.level = parse_rational(*level);
  if (auto endo = kv.get("endo")) p.endo = *endo;
  p.d = kv.get_optional_int("d");
  p.check();
  return p;
}

ModLReduction reduction_from_keyvalue(const KeyValues& kv) {
  ModLReduction r;
  r.a = kv.get_int("a");
  r.n_mod = kv.get_int("n_mod");
  r.shift_mod = kv.get_int("shift_mod");
  r.k = kv.get_int("k");
  r.eps = kv.get_int("eps");
  r.sc_shift = kv.get_optional_int("sc_shift");
  r.sc_eps = kv.get_optional_int("sc_eps");
  r.check();
  return r;
}

nlohmann::json to_json(const CuspidalParam& p) {
  nlohmann::json j{{"q", p.ctx.q()},       {"ell", p.ctx.ell()}, {"deg", p.deg},
                   {"n_tors", p.n_tors},   {"shift", p.shift},   {"level", format_rational(p.level)},
                   {"endo", p.endo}};
  if (p.d) j["d"] = *p.d;
  return j;
}

nlohmann::json to_json(const ModLReduction& r) {
  nlohmann::json j{{"a", r.a}, {"n_mod", r.n_mod}, {"shift_mod", r.shift_mod}, {"k", r.k}, {"eps", r.eps}};
  if (r.sc_shift) j["sc_shift"] = *r.sc_shift;
  if (r.sc_eps) j["sc_eps"] = *r.sc_eps;
  return j;
}

nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json constraints = nlohmann::json::array();
  for (const auto& c : r.constraints) {
    constraints.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"valid", r.valid()}, {"constraints", constraints}};
}

CuspidalParam cuspidal_param_from_json(const nlohmann::json& j) {
  CuspidalParam p;
  p.ctx = PrimePair(j.at("q").get<Int>(), j.at("ell").get<Int>());
  p.deg = j.at("deg").get<Int>();
  p.n_tors = j.at("n_tors").get<Int>();
  p.shift = j.at("shift").get<Int>();
  if (j.contains("level")) {
    const auto& level = j.at("level");
    p.level = level.is_string() ? parse_rational(level.get<std::string>()) : Rational(level.get<Int>());
  }
  if (j.contains("endo")) p.endo = j.at("endo").get<std::string>();
  if (j.contains("d")) p.d = j.at("d").get<Int>();
  p.check();
  return p;
}

ModLReduction reduction_from_json(const nlohmann::json& j) {
  ModLReduction r;
  r.a = j.at("a").get<Int>();
  r.n_mod = j.at("n_mod").get<Int>();
  r.shift_mod = j.at("shift_mod").get<Int>();
  r.k = j.at("k").get<Int>();
  r.eps = j.at("eps").get<Int>();
  if (j.contains("sc_shift")) r.sc_shift = j.at("sc_shift").get<Int>();
  if (j.contains("sc_eps")) r.sc_eps = j.at("sc_eps").get<Int>();
  r.check();
  return r;
}

}  // namespace segcalc
