#include "segcalc/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "segcalc/errors.hpp"
#include "segcalc/parallel.hpp"

namespace segcalc {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

}  // namespace

UniverseConfig UniverseConfig::from_keyvalue(const KeyValues& kv) {
  UniverseConfig c;
  c.q = kv.get_int("q");
  c.ell = kv.get_int("ell");
  PrimePair(c.q, c.ell);
  if (auto v = kv.get_optional_int("m_max")) c.m_max = *v;
  c.d = kv.get_optional_int("d");
  if (auto v = kv.get_optional_int("n_tors_max")) c.n_tors_max = *v;
  if (auto v = kv.get_optional_int("shift_max")) c.shift_max = *v;
  if (auto v = kv.get_optional_int("k_max")) c.k_max = *v;
  c.u_max = kv.get_optional_int("u_max");
  if (auto v = kv.get("levels")) {
    c.levels.clear();
    for (const auto& item : split_list(*v)) c.levels.push_back(parse_rational(item));
  }
  if (auto v = kv.get("endos")) c.endos = split_list(*v);
  for (const auto& l : c.levels) {
    if (l < 0) throw DomainError("levels must be nonnegative");
  }
  if (c.m_max < 0 || c.n_tors_max < 0 || c.shift_max < 0 || c.k_max < 0) {
    throw DomainError("universe bounds must be nonnegative");
  }
  if (c.d && *c.d < 1) throw DomainError("d must be >= 1");
  return c;
}

KeyValues UniverseConfig::to_keyvalue() const {
  KeyValues kv;
  kv.set("q", std::to_string(q));
  kv.set("ell", std::to_string(ell));
  kv.set("m_max", std::to_string(m_max));
  if (d) kv.set("d", std::to_string(*d));
  kv.set("n_tors_max", std::to_string(n_tors_max));
  kv.set("shift_max", std::to_string(shift_max));
  kv.set("k_max", std::to_string(k_max));
  if (u_max) kv.set("u_max", std::to_string(*u_max));
  std::vector<std::string> ls;
  for (const auto& l : levels) ls.push_back(format_rational(l));
  kv.set("levels", join(ls));
  kv.set("endos", join(endos));
  return kv;
}

bool operator<(const ClassKey& x, const ClassKey& y) {
  return std::tie(x.deg, x.n_mod, x.shift_mod, x.k, x.eps, x.endo, x.level) <
         std::tie(y.deg, y.n_mod, y.shift_mod, y.k, y.eps, y.endo, y.level);
}

ClassKey class_key(const UniverseTuple& t) {
  return ClassKey{t.sigma.deg, t.red.n_mod, t.red.shift_mod, t.red.k, t.red.eps, t.sigma.endo, t.sigma.level};
}

std::set<Int> enumerate_admissible_a(const PrimePair& pair, Int n_tors, std::optional<Int> d, std::optional<Int> u_max) {
  if (n_tors < 1) throw DomainError("n_tors must be >= 1");
  std::set<Int> out;
  for (Int a = 1; a <= n_tors; ++a) {
    if (n_tors % a != 0) continue;
    if (d && *d % a != 0) continue;
    const EllSplit split = ell_part(n_tors / a, pair.ell());
    if (u_max && split.valuation > *u_max) continue;
    if (a > 1 && prime_to_ell_part(a, pair.ell()) != epsilon(pair, split.rest)) continue;
    out.insert(a);
  }
  return out;
}

namespace {

struct Slice {
  std::vector<UniverseTuple> tuples;
  std::vector<RejectedTuple> rejected;
};

// Supercuspidal data for sigma = St(alpha, k). Returns false when no alpha
// fits: k > 1 needs eps = 1 if a = 1, and eps * (prime-to-ell part of k)
// must be an order of a power of q mod ell.
bool supercuspidal_data(const PrimePair& pair, Int a, Int k, Int eps, Int& sc_eps, Int& sc_shift) {
  sc_shift = eps;
  if (k == 1) {
    sc_eps = eps;
    return true;
  }
  if (a == 1 && eps != 1) return false;
  sc_eps = eps * prime_to_ell_part(k, pair.ell());
  const Int q_order = pair.ell() == 2 ? 1 : mult_order(pair.q(), pair.ell());
  return q_order % sc_eps == 0;
}

Slice generate_slice(const UniverseConfig& config, Int deg, Int n_tors) {
  const PrimePair pair(config.q, config.ell);
  Slice slice;
  const Int c = c_value(pair, n_tors);
  for (Int shift = 1; shift <= config.shift_max; ++shift) {
    for (Int a : enumerate_admissible_a(pair, n_tors, config.d, config.u_max)) {
      const Int n_mod = prime_to_ell_part(n_tors / a, pair.ell());
      const Int eps = epsilon(pair, n_mod);
      for (Int k = 1; k <= config.k_max; ++k) {
        if (deg % k != 0) continue;
        Int sc_eps = 0;
        Int sc_shift = 0;
        if (!supercuspidal_data(pair, a, k, eps, sc_eps, sc_shift)) continue;
        for (const auto& level : config.levels) {
          for (const auto& endo : config.endos) {
            CuspidalParam sigma{deg, n_tors, shift, level, endo, pair, config.d};
            ModLReduction red{a, n_mod, a * shift, k, eps, sc_shift, sc_eps};
            const ValidationReport report = validate_reduction(sigma, red);
            if (!report.valid()) {
              throw std::logic_error("generated tuple fails " + report.first_failure()->name + ": " +
                                     to_keyvalue(sigma) + " " + to_keyvalue(red));
            }
            DerivedInvariants inv;
            inv.eps = eps;
            inv.omega = omega(pair, n_mod, red.shift_mod);
            inv.w = w_invariant(k, a);
            inv.c = c;
            try {
              inv.t = t_of(inv.w, inv.c, pair.ell());
            } catch (const InconsistencyError& e) {
              slice.rejected.push_back({sigma, red, e.what()});
              continue;
            }
            slice.tuples.push_back({sigma, red, inv});
          }
        }
      }
    }
  }
  return slice;
}

}  // namespace

Universe build_universe(const UniverseConfig& config, unsigned threads) {
  if (threads == 0) threads = worker_count_from_env();
  Universe u;
  u.config = config;
  PrimePair(config.q, config.ell);
  const std::size_t degs = static_cast<std::size_t>(std::max<Int>(config.m_max, 0));
  const std::size_t tors = static_cast<std::size_t>(std::max<Int>(config.n_tors_max, 0));
  auto slices = parallel_map(
      degs * tors,
      [&](std::size_t i) {
        return generate_slice(config, static_cast<Int>(i / tors) + 1, static_cast<Int>(i % tors) + 1);
      },
      threads);
  for (auto& s : slices) {
    u.tuples.insert(u.tuples.end(), s.tuples.begin(), s.tuples.end());
    u.rejected.insert(u.rejected.end(), s.rejected.begin(), s.rejected.end());
  }
  return u;
}

CensusCell census_by_w(const Universe& u, Int w, const Rational& j, std::optional<Int> m) {
  std::set<ClassKey> classes;
  for (const auto& t : u.tuples) {
    if (t.inv.w != w || t.sigma.level > j) continue;
    if (m && *m % t.sigma.deg != 0) continue;
    classes.insert(class_key(t));
  }
  CensusCell cell{w, j, m, static_cast<Int>(classes.size()), {classes.begin(), classes.end()}};
  return cell;
}

std::vector<std::pair<Int, Rational>> census_cells(const Universe& u) {
  std::set<std::pair<Int, Rational>> cells;
  for (const auto& t : u.tuples) cells.emplace(t.inv.w, t.sigma.level);
  return {cells.begin(), cells.end()};
}

SpehRecord speh_transport(const UniverseTuple& sigma, Int r) {
  if (r < 1) throw DomainError("speh_transport: r must be >= 1");
  SpehRecord rec;
  rec.source = sigma.sigma;
  rec.source_class = class_key(sigma);
  rec.r = r;
  rec.deg = r * sigma.sigma.deg;
  rec.ell = sigma.sigma.ctx.ell();
  rec.n = sigma.sigma.n_tors;
  rec.c = sigma.inv.c;
  rec.w = sigma.inv.w;
  rec.t = sigma.inv.t;
  rec.level = sigma.sigma.level;
  return rec;
}

std::vector<SpehRecord> e_view(const Universe& u, Int w, const Rational& j, Int m) {
  std::vector<SpehRecord> out;
  for (const auto& t : u.tuples) {
    if (t.inv.w != w || t.sigma.level > j || m % t.sigma.deg != 0) continue;
    out.push_back(speh_transport(t, m / t.sigma.deg));
  }
  return out;
}

namespace {

std::string describe(const SpehRecord& r) {
  return "Z(" + to_keyvalue(r.source) + "; r=" + std::to_string(r.r) + ")";
}

using SpehClass = std::tuple<Int, Int, ClassKey>;  // (deg, r, class of sigma~)

}  // namespace

CensusEqualityReport census_equalities(const Universe& u, Int w, const Rational& j, Int m,
                                       const std::optional<std::vector<SpehRecord>>& e_records,
                                       const Universe* split, std::optional<Int> split_m) {
  if (m < 1) throw DomainError("census_equalities: m must be >= 1");
  CensusEqualityReport rep;
  rep.w = w;
  rep.j = j;
  rep.m = m;
  const CensusCell a_cell = census_by_w(u, w, j, m);
  rep.a_count = a_cell.count;
  const std::vector<SpehRecord> records = e_records ? *e_records : e_view(u, w, j, m);
  rep.e_records = records.size();

  auto fail = [&rep](std::string why) {
    if (rep.pass) rep.first_unmatched = std::move(why);
    rep.pass = false;
  };

  // Tuple level: the transport image of the cuspidal side must be exactly
  // the Speh side, as multisets.
  std::vector<const SpehRecord*> unmatched;
  for (const auto& r : records) unmatched.push_back(&r);
  for (const auto& t : u.tuples) {
    if (t.inv.w != w || t.sigma.level > j || m % t.sigma.deg != 0) continue;
    ++rep.a_tuples;
    const SpehRecord image = speh_transport(t, m / t.sigma.deg);
    if (image.n != t.sigma.n_tors || image.c != t.inv.c || image.w != t.inv.w || image.t != t.inv.t ||
        image.deg != m) {
      fail("transport changed invariants of " + describe(image));
    }
    auto it = std::find_if(unmatched.begin(), unmatched.end(), [&](const SpehRecord* r) { return *r == image; });
    if (it == unmatched.end()) {
      fail("no Speh record for " + describe(image));
    } else {
      unmatched.erase(it);
    }
  }
  for (const auto* r : unmatched) fail("Speh record without cuspidal source: " + describe(*r));

  // Class level.
  std::set<SpehClass> e_classes;
  for (const auto& r : records) e_classes.emplace(r.deg, r.r, r.source_class);
  rep.e_count = static_cast<Int>(e_classes.size());
  std::set<SpehClass> image_classes;
  for (const auto& key : a_cell.classes) image_classes.emplace(m, m / key.deg, key);
  if (image_classes.size() != a_cell.classes.size()) fail("class transport is not injective");
  for (const auto& cls : image_classes) {
    if (!e_classes.count(cls)) {
      fail("class of degree " + std::to_string(std::get<2>(cls).deg) + " (n_mod=" +
           std::to_string(std::get<2>(cls).n_mod) + ") has no Speh class");
    }
  }
  for (const auto& cls : e_classes) {
    if (!image_classes.count(cls)) fail("Speh class with r=" + std::to_string(std::get<1>(cls)) + " has no source class");
  }
  if (rep.a_count != rep.e_count) {
    fail("|A| = " + std::to_string(rep.a_count) + " but |E| = " + std::to_string(rep.e_count));
  }

  if (split) {
    if (!split_m) throw DomainError("census_equalities: split universe needs its degree");
    rep.split_count = census_by_w(*split, w, j, *split_m).count;
    if (*rep.split_count != rep.a_count) {
      fail("inner form count " + std::to_string(rep.a_count) + " vs split count " + std::to_string(*rep.split_count));
    }
  }
  return rep;
}

nlohmann::json to_json(const ClassKey& k) {
  return {{"deg", k.deg}, {"n_mod", k.n_mod}, {"shift_mod", k.shift_mod}, {"k", k.k},
          {"eps", k.eps}, {"endo", k.endo},   {"level", format_rational(k.level)}};
}

nlohmann::json to_json(const UniverseTuple& t) {
  nlohmann::json j = to_json(t.sigma);
  j.update(to_json(t.red));
  j["derived"] = {{"eps", t.inv.eps}, {"omega", t.inv.omega}, {"w", t.inv.w}, {"c", t.inv.c}, {"t", t.inv.t}};
  return j;
}

nlohmann::json to_json(const RejectedTuple& t) {
  nlohmann::json j = to_json(t.sigma);
  j.update(to_json(t.red));
  j["rejected"] = t.reason;
  return j;
}

nlohmann::json to_json(const CensusCell& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& k : c.classes) classes.push_back(to_json(k));
  nlohmann::json j{{"w", c.w}, {"j", format_rational(c.j)}, {"count", c.count}, {"classes", classes}};
  if (c.m) j["m"] = *c.m;
  return j;
}

nlohmann::json to_json(const SpehRecord& r) {
  return {{"source", to_json(r.source)}, {"r", r.r}, {"deg", r.deg}, {"ell", r.ell}, {"n", r.n},
          {"c", r.c},                    {"w", r.w}, {"t", r.t},     {"level", format_rational(r.level)}};
}

nlohmann::json to_json(const CensusEqualityReport& r) {
  nlohmann::json j{{"w", r.w},
                   {"j", format_rational(r.j)},
                   {"m", r.m},
                   {"a_count", r.a_count},
                   {"e_count", r.e_count},
                   {"a_tuples", r.a_tuples},
                   {"e_records", r.e_records},
                   {"pass", r.pass},
                   {"note", kSyntheticModelNote}};
  if (r.split_count) j["split_count"] = *r.split_count;
  if (r.first_unmatched) j["first_unmatched"] = *r.first_unmatched;
  return j;
}

UniverseTuple universe_tuple_from_json(const nlohmann::json& j) {
  UniverseTuple t;
  t.sigma = cuspidal_param_from_json(j);
  t.red = reduction_from_json(j);
  if (j.contains("derived")) {
    const auto& d = j.at("derived");
    t.inv = {d.at("eps").get<Int>(), d.at("omega").get<Int>(), d.at("w").get<Int>(), d.at("c").get<Int>(),
             d.at("t").get<Int>()};
  } else {
    const PrimePair pair = t.sigma.ctx;
    t.inv.eps = epsilon(pair, t.red.n_mod);
    t.inv.omega = omega(pair, t.red.n_mod, t.red.shift_mod);
    t.inv.w = w_invariant(t.red.k, t.red.a);
    t.inv.c = c_value(pair, t.sigma.n_tors);
    t.inv.t = t_of(t.inv.w, t.inv.c, pair.ell());
  }
  return t;
}

}  // namespace segcalc
