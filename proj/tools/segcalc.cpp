// segcalc: batch front end for the parameter calculus.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "segcalc/census.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/jl_transfer.hpp"
#include "segcalc/multisegment.hpp"
#include "segcalc/parallel.hpp"
#include "segcalc/verify.hpp"

namespace {

using namespace segcalc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << '\n'; }

// Universe config: file first, then flags.
struct ConfigArgs {
  std::string path;
  std::map<std::string, std::string> overrides;

  void add(CLI::App* cmd) {
    cmd->add_option("--config", path, "key=value config file")->check(CLI::ExistingFile);
    for (const char* key : {"q", "ell", "m_max", "d", "n_tors_max", "shift_max", "k_max", "u_max", "levels", "endos"}) {
      std::string flag = std::string("--") + key;
      for (auto& ch : flag) {
        if (ch == '_') ch = '-';
      }
      cmd->add_option(flag, overrides[key], std::string("override config key ") + key);
    }
  }

  UniverseConfig load() const {
    KeyValues kv = path.empty() ? KeyValues{} : KeyValues::parse(read_file(path));
    for (const auto& [key, value] : overrides) {
      if (!value.empty()) kv.set(key, value);
    }
    if (!kv.contains("q") || !kv.contains("ell")) throw UsageError("universe config needs q and ell");
    return UniverseConfig::from_keyvalue(kv);
  }
};

unsigned threads() { return worker_count_from_env(); }

int run(int argc, char** argv) {
  CLI::App app{"segcalc: invariants, enumeration and verification sweeps"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // invariants
  auto* inv = app.add_subcommand("invariants", "print eps, omega, w, t, c for one lifted cuspidal");
  Int q = 0, ell = 0, n = 0, s = 1, k = 1, a = 1;
  inv->add_option("--q", q, "residue field size")->required();
  inv->add_option("--ell", ell, "coefficient prime")->required();
  inv->add_option("--n", n, "torsion number of the lift")->required();
  inv->add_option("--s", s, "shift of the lift");
  inv->add_option("--k", k, "k of the reduction");
  inv->add_option("--a", a, "length a of the reduction");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "build a universe and emit it as JSON lines");
  ConfigArgs enum_cfg;
  enum_cfg.add(enumerate);

  // census
  auto* census = app.add_subcommand("census", "class counts per (w, j) cell with the Speh-side comparison");
  ConfigArgs census_cfg;
  census_cfg.add(census);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vopts;
  std::vector<Int> ells;
  verify->add_option("suite", suite, "suite name or 'all'")->required()->check([](const std::string& name) {
    if (name == "all") return std::string{};
    for (const auto& s : suite_names()) {
      if (s == name) return std::string{};
    }
    return "unknown suite " + name;
  });
  verify->add_option("--bmax", vopts.b_max, "mackey: number of bases");
  verify->add_option("--nmax", vopts.n_max, "mackey: total degree");
  verify->add_option("--ells", ells, "tof/lemma57: primes");
  verify->add_option("--vmax", vopts.v_max, "tof/lemma57: largest exponent of c");
  verify->add_option("--wmax", vopts.w_max, "tof/lemma57: largest w");
  verify->add_option("--emax", vopts.e_max, "y_count: largest e'");
  verify->add_option("--smax", vopts.s_max, "y_count: largest s'");
  verify->add_option("--kmax", vopts.k_max, "y_count: largest k");
  verify->add_option("--pmax", vopts.partition_n_max, "unitriangular: largest n");
  verify->add_option("--samples", vopts.random_matrices, "unitriangular: matrices per n");
  verify->add_option("--products", vopts.random_products, "bigebra: random products");
  verify->add_option("--seed", vopts.seed, "random seed");

  // transfer
  auto* transfer_cmd = app.add_subcommand("transfer", "transfer the Speh records of a universe file");
  std::string universe_path;
  Int r = 1;
  transfer_cmd->add_option("universe", universe_path, "JSON-lines universe (enumerate output)")
      ->required()
      ->check(CLI::ExistingFile);
  transfer_cmd->add_option("--r", r, "Speh length")->check(CLI::PositiveNumber);

  // hasse
  auto* hasse = app.add_subcommand("hasse", "dominance Hasse diagram on partitions of n");
  Int hasse_n = 0;
  hasse->add_option("n", hasse_n, "size")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (inv->parsed()) {
    const PrimePair pair(q, ell);
    if (n < 1 || s < 1 || k < 1 || a < 1) throw UsageError("n, s, k, a must be >= 1");
    if (n % a != 0) throw UsageError("a must divide n");
    const Int n_mod = prime_to_ell_part(n / a, ell);
    const Int eps = epsilon(pair, n_mod);
    const Int om = omega(pair, n_mod, a * s);
    const Int w = w_invariant(k, a);
    const Int c = c_value(pair, n);
    std::cout << "eps=" << eps << " omega=" << om << " w=" << w;
    try {
      const Int t = t_of(w, c, ell);
      std::cout << " t=" << t << " c=" << c << '\n';
    } catch (const InconsistencyError& e) {
      std::cout << " t=none c=" << c << '\n';
      std::cerr << e.what() << '\n';
      return kFailed;
    }
    return kOk;
  }

  if (enumerate->parsed()) {
    const Universe u = build_universe(enum_cfg.load(), threads());
    for (const auto& t : u.tuples) emit(to_json(t));
    for (const auto& t : u.rejected) emit(to_json(t));
    std::cerr << "tuples=" << u.tuples.size() << " rejected=" << u.rejected.size() << '\n';
    return kOk;
  }

  if (census->parsed()) {
    const UniverseConfig config = census_cfg.load();
    const Universe u = build_universe(config, threads());
    bool ok = true;
    for (const auto& [w, j] : census_cells(u)) {
      const CensusCell cell = census_by_w(u, w, j);
      emit({{"w", w}, {"j", format_rational(j)}, {"count", cell.count}});
      for (Int m = 1; m <= config.m_max; ++m) {
        const auto rep = census_equalities(u, w, j, m);
        ok = ok && rep.pass;
        emit(to_json(rep));
      }
    }
    return ok ? kOk : kFailed;
  }

  if (verify->parsed()) {
    if (!ells.empty()) vopts.ells = ells;
    vopts.threads = threads();
    std::size_t failed = 0;
    const auto results = run_suite(suite, vopts);
    for (const auto& res : results) {
      if (!res.pass) ++failed;
      emit(res.to_json());
    }
    std::cerr << "checks=" << results.size() << " failed=" << failed << '\n';
    return failed ? kFailed : kOk;
  }

  if (transfer_cmd->parsed()) {
    std::istringstream in(read_file(universe_path));
    std::string line;
    std::vector<SpehRecord> sources;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto j = nlohmann::json::parse(line);
      if (j.contains("rejected")) continue;
      sources.push_back(speh_transport(universe_tuple_from_json(j), r));
    }
    bool ok = true;
    for (const auto& rec : transfer_batch(sources, threads())) {
      ok = ok && same_invariants(rec.source, rec.target);
      emit(to_json(rec));
    }
    return ok ? kOk : kFailed;
  }

  if (hasse->parsed()) {
    for (const auto& [lower, upper] : dominance_hasse(hasse_n)) {
      std::cout << format(lower) << " -> " << format(upper) << '\n';
    }
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const segcalc::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const segcalc::ParseError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
