#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/census.hpp"
#include "segcalc/cuspidal_params.hpp"
#include "segcalc/errors.hpp"
#include "segcalc/identity_suite.hpp"
#include "segcalc/jl_transfer.hpp"
#include "segcalc/keyvalue.hpp"
#include "segcalc/multisegment.hpp"
#include "segcalc/verify.hpp"

namespace py = pybind11;
using namespace segcalc;

namespace {

std::vector<std::string> formatted(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(format(p));
  return out;
}

UniverseConfig config_from_text(const std::string& text) {
  return UniverseConfig::from_keyvalue(KeyValues::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of segcalc";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);
  py::register_exception<CounterexampleError>(m, "CounterexampleError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("c_value", [](Int q, Int ell, Int n) { return c_value(PrimePair(q, ell), n); }, py::arg("q"), py::arg("ell"),
        py::arg("n"));
  m.def("epsilon", [](Int q, Int ell, Int n_mod) { return epsilon(PrimePair(q, ell), n_mod); }, py::arg("q"),
        py::arg("ell"), py::arg("n_mod"));
  m.def("omega", [](Int q, Int ell, Int n_mod, Int shift_mod) { return omega(PrimePair(q, ell), n_mod, shift_mod); },
        py::arg("q"), py::arg("ell"), py::arg("n_mod"), py::arg("shift_mod"));
  m.def("t_of", &t_of, py::arg("w"), py::arg("c"), py::arg("ell"));
  m.def("is_admissible_triple", &is_admissible_triple, py::arg("w"), py::arg("c"), py::arg("ell"));
  m.def("infer_partner_w", &infer_partner_w, py::arg("w"), py::arg("c"), py::arg("ell"));

  m.def("partitions_of", [](Int n) { return formatted(partitions_of(n)); }, py::arg("n"));
  m.def("conjugate", [](const std::string& p) { return format(conjugate(parse_partition(p))); }, py::arg("partition"));
  m.def("dominance_leq",
        [](const std::string& mu, const std::string& nu) {
          return dominance_leq(parse_multisegment(mu), parse_multisegment(nu));
        },
        py::arg("mu"), py::arg("nu"));

  m.def("y_count", [](Int e, Int s, Int k, Int delta) { return y_count(e, s, k, delta); }, py::arg("e_prime"),
        py::arg("s_prime"), py::arg("k"), py::arg("delta"));
  m.def("check_mackey_rearrangement",
        [](Int b, Int n, Int k) {
          const auto r = check_mackey_rearrangement(b, n, k);
          return py::make_tuple(r.equal, r.coproduct_terms, r.rearranged_terms);
        },
        py::arg("b"), py::arg("n"), py::arg("k"));
  m.def("check_conjecture77",
        [](Int a, Int n, Int s_tilde, Int eps, Int ell) {
          return check_conjecture77(a, n, s_tilde, eps, ell).consistent;
        },
        py::arg("a"), py::arg("n"), py::arg("s_tilde"), py::arg("eps"), py::arg("ell"));

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, unsigned threads) {
          VerifyOptions opts;
          opts.threads = threads;
          std::vector<CheckResult> results;
          {
            py::gil_scoped_release release;
            results = run_suite(name, opts);
          }
          std::vector<std::string> out;
          for (const auto& r : results) out.push_back(r.to_json().dump());
          return out;
        },
        py::arg("name"), py::arg("threads") = 1);

  m.def("enumerate_universe",
        [](const std::string& config_text, unsigned threads) {
          const auto config = config_from_text(config_text);
          Universe u;
          {
            py::gil_scoped_release release;
            u = build_universe(config, threads);
          }
          std::vector<std::string> out;
          for (const auto& t : u.tuples) out.push_back(to_json(t).dump());
          return out;
        },
        py::arg("config"), py::arg("threads") = 1);
}
