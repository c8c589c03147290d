#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubeprobe/cli.hpp"
#include "cubeprobe/cnf.hpp"
#include "cubeprobe/errors.hpp"
#include "cubeprobe/estimator.hpp"
#include "cubeprobe/extensions.hpp"
#include "cubeprobe/generate.hpp"
#include "cubeprobe/oracle.hpp"
#include "cubeprobe/poset.hpp"
#include "cubeprobe/poset_sampler.hpp"
#include "cubeprobe/tester.hpp"

namespace py = pybind11;
using namespace cubeprobe;

namespace {

py::dict params_dict(const EstimatorParams& p) {
  py::dict d;
  d["n"] = p.n;
  d["zeta"] = p.zeta;
  d["delta"] = p.delta;
  d["alpha"] = p.alpha;
  d["gamma"] = p.gamma;
  d["delta_prime"] = p.delta_prime;
  d["k"] = p.k;
  return d;
}

py::dict report_dict(const EstimateReport& r) {
  py::dict d;
  d["dtv"] = r.dtv_estimate;
  d["samples"] = r.total_samples;
  d["terms"] = r.per_sample_terms;
  d["params"] = params_dict(r.params);
  d["seed"] = r.seed;
  return d;
}

EstimateOptions options(unsigned threads, std::uint64_t max_samples) {
  EstimateOptions o;
  o.threads = threads;
  o.max_total_samples = max_samples;
  return o;
}

}  // namespace

PYBIND11_MODULE(_cubeprobe, m) {
  m.doc() = "Distance estimation and identity testing for poset samplers";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CycleError>(m, "CycleError", base.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());

  py::class_<Poset>(m, "Poset")
      .def_static("parse", &parse_poset, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_poset(path); }, py::arg("path"))
      .def_static("from_relations", &Poset::from_relations, py::arg("k"), py::arg("relations"))
      .def_static("generate",
                  [](const std::string& name) { return generate_instance(InstanceId::parse(name)); },
                  py::arg("name"))
      .def_property_readonly("size", &Poset::size)
      .def("precedes", &Poset::precedes)
      .def("relations", &Poset::relations)
      .def("to_json", &poset_to_json, py::arg("cover_only") = true)
      .def("matrix", [](const Poset& p) { return encode_matrix(p).unrolled; })
      .def("free_pairs", [](const Poset& p) { return free_bit_map(p).positions; })
      .def("count_extensions", [](const Poset& p) { return py::int_(py::str(count_extensions(p).str())); })
      .def("extensions",
           [](const Poset& p) {
             std::vector<std::vector<std::size_t>> out;
             for (auto& e : enumerate_extensions(p)) out.push_back(std::move(e.order));
             return out;
           })
      .def("to_dimacs", [](const Poset& p) { return to_dimacs(encode_cnf(p)); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "<Poset " + encode_matrix(p).unrolled + ">"; });

  m.def("derive_params",
        [](std::size_t n, double zeta, double delta) { return params_dict(derive_params(n, zeta, delta)); },
        py::arg("n"), py::arg("zeta"), py::arg("delta"));

  m.def(
      "estimate",
      [](const Poset& poset, const std::string& sampler, double zeta, double delta, std::uint64_t seed,
         unsigned threads, std::uint64_t max_samples) {
        const auto s = make_sampler(SamplerSpec::parse(sampler), poset);
        const UniformExtensionSampler known(poset);
        EstimateReport r;
        {
          py::gil_scoped_release release;
          r = cube_probe_est(*s, known, zeta, delta, seed, options(threads, max_samples));
        }
        return report_dict(r);
      },
      py::arg("poset"), py::arg("sampler") = "uniform", py::arg("zeta") = 0.3, py::arg("delta") = 0.2,
      py::arg("seed") = 0, py::arg("threads") = 1, py::arg("max_samples") = 0);

  m.def(
      "test",
      [](const Poset& poset, const std::string& sampler, double epsilon, double eta, double delta,
         std::uint64_t seed, unsigned threads) {
        const auto s = make_sampler(SamplerSpec::parse(sampler), poset);
        const UniformExtensionSampler known(poset);
        Verdict v;
        {
          py::gil_scoped_release release;
          v = cube_probe_tester(*s, known, epsilon, eta, delta, seed, options(threads, 0));
        }
        py::dict d = report_dict(v.estimate);
        d["verdict"] = to_string(v.decision);
        d["threshold"] = v.params.threshold_k;
        return d;
      },
      py::arg("poset"), py::arg("sampler") = "uniform", py::arg("epsilon") = 0.01, py::arg("eta") = 0.61,
      py::arg("delta") = 0.1, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def(
      "exact_tv",
      [](const Poset& poset, const std::string& p, const std::string& q) {
        const Rational tv = exact_tv(exact_distribution(SamplerSpec::parse(p), poset),
                                     exact_distribution(SamplerSpec::parse(q), poset));
        return py::make_tuple(py::int_(py::str(numerator(tv).str())),
                              py::int_(py::str(denominator(tv).str())));
      },
      py::arg("poset"), py::arg("p") = "biased-equal", py::arg("q") = "uniform");

  m.def(
      "sample",
      [](const Poset& poset, const std::string& sampler, std::size_t count, std::uint64_t seed) {
        const auto s = make_sampler(SamplerSpec::parse(sampler), poset);
        RngStream rng(seed, 0);
        std::vector<std::string> out;
        const SubcubeCondition all(s->dim());
        for (std::size_t i = 0; i < count; ++i) out.push_back(s->draw(all, rng).to_string());
        return out;
      },
      py::arg("poset"), py::arg("sampler") = "uniform", py::arg("count") = 1, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
