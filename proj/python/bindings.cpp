// Results cross the boundary as JSON text; the Python side decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "equipart/cli.hpp"
#include "equipart/json_io.hpp"

namespace py = pybind11;
using namespace equipart;

namespace {

std::string dump(const Json& j) { return j.dump(); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equipartitions of masses by hyperplanes";

  py::register_exception<ScalarKindError>(m, "ScalarKindError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_RuntimeError);
  py::register_exception<InconsistentBoundsError>(m, "InconsistentBoundsError", PyExc_RuntimeError);

  m.def("ramos_lower", &ramos_lower, py::arg("j"), py::arg("k"));
  m.def("mani_upper", &mani_upper, py::arg("j"), py::arg("k"));
  m.def("bounds_for_json", [](int j, int k) { return dump(to_json(bounds_for(j, k))); }, py::arg("j"), py::arg("k"));
  m.def(
      "render_table",
      [](int jmax, int kmax, const std::string& format, bool conjecture) {
        TableFormat f;
        if (format == "markdown")
          f = TableFormat::Markdown;
        else if (format == "csv")
          f = TableFormat::Csv;
        else if (format == "json")
          f = TableFormat::Json;
        else
          throw std::invalid_argument("format must be markdown, csv or json");
        return render_table(BoundsTable::build(jmax, kmax), f, {conjecture});
      },
      py::arg("jmax"), py::arg("kmax"), py::arg("format") = "markdown", py::arg("conjecture") = false);

  m.def("dickson_top_json", [](std::size_t k) { return dump(to_json(dickson_top(k))); }, py::arg("k"));
  m.def("dickson_permutation_sum_json", [](std::size_t k) { return dump(to_json(dickson_permutation_sum(k))); },
        py::arg("k"));
  m.def(
      "certify_json",
      [](std::uint64_t j, std::size_t k) {
        IndexCertificate c;
        {
          py::gil_scoped_release release;
          c = certify_upper_bound(j, k);
        }
        return dump(to_json(c));
      },
      py::arg("j"), py::arg("k"));
  m.def("binom_mod2", &binom_mod2, py::arg("n"), py::arg("m"));
  m.def("kummer_carries", &kummer_carries, py::arg("n"), py::arg("m"), py::arg("p"));

  m.def(
      "enumerate_json",
      [](int j) {
        std::vector<EquipartitionCertificate> certs;
        {
          py::gil_scoped_release release;
          certs = enumerate_standard(j);
        }
        Json list = Json::array();
        for (const auto& c : certs) list.push_back(to_json(c));
        return dump(list);
      },
      py::arg("j"));
  m.def(
      "verify_json",
      [](const std::string& cert) {
        const auto c = certificate_from_json(Json::parse(cert));
        Json rows = Json::array();
        for (const auto& row : verify_certificate(c, StandardConfiguration(c.j))) {
          Json r = Json::array();
          for (const auto& x : row) r.push_back(to_string(x));
          rows.push_back(r);
        }
        return dump(rows);
      },
      py::arg("certificate"));
  m.def("decide_json", [](int j) { return dump(to_json(decide_ramos_two(j))); }, py::arg("j"));

  m.def(
      "solve_json",
      [](const std::string& masses, std::size_t k, double eps, std::uint64_t seed, int restarts, int max_iters,
         double time_budget, unsigned threads) {
        const auto doc = masses_from_json(Json::parse(masses));
        if (doc.exact) throw ScalarKindError("solve: float point clouds only");
        SolverConfig cfg;
        cfg.eps = eps;
        cfg.seed = seed;
        cfg.restarts = restarts;
        cfg.max_iters = max_iters;
        cfg.time_budget = time_budget;
        cfg.threads = threads;
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(doc.float_masses, k, cfg);
        }
        return dump(to_json(r));
      },
      py::arg("masses"), py::arg("k"), py::arg("eps") = 0.02, py::arg("seed") = 0, py::arg("restarts") = 16,
      py::arg("max_iters") = 6000, py::arg("time_budget") = 120.0, py::arg("threads") = 0);
  m.def(
      "test_map_json",
      [](const std::string& masses, const std::string& arrangement) {
        const auto doc = masses_from_json(Json::parse(masses));
        const Json arr = Json::parse(arrangement);
        Json out = Json::array();
        if (doc.exact) {
          for (const auto& per_mass : eval_test_map(doc.exact_masses, exact_arrangement_from_json(arr)).values) {
            Json r = Json::array();
            for (const auto& v : per_mass) r.push_back(to_string(v));
            out.push_back(r);
          }
        } else {
          for (const auto& per_mass : eval_test_map(doc.float_masses, float_arrangement_from_json(arr)).values)
            out.push_back(per_mass);
        }
        return dump(out);
      },
      py::arg("masses"), py::arg("arrangement"));

  m.def("run_cli", &run_cli, py::arg("args"));
}
