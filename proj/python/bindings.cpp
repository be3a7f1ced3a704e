#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "esdmem/cli.hpp"
#include "esdmem/entanglement.hpp"
#include "esdmem/errors.hpp"
#include "esdmem/esd.hpp"
#include "esdmem/validation.hpp"

namespace py = pybind11;
using namespace esdmem;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_numpy(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

DensityMatrix from_numpy(const ComplexArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) throw ArgumentError("expected a square matrix");
  const auto d = static_cast<std::size_t>(arr.shape(0));
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  if ((std::size_t{1} << n) != d) throw ArgumentError("dimension is not a power of two");
  return DensityMatrix(n, ComplexMatrix(d, d, std::vector<Complex>(arr.data(), arr.data() + d * d)));
}

py::dict threshold_dict(const ThresholdResult& r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["p_star"] = r.p_star;
  d["bracket_width"] = r.bracket_width;
  d["signal"] = r.signal;
  d["crossings"] = r.crossings;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement sudden death in DFS and NS quantum memories";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<NoThresholdError>(m, "NoThresholdError", PyExc_LookupError);

  m.def(
      "density_matrix",
      [](const std::string& code, const std::string& channel, double a, double b, double p) {
        return to_numpy(evolve(LogicalCode::make(parse_code_name(code)), parse_noise_model(channel), {a, b}, p).matrix());
      },
      py::arg("code"), py::arg("channel"), py::arg("a"), py::arg("b"), py::arg("p"),
      "Noisy encoded state as a complex (2^n, 2^n) array.");

  m.def(
      "fidelity",
      [](const std::string& code, const std::string& channel, double a, double b, double p) {
        const auto c = LogicalCode::make(parse_code_name(code));
        return reference_fidelity(c, evolve(c, parse_noise_model(channel), {a, b}, p), {a, b});
      },
      py::arg("code"), py::arg("channel"), py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "closed_form_fidelity",
      [](const std::string& code, const std::string& channel, double a, double b, double p) {
        return closed_form_fidelity(parse_code_name(code), parse_noise_model(channel).kind, {a, b}, p);
      },
      py::arg("code"), py::arg("channel"), py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "evaluate_metric",
      [](const std::string& code, const std::string& channel, const std::string& metric, double a, double b,
         double p) {
        return evaluate_metric(LogicalCode::make(parse_code_name(code)), parse_noise_model(channel), {a, b}, p,
                               MetricId::parse(metric));
      },
      py::arg("code"), py::arg("channel"), py::arg("metric"), py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "threshold",
      [](const std::string& code, const std::string& channel, const std::string& metric, double a, double b) {
        ThresholdResult r;
        {
          py::gil_scoped_release release;
          r = esd_threshold(LogicalCode::make(parse_code_name(code)), parse_noise_model(channel), {a, b},
                            MetricId::parse(metric));
        }
        return threshold_dict(r);
      },
      py::arg("code"), py::arg("channel"), py::arg("metric"), py::arg("a") = 0.0, py::arg("b") = 0.0);

  m.def(
      "contour",
      [](const std::string& code, const std::string& channel, const std::string& metric, double b,
         const std::vector<double>& a_grid, int jobs) {
        std::vector<ContourPoint> pts;
        {
          py::gil_scoped_release release;
          pts = zero_contour(LogicalCode::make(parse_code_name(code)), parse_noise_model(channel),
                             MetricId::parse(metric), b, a_grid, jobs);
        }
        py::list out;
        for (const auto& pt : pts) {
          py::dict d = threshold_dict(pt.result);
          d["a"] = pt.a;
          d["b"] = pt.b;
          out.append(d);
        }
        return out;
      },
      py::arg("code"), py::arg("channel"), py::arg("metric"), py::arg("b"), py::arg("a_grid"),
      py::arg("jobs") = 1);

  m.def(
      "sweep",
      [](const std::string& code, const std::string& channel, const std::string& metric,
         std::vector<double> a_grid, std::vector<double> b_grid, std::vector<double> p_grid, int jobs) {
        SweepSpec spec{parse_code_name(code), parse_noise_model(channel), MetricId::parse(metric),
                       std::move(a_grid), std::move(b_grid), std::move(p_grid)};
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = sweep(spec, jobs);
        }
        py::array_t<double> out({rows.size(), std::size_t{4}});
        auto v = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          v(i, 0) = rows[i].a;
          v(i, 1) = rows[i].b;
          v(i, 2) = rows[i].p;
          v(i, 3) = rows[i].value;
        }
        return out;
      },
      py::arg("code"), py::arg("channel"), py::arg("metric"), py::arg("a_grid"), py::arg("b_grid"),
      py::arg("p_grid"), py::arg("jobs") = 1, "Rows of (a, b, p, value) ordered a, b, p.");

  m.def(
      "negativity", [](const ComplexArray& rho, const QubitSet& subset) { return negativity(from_numpy(rho), subset); },
      py::arg("rho"), py::arg("subset"));
  m.def(
      "concurrence", [](const ComplexArray& rho) { return concurrence(from_numpy(rho)); }, py::arg("rho"));
  m.def(
      "tripartite_negativity", [](const ComplexArray& rho) { return tripartite_negativity(from_numpy(rho)); },
      py::arg("rho"));

  m.def(
      "validate",
      [](std::uint64_t seed) {
        ValidationOptions options;
        options.seed = seed;
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (auto& s : run_validation(options)) out.emplace_back(s.name, s.passed, s.detail);
        return out;
      },
      py::arg("seed") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
