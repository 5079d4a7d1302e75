#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "unruh/spectra.hpp"
#include "unruh/sweep.hpp"
#include "unruh/tangles.hpp"

namespace py = pybind11;

namespace {

using MatrixRows = std::vector<std::vector<unruh::cplx>>;

MatrixRows to_rows(const unruh::ComplexMatrix& m) {
  MatrixRows rows(m.dim(), std::vector<unruh::cplx>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

unruh::ComplexMatrix from_rows(const MatrixRows& rows) {
  const int n = static_cast<int>(rows.size());
  unruh::ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("matrix rows must form a square matrix");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Negativities and pi-tangle of a tripartite fermionic GHZ state with "
      "two uniformly accelerated observers";

  py::enum_<unruh::Mode>(m, "Mode")
      .value("A", unruh::Mode::A)
      .value("BI", unruh::Mode::BI)
      .value("BII", unruh::Mode::BII)
      .value("CI", unruh::Mode::CI)
      .value("CII", unruh::Mode::CII);

  py::enum_<unruh::Family>(m, "Family")
      .value("corrected", unruh::Family::Corrected)
      .value("legacy", unruh::Family::Legacy)
      .value("numeric", unruh::Family::Numeric);

  py::class_<unruh::DeltaSurfaces>(m, "DeltaSurfaces")
      .def_readonly("dn_a", &unruh::DeltaSurfaces::dn_a)
      .def_readonly("dn_bi", &unruh::DeltaSurfaces::dn_bi)
      .def_readonly("dn_ci", &unruh::DeltaSurfaces::dn_ci)
      .def_readonly("dpi", &unruh::DeltaSurfaces::dpi);

  py::class_<unruh::TangleReport>(m, "TangleReport")
      .def_property_readonly(
          "r_b", [](const unruh::TangleReport& r) { return r.params.r_b; })
      .def_property_readonly(
          "r_c", [](const unruh::TangleReport& r) { return r.params.r_c; })
      .def_readonly("n_a", &unruh::TangleReport::n_a)
      .def_readonly("n_bi", &unruh::TangleReport::n_bi)
      .def_readonly("n_ci", &unruh::TangleReport::n_ci)
      .def_readonly("n_a_legacy", &unruh::TangleReport::n_a_legacy)
      .def_readonly("n_bi_legacy", &unruh::TangleReport::n_bi_legacy)
      .def_readonly("n_ci_legacy", &unruh::TangleReport::n_ci_legacy)
      .def_readonly("n_a_numeric", &unruh::TangleReport::n_a_numeric)
      .def_readonly("n_bi_numeric", &unruh::TangleReport::n_bi_numeric)
      .def_readonly("n_ci_numeric", &unruh::TangleReport::n_ci_numeric)
      .def_readonly("two_tangles", &unruh::TangleReport::two_tangles)
      .def_readonly("pi_corrected", &unruh::TangleReport::pi_corrected)
      .def_readonly("pi_legacy", &unruh::TangleReport::pi_legacy)
      .def_readonly("pi_numeric", &unruh::TangleReport::pi_numeric)
      .def_readonly("delta_pi", &unruh::TangleReport::delta_pi)
      .def_readonly("delta_pi_series", &unruh::TangleReport::delta_pi_series);

  m.def(
      "build_phi",
      [](double r_b, double r_c) {
        return unruh::build_phi({r_b, r_c}).amplitudes;
      },
      py::arg("r_b"), py::arg("r_c"),
      "Amplitudes of the 5-mode state over (A, B_I, B_II, C_I, C_II); the "
      "first mode is the most significant bit of the basis index.");

  m.def(
      "rho_abici",
      [](double r_b, double r_c) {
        return to_rows(unruh::rho_abici({r_b, r_c}).matrix());
      },
      py::arg("r_b"), py::arg("r_c"),
      "The 8x8 density matrix over (A, B_I, C_I) as nested lists.");

  m.def(
      "partial_transpose",
      [](double r_b, double r_c, unruh::Mode vertex) {
        return to_rows(
            unruh::partial_transpose(unruh::rho_abici({r_b, r_c}), vertex));
      },
      py::arg("r_b"), py::arg("r_c"), py::arg("vertex"),
      "Partial transpose of rho_abici over one of A, B_I, C_I.");

  m.def(
      "one_tangle_corrected",
      [](double r_b, double r_c, unruh::Mode vertex) {
        return unruh::one_tangle_corrected({r_b, r_c}, vertex);
      },
      py::arg("r_b"), py::arg("r_c"), py::arg("vertex"));

  m.def(
      "one_tangle_legacy",
      [](double r_b, double r_c, unruh::Mode vertex) {
        return unruh::one_tangle_legacy({r_b, r_c}, vertex);
      },
      py::arg("r_b"), py::arg("r_c"), py::arg("vertex"));

  m.def("one_tangle_single_acceleration",
        &unruh::one_tangle_single_acceleration, py::arg("r_c"));

  m.def(
      "negativity",
      [](double r_b, double r_c, unruh::Mode vertex) {
        return unruh::one_tangle_numeric({r_b, r_c}, vertex);
      },
      py::arg("r_b"), py::arg("r_c"), py::arg("vertex"),
      "Matrix-pipeline negativity of one vertex against the remaining pair.");

  m.def(
      "two_tangle",
      [](double r_b, double r_c, unruh::Mode first, unruh::Mode second) {
        return unruh::two_tangle({r_b, r_c}, {first, second});
      },
      py::arg("r_b"), py::arg("r_c"), py::arg("first"), py::arg("second"));

  m.def(
      "pi_tangle",
      [](double r_b, double r_c, unruh::Family family) {
        return unruh::pi_tangle({r_b, r_c}, family);
      },
      py::arg("r_b"), py::arg("r_c"),
      py::arg("family") = unruh::Family::Corrected);

  m.def(
      "delta_surfaces",
      [](double r_b, double r_c) {
        return unruh::delta_surfaces({r_b, r_c});
      },
      py::arg("r_b"), py::arg("r_c"),
      "Legacy-minus-corrected differences of the three one-tangles and the "
      "pi-tangle.");

  m.def(
      "delta_pi_series",
      [](double r_b, double r_c) {
        return unruh::delta_pi_series({r_b, r_c});
      },
      py::arg("r_b"), py::arg("r_c"));

  m.def(
      "evaluate",
      [](double r_b, double r_c) { return unruh::make_report({r_b, r_c}); },
      py::arg("r_b"), py::arg("r_c"),
      "Full TangleReport at one parameter point.");

  m.def(
      "hermitian_eigenvalues",
      [](const MatrixRows& rows) {
        return unruh::hermitian_eigenvalues(from_rows(rows)).eigenvalues;
      },
      py::arg("matrix"), "Ascending eigenvalues of a Hermitian matrix.");

  m.def(
      "trace_norm",
      [](const MatrixRows& rows) { return unruh::trace_norm(from_rows(rows)); },
      py::arg("matrix"));

  m.attr("ACCEL_MAX") = unruh::accel_max();
  m.attr("__version__") = "0.1.0";
}
