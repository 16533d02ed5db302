#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plasmah/figures.hpp"
#include "plasmah/oracle.hpp"
#include "plasmah/quadrature.hpp"
#include "plasmah/susy.hpp"
#include "plasmah/tables.hpp"

namespace py = pybind11;
using namespace plasmah;

PYBIND11_MODULE(_plasmah, m) {
    m.doc() = "Bound states of a hydrogen atom in quantum plasma under AB-flux, "
              "magnetic and electric fields (atomic units)";

    py::register_exception<Error>(m, "PhysicsError", PyExc_ValueError);

    py::class_<PlasmaFieldConfig>(m, "PlasmaFieldConfig")
        .def(py::init([](double A, double lambda_d, double g, double F, double B,
                         double xi, double mu, double hbar) {
                 return PlasmaFieldConfig{A, lambda_d, g, F, B, xi, mu, hbar};
             }),
             py::arg("A") = 1.0, py::arg("lambda_d") = 20.0, py::arg("g") = 1.0,
             py::arg("F") = 0.0, py::arg("B") = 0.0, py::arg("xi") = 0.0,
             py::arg("mu") = 1.0, py::arg("hbar") = 1.0)
        .def_readwrite("A", &PlasmaFieldConfig::A)
        .def_readwrite("lambda_d", &PlasmaFieldConfig::lambda_d)
        .def_readwrite("g", &PlasmaFieldConfig::g)
        .def_readwrite("F", &PlasmaFieldConfig::F)
        .def_readwrite("B", &PlasmaFieldConfig::B)
        .def_readwrite("xi", &PlasmaFieldConfig::xi)
        .def_readwrite("mu", &PlasmaFieldConfig::mu)
        .def_readwrite("hbar", &PlasmaFieldConfig::hbar)
        .def("omega_c", &PlasmaFieldConfig::omega_c);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init([](int n, int mm) { return QuantumNumbers{n, mm}; }),
             py::arg("n") = 0, py::arg("m") = 0)
        .def_readwrite("n", &QuantumNumbers::n)
        .def_readwrite("m", &QuantumNumbers::m);

    py::class_<SigmaIndex>(m, "SigmaIndex")
        .def_readonly("sigma_0", &SigmaIndex::sigma_0)
        .def_readonly("sigma_n", &SigmaIndex::sigma_n)
        .def_readonly("centrifugal_sq", &SigmaIndex::centrifugal_sq)
        .def_readonly("rho", &SigmaIndex::rho);

    py::class_<SeriesCoefficients>(m, "SeriesCoefficients")
        .def_readonly("c_inv", &SeriesCoefficients::c_inv)
        .def_readonly("c_cent", &SeriesCoefficients::c_cent)
        .def_readonly("c0", &SeriesCoefficients::c0)
        .def_readonly("c1", &SeriesCoefficients::c1)
        .def_readonly("c2", &SeriesCoefficients::c2)
        .def_readonly("c3", &SeriesCoefficients::c3);

    py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
        .def_readonly("e0", &EnergyBreakdown::e0)
        .def_readonly("shift", &EnergyBreakdown::shift)
        .def_readonly("e1", &EnergyBreakdown::e1)
        .def_readonly("e2", &EnergyBreakdown::e2)
        .def_readonly("total", &EnergyBreakdown::total);

    py::class_<SuperpotentialCoeffs>(m, "SuperpotentialCoeffs")
        .def_readonly("w0_inv", &SuperpotentialCoeffs::w0_inv)
        .def_readonly("w0_const", &SuperpotentialCoeffs::w0_const)
        .def_readonly("w1_lin", &SuperpotentialCoeffs::w1_lin)
        .def_readonly("w2_lin", &SuperpotentialCoeffs::w2_lin)
        .def_readonly("w2_quad", &SuperpotentialCoeffs::w2_quad)
        .def_readonly("q2", &SuperpotentialCoeffs::q2)
        .def_readonly("q3", &SuperpotentialCoeffs::q3);

    m.def("validate", &validate, py::arg("cfg"),
          "Check config invariants; returns a list of warnings");
    m.def("sigma_index", &sigma_index, py::arg("qn"), py::arg("cfg"));
    m.def("effective_potential", &effective_potential, py::arg("r"), py::arg("qn"),
          py::arg("cfg"));
    m.def("series_coefficients", &series_coefficients, py::arg("qn"), py::arg("cfg"));
    m.def("series_potential", &series_potential, py::arg("r"), py::arg("qn"),
          py::arg("cfg"));

    m.def("laguerre", &laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("unperturbed_energy", &unperturbed_energy, py::arg("qn"), py::arg("cfg"));
    m.def("normalization", &normalization, py::arg("qn"), py::arg("cfg"));
    m.def("unperturbed_wavefunction", &unperturbed_wavefunction, py::arg("r"),
          py::arg("qn"), py::arg("cfg"));
    m.def("first_order_energy", &first_order_energy, py::arg("qn"), py::arg("cfg"));
    m.def("second_order_energy", &second_order_energy, py::arg("qn"), py::arg("cfg"));
    m.def("superpotential_coeffs", &superpotential_coeffs, py::arg("qn"), py::arg("cfg"));
    m.def("moderating_function", &moderating_function, py::arg("r"), py::arg("qn"),
          py::arg("cfg"));
    m.def("total_energy", &total_energy, py::arg("qn"), py::arg("cfg"));
    m.def("full_wavefunction", &full_wavefunction, py::arg("r"), py::arg("phi"),
          py::arg("qn"), py::arg("cfg"));
    m.def("first_order_energy_quadrature", &first_order_energy_quadrature,
          py::arg("qn"), py::arg("cfg"));
    m.def("second_order_energy_quadrature", &second_order_energy_quadrature,
          py::arg("qn"), py::arg("cfg"));
    m.def("third_order_energy_quadrature", &third_order_energy_quadrature,
          py::arg("qn"), py::arg("cfg"));
    m.def("wavefunction_norm", &wavefunction_norm, py::arg("qn"), py::arg("cfg"));
    m.def("moderated_norm", &moderated_norm, py::arg("qn"), py::arg("cfg"));

    py::class_<RadialGrid>(m, "RadialGrid")
        .def(py::init([](double r_min, double r_max, int n_points) {
                 return RadialGrid{r_min, r_max, n_points};
             }),
             py::arg("r_min"), py::arg("r_max"), py::arg("n_points"))
        .def_readonly("r_min", &RadialGrid::r_min)
        .def_readonly("r_max", &RadialGrid::r_max)
        .def_readonly("n_points", &RadialGrid::n_points)
        .def("spacing", &RadialGrid::spacing);

    py::class_<TridiagonalOperator>(m, "TridiagonalOperator")
        .def(py::init([](std::vector<double> d, std::vector<double> e) {
                 return TridiagonalOperator{std::move(d), std::move(e)};
             }),
             py::arg("diagonal"), py::arg("off_diagonal"))
        .def_readonly("diagonal", &TridiagonalOperator::diagonal)
        .def_readonly("off_diagonal", &TridiagonalOperator::off_diagonal);

    py::class_<GridPolicy>(m, "GridPolicy")
        .def(py::init<>())
        .def_readwrite("initial_points", &GridPolicy::initial_points)
        .def_readwrite("max_points", &GridPolicy::max_points)
        .def_readwrite("target_estimate", &GridPolicy::target_estimate)
        .def_readwrite("r_max_factor", &GridPolicy::r_max_factor)
        .def_readwrite("r_max_override", &GridPolicy::r_max_override)
        .def_readwrite("box_mode", &GridPolicy::box_mode);

    py::class_<OracleSpectrum>(m, "OracleSpectrum")
        .def_readonly("eigenvalues", &OracleSpectrum::eigenvalues)
        .def_readonly("converged", &OracleSpectrum::converged)
        .def_readonly("grid", &OracleSpectrum::grid)
        .def_readonly("m", &OracleSpectrum::m);

    py::class_<OracleComparison>(m, "OracleComparison")
        .def_readonly("perturbative", &OracleComparison::perturbative)
        .def_readonly("oracle_energy", &OracleComparison::oracle_energy)
        .def_readonly("abs_gap", &OracleComparison::abs_gap)
        .def_readonly("rel_gap", &OracleComparison::rel_gap)
        .def_readonly("oracle_estimate", &OracleComparison::oracle_estimate)
        .def_readonly("outside_validity", &OracleComparison::outside_validity);

    m.def("build_hamiltonian", &build_hamiltonian, py::arg("grid"), py::arg("qn"),
          py::arg("cfg"), py::arg("box_mode") = false);
    m.def("lowest_eigenvalues", &lowest_eigenvalues, py::arg("op"), py::arg("k"),
          py::arg("tol") = 1e-10);
    m.def("oracle_spectrum", &oracle_spectrum, py::arg("m"), py::arg("k"),
          py::arg("cfg"), py::arg("policy") = GridPolicy{},
          py::call_guard<py::gil_scoped_release>());
    m.def("compare_with_perturbation", &compare_with_perturbation, py::arg("qn"),
          py::arg("cfg"), py::arg("policy") = GridPolicy{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<DiffCell>(m, "DiffCell")
        .def_readonly("m", &DiffCell::m)
        .def_readonly("n", &DiffCell::n)
        .def_readonly("column", &DiffCell::column)
        .def_readonly("computed", &DiffCell::computed)
        .def_readonly("reference", &DiffCell::reference)
        .def_readonly("abs_err", &DiffCell::abs_err)
        .def_readonly("rel_err", &DiffCell::rel_err)
        .def_readonly("passed", &DiffCell::pass);

    py::class_<DiffReport>(m, "DiffReport")
        .def_readonly("table_id", &DiffReport::table_id)
        .def_readonly("cells", &DiffReport::cells)
        .def_readonly("max_abs_err", &DiffReport::max_abs_err)
        .def_readonly("max_rel_err", &DiffReport::max_rel_err)
        .def_readonly("n_pass", &DiffReport::n_pass)
        .def_readonly("passed", &DiffReport::pass)
        .def("text", &render_text)
        .def("json", &render_json);

    m.def("reproduce_table", &reproduce_table, py::arg("table_id"),
          py::arg("data_path") = std::string{}, py::arg("tol_rel") = 2e-6,
          py::arg("tol_abs") = 1e-5);
    m.def("default_data_file", &default_data_file);

    py::class_<FigureSeries::Curve>(m, "FigureCurve")
        .def_readonly("label", &FigureSeries::Curve::label)
        .def_readonly("values", &FigureSeries::Curve::values);

    py::class_<FigureSeries>(m, "FigureSeries")
        .def_readonly("figure_id", &FigureSeries::figure_id)
        .def_readonly("abscissa_name", &FigureSeries::abscissa_name)
        .def_readonly("abscissa", &FigureSeries::abscissa)
        .def_readonly("curves", &FigureSeries::curves)
        .def("to_csv", &to_csv);

    m.def("figure_data", &figure_data, py::arg("figure_id"));
    m.def("known_figure_ids", &known_figure_ids);

    py::class_<DeltaERow>(m, "DeltaERow")
        .def_readonly("xi", &DeltaERow::xi)
        .def_readonly("delta_e", &DeltaERow::delta_e)
        .def_readonly("quoted", &DeltaERow::quoted)
        .def_readonly("has_quote", &DeltaERow::has_quote)
        .def_readonly("flagged", &DeltaERow::flagged)
        .def("__repr__", [](const DeltaERow& r) {
            return "DeltaERow(xi=" + format_number(r.xi)
                   + ", delta_e=" + format_number(r.delta_e) + ")";
        });

    m.def("delta_e_analysis", &delta_e_analysis, py::arg("xis"), py::arg("F"),
          py::arg("base") = PlasmaFieldConfig{});
}
