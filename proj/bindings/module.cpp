#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homcart/automorphisms.hpp"
#include "homcart/connection.hpp"
#include "homcart/errors.hpp"
#include "homcart/json_io.hpp"
#include "homcart/lie_algebra.hpp"
#include "homcart/spheres.hpp"

namespace py = pybind11;
using namespace homcart;

namespace {

LieAlgebra make_algebra(int dim, const std::vector<std::tuple<int, int, int, double>>& entries,
                        const std::vector<std::string>& labels) {
  std::vector<StructureEntry> table;
  table.reserve(entries.size());
  for (const auto& [i, j, k, c] : entries) table.push_back({i, j, k, c});
  return LieAlgebra(dim, std::move(table), labels);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "curvature, holonomy and infinitesimal automorphisms of invariant connections";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<construction_error>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def(py::init(&make_algebra), py::arg("dim"), py::arg("structure"),
           py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("labels", &LieAlgebra::labels)
      .def("bracket", &LieAlgebra::bracket)
      .def("ad", &LieAlgebra::ad)
      .def("check_jacobi",
           [](const LieAlgebra& L, double tol) {
             const auto rep = L.check_jacobi(tol);
             return py::make_tuple(rep.max_violation, rep.ok);
           },
           py::arg("tol") = kDefaultTol);

  py::class_<Subspace>(m, "Subspace")
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def_property_readonly("basis", &Subspace::basis)
      .def("contains", py::overload_cast<const Vector&>(&Subspace::contains, py::const_))
      .def("residual", &Subspace::residual);

  m.def("span",
        [](const std::vector<Vector>& vectors, double tol) { return span(vectors, tol); },
        py::arg("vectors"), py::arg("tol") = kDefaultTol);

  py::enum_<ConnectionKind>(m, "ConnectionKind")
      .value("Principal", ConnectionKind::Principal)
      .value("Cartan", ConnectionKind::Cartan);

  py::class_<ConnectionData>(m, "Connection")
      .def_readonly("kind", &ConnectionData::kind)
      .def_readonly("h", &ConnectionData::h)
      .def_readonly("g", &ConnectionData::g)
      .def_readonly("k_basis", &ConnectionData::k_basis)
      .def_readonly("p_basis", &ConnectionData::p_basis)
      .def_readonly("alpha", &ConnectionData::alpha)
      .def_readwrite("simply_connected", &ConnectionData::simply_connected);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("c1_residual", &ValidationReport::c1_residual)
      .def_readonly("c2_residual", &ValidationReport::c2_residual)
      .def_readonly("c1_ok", &ValidationReport::c1_ok)
      .def_readonly("c2_ok", &ValidationReport::c2_ok)
      .def_readonly("c3_checked", &ValidationReport::c3_checked)
      .def_readonly("c3_rank", &ValidationReport::c3_rank)
      .def_readonly("c3_expected", &ValidationReport::c3_expected)
      .def_readonly("c3_ok", &ValidationReport::c3_ok)
      .def_readonly("ok", &ValidationReport::ok);

  py::class_<CurvatureForm>(m, "CurvatureForm")
      .def_property_readonly("size", &CurvatureForm::size)
      .def_readonly("complement", &CurvatureForm::complement)
      .def("value", &CurvatureForm::value)
      .def("max_abs", &CurvatureForm::max_abs);

  py::class_<HolonomyReport>(m, "HolonomyReport")
      .def_readonly("dim", &HolonomyReport::dim)
      .def_readonly("killing_signature", &HolonomyReport::killing_signature)
      .def_readonly("is_subalgebra", &HolonomyReport::is_subalgebra)
      .def_readonly("equals_g", &HolonomyReport::equals_g)
      .def_readonly("algebra", &HolonomyReport::algebra);

  py::class_<InfAutResult>(m, "InfAutResult")
      .def_readonly("algebra", &InfAutResult::algebra)
      .def_readonly("hat_holonomy_dim", &InfAutResult::hat_holonomy_dim)
      .def_readonly("alpha_image_residual", &InfAutResult::alpha_image_residual)
      .def_readonly("simply_connected", &InfAutResult::simply_connected)
      .def_readonly("warnings", &InfAutResult::warnings);

  m.def("validate", &validate, py::arg("connection"), py::arg("tol") = kDefaultTol);
  m.def("curvature",
        py::overload_cast<const ConnectionData&, double>(&curvature), py::arg("connection"),
        py::arg("tol") = kDefaultTol);
  m.def("curvature_image", &curvature_image, py::arg("form"), py::arg("tol") = kDefaultTol);
  m.def("wang_holonomy", &wang_holonomy, py::arg("connection"), py::arg("tol") = kDefaultTol);
  m.def("holonomy_report", &holonomy_report, py::arg("connection"), py::arg("tol") = kDefaultTol);
  m.def("infinitesimal_automorphisms",
        py::overload_cast<const ConnectionData&, double>(&infinitesimal_automorphisms),
        py::arg("connection"), py::arg("tol") = kDefaultTol);
  m.def("bracket_closure", &bracket_closure, py::arg("algebra"), py::arg("subspace"),
        py::arg("tol") = kDefaultTol);
  m.def("killing_signature",
        py::overload_cast<const LieAlgebra&, const Subspace&, double>(&killing_signature),
        py::arg("algebra"), py::arg("subspace"), py::arg("tol") = kDefaultTol);

  // product-of-spheres generator
  py::class_<SphereParams>(m, "SphereParams")
      .def(py::init([](int p, int q, double s, double s_prime) {
             SphereParams params{p, q, s, s_prime};
             validate_params(params);
             return params;
           }),
           py::arg("p"), py::arg("q"), py::arg("s"), py::arg("s_prime"))
      .def_readonly("p", &SphereParams::p)
      .def_readonly("q", &SphereParams::q)
      .def_readonly("s", &SphereParams::s)
      .def_readonly("s_prime", &SphereParams::s_prime);

  py::class_<SphereModel>(m, "SphereModel")
      .def_readonly("params", &SphereModel::params)
      .def_property_readonly("ricci", [](const SphereModel& m_) { return m_.ricci.mat; })
      .def_property_readonly("rho", [](const SphereModel& m_) { return m_.rho.mat; })
      .def_readonly("scalar", &SphereModel::scalar)
      .def_readonly("simply_connected", &SphereModel::simply_connected)
      .def("connection", &SphereModel::connection, py::arg("unnormalized") = false);

  m.def("build_sphere_model", &build_sphere_model, py::arg("params"));
  m.def("normal_connection", &normal_connection, py::arg("params"));
  m.def("einstein_ratio", &einstein_ratio, py::arg("params"));
  m.def("kappa_closed_form", &kappa_closed_form, py::arg("params"));
  m.def("parameter_grid", &parameter_grid);

  // JSON interchange (same schema as the CLI)
  m.def("load_connection", &load_connection, py::arg("path"), py::arg("tol") = kDefaultTol);
  m.def("connection_from_json",
        [](const std::string& text, double tol) {
          return connection_from_json(nlohmann::json::parse(text), tol);
        },
        py::arg("text"), py::arg("tol") = kDefaultTol);
  m.def("connection_to_json",
        [](const ConnectionData& c) { return connection_to_json(c).dump(2); },
        py::arg("connection"));
}
