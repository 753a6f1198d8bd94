#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superstein/algfile.hpp"
#include "superstein/cocycle22.hpp"
#include "superstein/cyclic.hpp"
#include "superstein/errors.hpp"
#include "superstein/homology.hpp"
#include "superstein/report.hpp"
#include "superstein/steinberg.hpp"

namespace py = pybind11;
using namespace superstein;

namespace {

// Sparse vector as {index: "p/q"}; coefficients stay exact.
py::dict to_dict(const SparseVec& v) {
  py::dict d;
  for (const auto& [k, c] : v) d[py::int_(k)] = c.to_string();
  return d;
}

Field field_of(const std::string& text) { return Field::parse(text); }
MatrixShape shape_of(const std::string& text) { return MatrixShape::parse(text); }

py::dict homology_dict(const HomologyReport& h) {
  py::dict d;
  d["dim"] = h.dim;
  d["wedge2"] = h.wedge2;
  d["wedge3"] = h.wedge3;
  d["rank_d2"] = h.rank_d2;
  d["rank_d3"] = h.rank_d3;
  d["h1"] = h.h1;
  d["h2"] = h.h2;
  d["blocks"] = h.blocks;
  d["boundary_squares_to_zero"] = h.boundary_squares_to_zero;
  return d;
}

}  // namespace

PYBIND11_MODULE(_superstein, m) {
  m.doc() = "Exact arithmetic for superalgebras, Steinberg Lie superalgebras and cyclic homology";
  m.attr("__version__") = SUPERSTEIN_VERSION;

  py::register_exception<AlgFileError>(m, "AlgFileError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<SuperAlgebra>(m, "SuperAlgebra")
      .def_property_readonly("name", &SuperAlgebra::name)
      .def_property_readonly("field", [](const SuperAlgebra& a) { return a.field().name(); })
      .def_property_readonly("dim", &SuperAlgebra::dim)
      .def_property_readonly("basis_names", &SuperAlgebra::basis_names)
      .def_property_readonly("parities",
                             [](const SuperAlgebra& a) {
                               std::vector<int> p;
                               for (std::size_t i = 0; i < a.dim(); ++i) p.push_back(a.parity(i));
                               return p;
                             })
      .def_property_readonly("unit", [](const SuperAlgebra& a) { return a.basis_name(a.unit()); })
      .def("product", [](const SuperAlgebra& a, std::size_t i, std::size_t j) { return to_dict(a.product(i, j)); })
      .def("__repr__", [](const SuperAlgebra& a) {
        return "<SuperAlgebra " + a.name() + " over " + a.field().name() + ", dim " + std::to_string(a.dim()) + ">";
      });

  py::class_<FinLieSuper>(m, "LieSuperalgebra")
      .def_property_readonly("label", &FinLieSuper::label)
      .def_property_readonly("dim", &FinLieSuper::dim)
      .def_property_readonly("parities", &FinLieSuper::parities)
      .def_property_readonly("basis_names", &FinLieSuper::basis_names)
      .def("bracket", [](const FinLieSuper& l, std::size_t i, std::size_t j) { return to_dict(l.bracket(i, j)); })
      .def("__repr__", [](const FinLieSuper& l) {
        return "<LieSuperalgebra " + l.label() + ", dim " + std::to_string(l.dim()) + ">";
      });

  m.def("builtin", [](const std::string& name, const std::string& field) { return builtin(name, field_of(field)); },
        py::arg("name"), py::arg("field") = "Q");
  m.def("corpus_names", &corpus_names);
  m.def("parse_algebra", [](const std::string& text) { return parse_algebra(text); }, py::arg("text"));
  m.def("load_algebra", [](const std::string& source) { return load_algebra(source); }, py::arg("source"));
  m.def("serialize_algebra", &serialize_algebra);
  m.def("validate", [](const SuperAlgebra& a) {
    std::vector<std::string> out;
    for (const auto& i : validate(a).issues) out.push_back(i.message);
    return out;
  });

  m.def("hc1_dim", [](const SuperAlgebra& a) { return hc1(a).dim; });
  m.def("hc_n", &hc_n, py::arg("algebra"), py::arg("n"), py::arg("max_chain") = kDefaultMaxChain);
  m.def("pairing_dim", [](const SuperAlgebra& a) { return PairingModule(a).dim(); });

  m.def("concretize",
        [](const std::string& target, const SuperAlgebra& a, const std::string& shape) {
          return concretize(parse_lie_source(target), a, shape_of(shape));
        },
        py::arg("target"), py::arg("algebra"), py::arg("shape"));
  m.def("export_lie", &export_lie);
  m.def("parse_lie", [](const std::string& text) { return parse_lie(text); });
  m.def("sl_dims", [](const SuperAlgebra& a, const std::string& shape) {
    const SlSpaces s = sl_space(a, shape_of(shape));
    py::dict d;
    d["derived"] = s.derived.dim();
    d["trace_criterion"] = s.trace_criterion.dim();
    d["equal"] = s.equal;
    d["contained"] = s.contained;
    return d;
  });

  m.def("steinberg_kernel", [](const SuperAlgebra& a, const std::string& shape) {
    const StModel model(a, shape_of(shape));
    const KernelPhiReport k = kernel_phi(model);
    py::dict d;
    d["st_dim"] = model.dim();
    d["kernel_dim"] = k.kernel.dim();
    d["hc1_dim"] = k.hc1_dim;
    d["hc1_match"] = k.hc1_match;
    d["central"] = k.central;
    return d;
  });
  m.def("verify_steinberg", [](const SuperAlgebra& a, const std::string& shape) {
    const StVerification v = verify_st(StModel(a, shape_of(shape)));
    py::dict d;
    for (auto [name, c] : {std::pair{"relations", &v.relations}, std::pair{"axioms", &v.axioms},
                           std::pair{"expansion", &v.expansion}, std::pair{"homomorphism", &v.homomorphism},
                           std::pair{"nu_section", &v.nu_section}})
      d[name] = c->pass ? py::object(py::none()) : py::object(py::str(c->witness));
    return d;
  }, "Maps each suite to None on success or to its witness.");

  m.def("verify_cocycle", [](const SuperAlgebra& a, bool mutate) {
    const CocycleVerdict v = verify_cocycle(a, mutate);
    py::dict d;
    d["skew"] = v.skew;
    d["jacobi"] = v.jacobi;
    d["witness"] = v.witness;
    d["message"] = v.message;
    return d;
  }, py::arg("algebra"), py::arg("mutate") = false);
  m.def("build_st_sharp", py::overload_cast<const SuperAlgebra&>(&build_st_sharp));

  m.def("homology",
        [](const FinLieSuper& l, std::size_t max_wedge) {
          HomologyReport h;
          {
            py::gil_scoped_release release;
            h = homology(l, max_wedge);
          }
          return homology_dict(h);
        },
        py::arg("lie"), py::arg("max_wedge") = kDefaultMaxWedge);

  // Full reports as JSON text; the package wrapper decodes them.
  m.def("_report", [](const std::string& command, const SuperAlgebra& a, const std::string& shape,
                      const std::string& target, std::size_t degree, std::size_t max_wedge, std::size_t max_chain) {
    ReportOptions opt;
    opt.max_wedge = max_wedge;
    opt.max_chain = max_chain;
    opt.verify = true;
    Report r("?");
    if (command == "validate") r = report_validate(a);
    else if (command == "hc") r = report_hc(a, degree, opt);
    else if (command == "pairing") r = report_pairing(a);
    else if (command == "sl") r = report_sl(a, shape_of(shape));
    else if (command == "st") r = report_st(a, shape_of(shape), opt);
    else if (command == "kernel") r = report_kernel(a, shape_of(shape));
    else if (command == "homology") r = report_homology(parse_lie_source(target), a, shape_of(shape), opt);
    else if (command == "cocycle22") r = report_cocycle22(a);
    else throw std::invalid_argument("unknown report '" + command + "'");
    return r.to_json().dump();
  });
  m.def("_criterion", [](int k) { return report_criterion(k).to_json().dump(); });
}
