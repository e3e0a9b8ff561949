#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twv/dataset.hpp"
#include "twv/errors.hpp"
#include "twv/twisted.hpp"
#include "twv/verlinde.hpp"
#include "twv/workbench.hpp"

namespace py = pybind11;
using namespace twv;

namespace {

std::string report_json(const Report& r, bool timings = false) { return report_to_json(r, timings).dump(2); }

std::vector<TwistedCharacter> twisted_of(const Dataset& ds, const CharacterTable& table) {
  return extract_twisted_characters(table, fixed_characters(table, ds.F, ds.module.rank()), ds.module, ds.dual);
}

const SphericalDatum& spherical(const Dataset& ds) {
  if (!ds.spherical) throw Error("dataset " + ds.name + " has no spherical data");
  return *ds.spherical;
}

long module_multiplicity(const Dataset& ds, const std::string& C, const std::string& M, const std::string& N,
                         const std::string& form) {
  const std::size_t c = ds.ring->labels().index(C);
  const std::size_t m = ds.module.labels().index(M);
  const std::size_t n = ds.module.labels().index(N);
  if (form == "spherical") return verlinde_module_spherical(spherical(ds), c, m, n);
  if (form == "chars") {
    const CharacterTable table = characters_from_S(*ds.ring, spherical(ds).S, spherical(ds).dims_C);
    return verlinde_module_chars(table, twisted_of(ds, table), c, m, n);
  }
  if (form == "numeric") {
    const NumericCharacterTable table = characters_numeric(*ds.ring);
    const auto tw = extract_twisted_characters(table, fixed_characters(table, ds.F, ds.module.rank()), ds.module, ds.dual);
    return verlinde_module_chars(table, tw, c, m, n);
  }
  throw Error("unknown form '" + form + "'");
}

std::string twisted_coefficient(const Dataset& ds, const std::string& C, const std::string& Cp, const std::string& D) {
  const auto& s = spherical(ds);
  auto row = [&](const std::string& label) {
    const std::size_t i = ds.ring->labels().index(label);
    for (std::size_t k = 0; k < s.fixed.size(); ++k)
      if (s.fixed[k] == i) return k;
    throw Error("label " + label + " is not fixed by F");
  };
  return twisted_fusion_coeff_spherical(s.Scross, s.dims_M, s.global_dim, ds.modulus, row(C), row(Cp), row(D))
      .to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Verlinde formulas for fusion rings, module categories and their twisted sectors";

  py::register_exception<Error>(m, "Error");

  py::class_<CycNum>(m, "CycNum")
      .def(py::init<long>(), py::arg("value") = 0)
      .def_static("zeta", &CycNum::zeta, py::arg("n"), py::arg("k") = 1)
      .def_static("sqrt", [](long n) { return real_sqrt(n); })
      .def("conj", &CycNum::conj)
      .def("inverse", &CycNum::inverse)
      .def("approx", py::overload_cast<>(&CycNum::approx, py::const_))
      .def("__complex__", py::overload_cast<>(&CycNum::approx, py::const_))
      .def("__add__", [](const CycNum& a, const CycNum& b) { return a + b; })
      .def("__sub__", [](const CycNum& a, const CycNum& b) { return a - b; })
      .def("__mul__", [](const CycNum& a, const CycNum& b) { return a * b; })
      .def("__truediv__", [](const CycNum& a, const CycNum& b) { return a / b; })
      .def("__neg__", [](const CycNum& a) { return -a; })
      .def("__eq__", [](const CycNum& a, const CycNum& b) { return a == b; })
      .def("__hash__", [](const CycNum& a) { return std::hash<std::string>{}(a.to_string()); })
      .def("__str__", &CycNum::to_string)
      .def("__repr__", [](const CycNum& a) { return "CycNum(" + a.to_string() + ")"; });
  py::implicitly_convertible<long, CycNum>();

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("name", &Dataset::name)
      .def_readonly("modulus", &Dataset::modulus)
      .def_property_readonly("labels", [](const Dataset& d) { return d.ring->labels().names(); })
      .def_property_readonly("module_labels", [](const Dataset& d) { return d.module.labels().names(); })
      .def_property_readonly("fixed_labels",
                             [](const Dataset& d) {
                               std::vector<std::string> out;
                               for (std::size_t i : d.fixed_labels()) out.push_back(d.ring->labels().name(i));
                               return out;
                             })
      .def_property_readonly("has_spherical", [](const Dataset& d) { return d.spherical.has_value(); })
      .def("N",
           [](const Dataset& d, const std::string& a, const std::string& b, const std::string& c) {
             const auto& L = d.ring->labels();
             return d.ring->N(L.index(a), L.index(b), L.index(c));
           })
      .def("A", [](const Dataset& d, const std::string& c, const std::string& x, const std::string& y) {
        return d.module.A(d.ring->labels().index(c), d.module.labels().index(x), d.module.labels().index(y));
      });

  m.def("bundled_datasets", &bundled_dataset_names);
  m.def("load_dataset", &load_dataset, py::arg("spec"));
  m.def("validate_json", [](const std::string& spec) {
    std::string source;
    return report_json(validate_dataset(parse_dataset(read_dataset_json(spec, &source), source)));
  });
  m.def("report_json",
        [](const std::string& spec, std::uint64_t seed, bool timings) {
          return report_json(full_report(load_dataset(spec), {seed, timings}), timings);
        },
        py::arg("spec"), py::arg("seed") = 0, py::arg("timings") = false);
  m.def("oracle_json", [](const std::string& spec) { return report_json(oracle_compare(load_dataset(spec))); });
  m.def("gauge_json",
        [](const std::string& spec, std::uint64_t seed) { return report_json(gauge_test(load_dataset(spec), seed)); },
        py::arg("spec"), py::arg("seed") = 0);
  m.def("module_multiplicity", &module_multiplicity, py::arg("dataset"), py::arg("C"), py::arg("M"), py::arg("N"),
        py::arg("form") = "spherical");
  m.def("classical_multiplicity", [](const Dataset& ds, const std::string& a, const std::string& b,
                                     const std::string& c) {
    const auto& L = ds.ring->labels();
    return verlinde_classical(spherical(ds), L.index(a), L.index(b), L.index(c));
  });
  m.def("twisted_coefficient", &twisted_coefficient, py::arg("dataset"), py::arg("C"), py::arg("Cp"), py::arg("D"));
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  });
}
