// Python extension: thin wrappers over the core library. Exact values cross
// the boundary as decimal or "p/q" strings; structured results as JSON text,
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isocanted/combinatorics.hpp"
#include "isocanted/conjectures.hpp"
#include "isocanted/geometry.hpp"
#include "isocanted/io.hpp"
#include "isocanted/matrix_classes.hpp"
#include "isocanted/tropical.hpp"

namespace py = pybind11;
using namespace isocanted;

namespace {

IsocantedSpec spec_of(int d, const std::string& ell, const std::string& a) {
  return IsocantedSpec(d, parse_rational(ell), parse_rational(a));
}

std::vector<std::string> to_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const BigInt& v : values) out.push_back(to_string(v));
  return out;
}

std::string build_matrix(int d, const std::string& ell, const std::string& a,
                         const std::string& placement) {
  return serialize_matrix(isocanted::isocanted(spec_of(d, ell, a), parse_placement(placement)));
}

std::string vertices(int d, const std::string& ell, const std::string& a,
                     const std::string& placement, bool oracle) {
  const IsocantedSpec spec = spec_of(d, ell, a);
  const Placement where = parse_placement(placement);
  VertexSet vs;
  if (oracle) {
    vs = enumerate_vertices_oracle(hrep_from_matrix(isocanted::isocanted(spec, where)));
    label_vertices(vs, spec, where);
  } else {
    for (const VertexLabel& w : all_labels(d)) {
      vs.vertices.push_back({isocanted_vertex(spec, w, where), w});
    }
  }
  return vertices_to_json(vs).dump();
}

std::pair<std::string, std::string> permanent(const std::string& matrix_text) {
  const MinorEvaluation p = trop_permanent(parse_matrix(matrix_text));
  return {p.value.is_finite() ? to_string(p.value.value()) : "-inf", to_string(p.multiplicity)};
}

std::string export_mesh(const std::string& ell, const std::string& a,
                        const std::string& placement, const std::string& format,
                        int precision) {
  const MeshExport mesh = build_mesh(spec_of(3, ell, a), parse_placement(placement), precision);
  if (format == "off") return to_off(mesh);
  if (format == "obj") return to_obj(mesh);
  throw std::invalid_argument("unknown mesh format: " + format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tropical matrices and isocanted alcoved polytopes";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("fvector", [](int d) { return to_strings(fvector_formula(d).counts); }, py::arg("d"));
  m.def("face_count", [](int d, int j) { return to_string(iap_face_count(d, j)); },
        py::arg("d"), py::arg("j"));
  m.def("count_flags", [](int d) { return to_string(count_flags(d)); }, py::arg("d"));
  m.def("maximal_chains",
        [](int d) { return to_string(count_maximal_chains(build_face_lattice(d))); },
        py::arg("d"));
  m.def("lattice", [](int d) { return lattice_to_json(build_face_lattice(d)).dump(); },
        py::arg("d"));
  m.def("build_matrix", &build_matrix, py::arg("d"), py::arg("ell"), py::arg("a"),
        py::arg("placement") = "vni");
  m.def("classify", [](const std::string& text) { return classify_report(parse_matrix(text)).dump(); },
        py::arg("matrix_json"));
  m.def("permanent", &permanent, py::arg("matrix_json"));
  m.def("vertices", &vertices, py::arg("d"), py::arg("ell"), py::arg("a"),
        py::arg("placement") = "vni", py::arg("oracle") = false);
  m.def("conjecture_names", &conjecture_names);
  m.def("verify",
        [](const std::string& name, int lo, int hi) {
          return report_to_json(run_conjecture(name, DimRange{lo, hi})).dump();
        },
        py::arg("name"), py::arg("lo"), py::arg("hi"));
  m.def("export_mesh", &export_mesh, py::arg("ell"), py::arg("a"), py::arg("placement") = "vni",
        py::arg("format") = "off", py::arg("precision") = kDefaultMeshPrecision);
}
