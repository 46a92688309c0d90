#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "isocanted/io.hpp"

using namespace isocanted;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  int dim = 3;
  std::string ell = "2";
  std::string cant = "1";
  std::string placement = "vni";
  std::string range = "2..60";
  std::string format;
  std::string output;
  std::string input = "-";
  int precision = kDefaultMeshPrecision;
  bool oracle = false;
  std::vector<std::string> names;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out || !(out << text)) {
    throw std::runtime_error("cannot write " + opt.output);
  }
}

bool table(const Options& opt) {
  if (opt.format.empty() || opt.format == "json") {
    return false;
  }
  if (opt.format == "table") {
    return true;
  }
  throw ParseError("format must be json or table, got '" + opt.format + "'");
}

IsocantedSpec spec_of(const Options& opt) {
  return IsocantedSpec(opt.dim, parse_rational(opt.ell), parse_rational(opt.cant));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string matrix_table(const TropMatrix& a) {
  std::string out;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= a.size(); ++j) {
      out += (j > 1 ? " " : "") +
             (a(i, j).is_finite() ? to_string(a(i, j).value()) : std::string("-inf"));
    }
    out += "\n";
  }
  return out;
}

int run_classify(const Options& opt) {
  const TropMatrix a = parse_matrix(read_input(opt.input));
  const Json report = classify_report(a);
  if (!table(opt)) {
    emit(opt, dump(report));
    return 0;
  }
  std::string out;
  for (const char* key : {"normal", "idempotent", "full_dimensional", "NI", "VNI", "SNI"}) {
    out += std::string(key) + ": " + (report[key].get<bool>() ? "yes" : "no") + "\n";
  }
  out += "isocanted: " +
         (report["isocanted"].is_null() ? std::string("none")
                                        : "a=" + report["isocanted"]["a"].dump()) +
         "\n";
  emit(opt, out);
  return 0;
}

int run_build(const Options& opt) {
  const TropMatrix a = isocanted::isocanted(spec_of(opt), parse_placement(opt.placement));
  emit(opt, table(opt) ? matrix_table(a) : serialize_matrix(a));
  return 0;
}

int run_vertices(const Options& opt) {
  const IsocantedSpec spec = spec_of(opt);
  const Placement placement = parse_placement(opt.placement);
  VertexSet vs;
  bool labelled = true;
  if (opt.oracle) {
    vs = enumerate_vertices_oracle(hrep_from_matrix(isocanted::isocanted(spec, placement)));
    labelled = label_vertices(vs, spec, placement);
  } else {
    for (const VertexLabel& w : all_labels(spec.dim())) {
      vs.vertices.push_back({isocanted_vertex(spec, w, placement), w});
    }
  }
  if (table(opt)) {
    std::string out;
    for (const Vertex& v : vs.vertices) {
      out += (v.label ? v.label->to_string() : std::string("?")) + "\t" + v.point.to_string() +
             "\n";
    }
    emit(opt, out);
  } else {
    emit(opt, dump(Json{{"d", spec.dim()},
                        {"placement", placement_name(placement)},
                        {"count", vs.size()},
                        {"vertices", vertices_to_json(vs)}}));
  }
  return labelled ? 0 : kExitFailure;
}

int run_fvector(const Options& opt) {
  const FVector f = fvector_formula(opt.dim);
  if (table(opt)) {
    std::string out;
    for (std::size_t k = 0; k < f.counts.size(); ++k) {
      out += (k ? " " : "") + to_string(f.counts[k]);
    }
    emit(opt, out + "\n");
  } else {
    emit(opt, dump(fvector_to_json(opt.dim, f)));
  }
  return 0;
}

int run_lattice(const Options& opt) {
  const FaceLattice lattice = build_face_lattice(opt.dim);
  if (!table(opt)) {
    emit(opt, dump(lattice_to_json(lattice)));
    return 0;
  }
  std::string out;
  for (std::size_t k = 0; k < lattice.by_dim.size(); ++k) {
    out += "dim " + std::to_string(k) + ": " + std::to_string(lattice.by_dim[k].size()) + "\n";
    for (const FaceInterval& f : lattice.by_dim[k]) {
      out += "  " + f.to_string() + "\n";
    }
  }
  emit(opt, out);
  return 0;
}

int run_verify(const Options& opt) {
  const DimRange range = parse_range(opt.range);
  std::vector<std::string> names = opt.names;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names = conjecture_names();
  }
  bool all_pass = true;
  Json reports = Json::array();
  std::string text;
  for (const std::string& name : names) {
    DimRange r = range;
    if (name == "cubical_g2") {
      r.lo = std::max(r.lo, kMinCubicalG2Dim);
    }
    const ConjectureReport report = run_conjecture(name, r);
    all_pass = all_pass && report.passed;
    reports.push_back(report_to_json(report));
    text += name + " " + std::to_string(r.lo) + ".." + std::to_string(r.hi) + " " +
            (report.passed ? "pass" : "fail");
    for (const Witness& w : report.witnesses) {
      if (!w.passed) {
        text += "\n  d=" + std::to_string(w.d) + ": " + *w.counterexample;
      }
    }
    text += "\n";
  }
  emit(opt, table(opt) ? text : dump(reports));
  return all_pass ? 0 : kExitFailure;
}

int run_export(const Options& opt) {
  const std::string format = opt.format.empty() ? "off" : opt.format;
  if (format != "off" && format != "obj") {
    throw ParseError("export format must be off or obj, got '" + format + "'");
  }
  const MeshExport mesh = build_mesh(spec_of(opt), parse_placement(opt.placement), opt.precision);
  emit(opt, format == "off" ? to_off(mesh) : to_obj(mesh));
  return 0;
}

void add_spec_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--dim,-d", opt.dim, "Dimension d")->capture_default_str();
  cmd->add_option("--ell", opt.ell, "Edge length of the cube (rational)")->capture_default_str();
  cmd->add_option("--a", opt.cant, "Cant parameter, 0 < a < ell (rational)")
      ->capture_default_str();
  cmd->add_option("--placement", opt.placement, "vni or sni")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Options& opt, const std::string& formats) {
  cmd->add_option("--format", opt.format, formats);
  cmd->add_option("--output,-o", opt.output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isocanted alcoved polytopes: matrices, vertices, faces and f-vector checks"};
  app.require_subcommand(1);
  Options opt;

  auto* classify = app.add_subcommand("classify", "Classify a matrix file (- for stdin)");
  classify->add_option("input", opt.input, "Matrix JSON file")->capture_default_str();
  add_output_flags(classify, opt, "json or table");

  auto* build = app.add_subcommand("build", "Print the isocanted matrix");
  add_spec_flags(build, opt);
  add_output_flags(build, opt, "json or table");

  auto* vertices = app.add_subcommand("vertices", "List labelled vertices");
  add_spec_flags(vertices, opt);
  vertices->add_flag("--oracle", opt.oracle, "Enumerate from the halfspace system instead");
  add_output_flags(vertices, opt, "json or table");

  auto* fvector = app.add_subcommand("fvector", "Face numbers I_{d,0..d-1}");
  fvector->add_option("--dim,-d", opt.dim, "Dimension d")->capture_default_str();
  add_output_flags(fvector, opt, "json or table");

  auto* lattice = app.add_subcommand("lattice", "List every proper face as an interval");
  lattice->add_option("--dim,-d", opt.dim, "Dimension d")->capture_default_str();
  add_output_flags(lattice, opt, "json or table");

  auto* verify = app.add_subcommand("verify", "Run conjecture checks over a dimension range");
  verify->add_option("names", opt.names, "Checks to run (default: all)");
  verify->add_option("--range", opt.range, "Dimensions, e.g. 2..40")->capture_default_str();
  add_output_flags(verify, opt, "json or table");

  auto* exporter = app.add_subcommand("export", "Write a mesh of a 3-dimensional polytope");
  add_spec_flags(exporter, opt);
  exporter->add_option("--precision", opt.precision, "Significant digits")->capture_default_str();
  add_output_flags(exporter, opt, "off or obj");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) return run_classify(opt);
    if (*build) return run_build(opt);
    if (*vertices) return run_vertices(opt);
    if (*fvector) return run_fvector(opt);
    if (*lattice) return run_lattice(opt);
    if (*verify) return run_verify(opt);
    if (*exporter) return run_export(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
