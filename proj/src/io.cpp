#include "isocanted/io.hpp"

#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace isocanted {

Json scalar_to_json(const TropScalar& value) {
  if (!value.is_finite()) {
    return "-inf";
  }
  const Rational& q = value.value();
  if (is_integer(q) && q.get_num().fits_slong_p()) {
    return static_cast<std::int64_t>(q.get_num().get_si());
  }
  return to_string(q);
}

TropScalar scalar_from_json(const Json& value) {
  if (value.is_number_unsigned()) {
    return Rational(parse_rational(std::to_string(value.get<std::uint64_t>())));
  }
  if (value.is_number_integer()) {
    return Rational(parse_rational(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) {
    const auto& text = value.get_ref<const std::string&>();
    if (text == "-inf") {
      return TropScalar::neg_inf();
    }
    if (text == "inf" || text == "+inf") {
      throw ParseError("+inf is not a max-plus scalar");
    }
    return parse_rational(text);
  }
  throw ParseError("matrix entry must be an integer or a string, got " + value.dump());
}

Json matrix_to_json(const TropMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= a.size(); ++j) {
      row.push_back(scalar_to_json(a(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"size", a.size()}, {"entries", std::move(rows)}};
}

TropMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("entries")) {
    throw ParseError("matrix file needs \"size\" and \"entries\"");
  }
  if (!doc["size"].is_number_integer() || doc["size"].get<std::int64_t>() < 2) {
    throw ParseError("\"size\" must be an integer >= 2");
  }
  const auto n = static_cast<std::size_t>(doc["size"].get<std::int64_t>());
  const Json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != n) {
    throw ParseError("\"entries\" must hold " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<TropScalar>> rows;
  for (const Json& row : entries) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError("matrix is not square");
    }
    std::vector<TropScalar> values;
    for (const Json& e : row) {
      values.push_back(scalar_from_json(e));
    }
    rows.push_back(std::move(values));
  }
  return TropMatrix(rows);
}

std::string serialize_matrix(const TropMatrix& a) { return matrix_to_json(a).dump(2) + "\n"; }

TropMatrix parse_matrix(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) {
    out.push_back(scalar_to_json(v));
  }
  return out;
}

Json point_to_json(const RationalPoint& p) { return rationals_to_json(p.coords); }

Json classify_report(const TropMatrix& a) {
  Json out;
  out["size"] = a.size();
  out["normal"] = is_normal(a);
  out["idempotent"] = is_idempotent(a);
  out["full_dimensional"] = is_full_dimensional(a);
  out["NI"] = is_ni(a);
  out["VNI"] = is_vni(a);
  out["SNI"] = is_sni(a);
  out["decomposition"] = nullptr;
  out["isocanted"] = nullptr;
  if (is_ni(a)) {
    const Decomposition dec = decompose(a);
    Json perturbation = Json::array();
    for (std::size_t i = 1; i <= a.size(); ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 1; j <= a.size(); ++j) {
        row.push_back(dec.perturbation(i, j));
      }
      perturbation.push_back(rationals_to_json(row));
    }
    out["decomposition"] = Json{{"edge_lengths", rationals_to_json(dec.edge_lengths)},
                                {"shift", rationals_to_json(dec.shift)},
                                {"box", matrix_to_json(dec.box)["entries"]},
                                {"perturbation", std::move(perturbation)}};
    if (const auto cant = is_isocanted(a)) {
      out["isocanted"] = Json{{"a", scalar_to_json(*cant)}};
    }
  }
  return out;
}

namespace {

Json bigints_to_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const BigInt& v : values) {
    if (v.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(v.get_si()));
    } else {
      out.push_back(to_string(v));
    }
  }
  return out;
}

}  // namespace

Json fvector_to_json(int d, const FVector& f) {
  return Json{{"d", d}, {"fvector", bigints_to_json(f.counts)}};
}

Json lattice_to_json(const FaceLattice& lattice) {
  Json dims = Json::array();
  for (std::size_t k = 0; k < lattice.by_dim.size(); ++k) {
    Json faces = Json::array();
    for (const FaceInterval& f : lattice.by_dim[k]) {
      faces.push_back(f.to_string());
    }
    dims.push_back(Json{{"dim", k}, {"count", faces.size()}, {"faces", std::move(faces)}});
  }
  return Json{{"d", lattice.d},
              {"fvector", bigints_to_json(lattice.fvector().counts)},
              {"faces_by_dim", std::move(dims)}};
}

Json vertices_to_json(const VertexSet& vs) {
  Json out = Json::array();
  for (const Vertex& v : vs.vertices) {
    Json entry;
    entry["label"] = v.label ? Json(v.label->to_string()) : Json(nullptr);
    entry["length"] = v.label ? Json(v.label->length()) : Json(nullptr);
    entry["point"] = point_to_json(v.point);
    out.push_back(std::move(entry));
  }
  return out;
}

Json report_to_json(const ConjectureReport& report) {
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    Json evidence = Json::object();
    for (const auto& [k, v] : w.evidence) {
      evidence[k] = v;
    }
    witnesses.push_back(Json{{"d", w.d},
                             {"status", w.passed ? "pass" : "fail"},
                             {"evidence", std::move(evidence)},
                             {"counterexample", w.counterexample ? Json(*w.counterexample)
                                                                 : Json(nullptr)}});
  }
  return Json{{"name", report.name},
              {"range", {report.range.lo, report.range.hi}},
              {"status", report.passed ? "pass" : "fail"},
              {"failing_dims", report.failing_dims()},
              {"witnesses", std::move(witnesses)}};
}

Placement parse_placement(std::string_view text) {
  if (text == "vni") {
    return Placement::Vni;
  }
  if (text == "sni") {
    return Placement::Sni;
  }
  throw ParseError("placement must be vni or sni, got '" + std::string(text) + "'");
}

std::string placement_name(Placement p) { return p == Placement::Vni ? "vni" : "sni"; }

Rgb label_color(int length) {
  switch (length) {
    case 1:
      return {0, 0, 255};
    case 2:
      return {255, 255, 0};
    case 3:
      return {255, 0, 255};
    case 4:
      return {0, 255, 0};
    default:
      throw std::invalid_argument("no colour for label length " + std::to_string(length));
  }
}

std::string color_name(int length) {
  static const char* names[] = {"blue", "yellow", "magenta", "green"};
  label_color(length);
  return names[length - 1];
}

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 as_vec(const RationalPoint& p) { return {p.coords[0], p.coords[1], p.coords[2]}; }

Vec3 minus(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

MeshExport build_mesh(const IsocantedSpec& spec, Placement placement, int precision) {
  if (spec.dim() != 3) {
    throw std::invalid_argument("mesh export needs d = 3");
  }
  if (precision < 1 || precision > 40) {
    throw std::invalid_argument("precision must lie in [1, 40]");
  }
  MeshExport mesh{{}, all_labels(3), {}, 0, precision};
  std::map<std::uint64_t, std::size_t> index_of;
  Vec3 centroid{0, 0, 0};
  for (const VertexLabel& w : mesh.labels) {
    index_of[w.mask()] = mesh.vertices.size();
    mesh.vertices.push_back(isocanted_vertex(spec, w, placement));
    const Vec3 v = as_vec(mesh.vertices.back());
    for (int k = 0; k < 3; ++k) {
      centroid[k] += v[k];
    }
  }
  for (Rational& c : centroid) {
    c /= static_cast<long>(mesh.vertices.size());
  }
  const FaceLattice lattice = build_face_lattice(3);
  mesh.edge_count = lattice.by_dim[1].size();
  for (const FaceInterval& f : lattice.by_dim[2]) {
    const std::uint64_t low = f.bottom();
    const std::uint64_t extra = f.top() & ~low;
    const std::uint64_t p = extra & (~extra + 1);
    const std::uint64_t q = extra & ~p;
    std::array<std::size_t, 4> quad{index_of.at(low), index_of.at(low | p),
                                    index_of.at(low | p | q), index_of.at(low | q)};
    const Vec3 v0 = as_vec(mesh.vertices[quad[0]]);
    const Vec3 normal = cross(minus(as_vec(mesh.vertices[quad[1]]), v0),
                              minus(as_vec(mesh.vertices[quad[2]]), v0));
    if (dot(normal, minus(v0, centroid)) < 0) {
      std::swap(quad[1], quad[3]);
    }
    mesh.faces.push_back(quad);
  }
  return mesh;
}

std::string format_decimal(const Rational& value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value.get_d());
  std::string out = buf;
  return out == "-0" ? "0" : out;
}

std::string to_off(const MeshExport& mesh) {
  std::ostringstream out;
  out << "COFF\n";
  out << "# precision " << mesh.precision << "\n";
  out << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << mesh.edge_count << '\n';
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    for (const Rational& c : mesh.vertices[v].coords) {
      out << format_decimal(c, mesh.precision) << ' ';
    }
    const Rgb rgb = label_color(mesh.labels[v].length());
    out << rgb.r << ' ' << rgb.g << ' ' << rgb.b << " 255\n";
  }
  for (const auto& quad : mesh.faces) {
    out << '4';
    for (const std::size_t i : quad) {
      out << ' ' << i;
    }
    out << '\n';
  }
  return out.str();
}

std::string to_obj(const MeshExport& mesh) {
  std::ostringstream out;
  out << "# precision " << mesh.precision << "\n";
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    out << 'v';
    for (const Rational& c : mesh.vertices[v].coords) {
      out << ' ' << format_decimal(c, mesh.precision);
    }
    const int length = mesh.labels[v].length();
    const Rgb rgb = label_color(length);
    out << " # " << mesh.labels[v].to_string() << ' ' << color_name(length) << ' ' << rgb.r
        << ' ' << rgb.g << ' ' << rgb.b << '\n';
  }
  for (const auto& quad : mesh.faces) {
    out << 'f';
    for (const std::size_t i : quad) {
      out << ' ' << i + 1;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

class OffTokens {
 public:
  explicit OffTokens(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      line = line.substr(0, line.find('#'));
      std::istringstream words(line);
      std::vector<std::string> row;
      std::string w;
      while (words >> w) {
        row.push_back(w);
      }
      if (!row.empty()) {
        rows_.push_back(std::move(row));
      }
    }
  }

  const std::vector<std::string>& next_row() {
    if (pos_ >= rows_.size()) {
      throw ParseError("OFF data ends early");
    }
    return rows_[pos_++];
  }

 private:
  std::vector<std::vector<std::string>> rows_;
  std::size_t pos_ = 0;
};

template <typename T>
T number(const std::string& text) {
  std::istringstream in(text);
  T v{};
  if (!(in >> v) || !in.eof()) {
    throw ParseError("bad number '" + text + "' in OFF data");
  }
  return v;
}

}  // namespace

ParsedOff parse_off(std::string_view text) {
  OffTokens tokens(text);
  const auto& header = tokens.next_row();
  if (header.size() != 1 || (header[0] != "OFF" && header[0] != "COFF")) {
    throw ParseError("missing OFF header");
  }
  ParsedOff out{header[0] == "COFF", {}, {}, {}, 0};
  const auto counts = tokens.next_row();
  if (counts.size() != 3) {
    throw ParseError("OFF counts line needs three numbers");
  }
  const auto nv = number<std::size_t>(counts[0]);
  const auto nf = number<std::size_t>(counts[1]);
  out.edge_count = number<std::size_t>(counts[2]);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& row = tokens.next_row();
    if (row.size() != (out.colored ? 7U : 3U)) {
      throw ParseError("vertex line " + std::to_string(v) + " has " + std::to_string(row.size()) +
                       " fields");
    }
    out.vertices.push_back({number<double>(row[0]), number<double>(row[1]),
                            number<double>(row[2])});
    if (out.colored) {
      out.colors.push_back({number<int>(row[3]), number<int>(row[4]), number<int>(row[5])});
    }
  }
  for (std::size_t f = 0; f < nf; ++f) {
    const auto& row = tokens.next_row();
    const auto k = number<std::size_t>(row.at(0));
    if (k < 3 || row.size() < k + 1) {
      throw ParseError("face line " + std::to_string(f) + " is malformed");
    }
    std::vector<std::size_t> face;
    for (std::size_t i = 1; i <= k; ++i) {
      const auto idx = number<std::size_t>(row[i]);
      if (idx >= nv) {
        throw ParseError("face index " + row[i] + " out of range");
      }
      face.push_back(idx);
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

}  // namespace isocanted
