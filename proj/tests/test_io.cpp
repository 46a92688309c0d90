#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <sstream>
#include <map>
#include <set>

#include "isocanted/io.hpp"
#include "oracles.hpp"

using namespace isocanted;

TEST_CASE("matrix round trip") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    TropMatrix a = rng.matrix(n, 0.2);
    if (trial % 10 == 0) {
      a(1, 1) = Rational(BigInt("123456789012345678901234567891"), 7);
      a(1, 2) = Rational(BigInt("-99999999999999999999999"));
    }
    const std::string text = serialize_matrix(a);
    CHECK(parse_matrix(text) == a);
    CHECK(serialize_matrix(parse_matrix(text)) == text);
  }
}

TEST_CASE("matrix entries") {
  CHECK(scalar_to_json(TropScalar(3L)) == Json(3));
  CHECK(scalar_to_json(TropScalar(Rational(-1, 2))) == Json("-1/2"));
  CHECK(scalar_to_json(TropScalar::neg_inf()) == Json("-inf"));
  CHECK(scalar_from_json(Json("2/4")) == TropScalar(Rational(1, 2)));
  CHECK(scalar_from_json(Json(-7)) == TropScalar(-7L));
  CHECK_FALSE(scalar_from_json(Json("-inf")).is_finite());
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json("+inf")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json("inf")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json(1.5)), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json(nullptr)), ParseError);
}

TEST_CASE("malformed matrix files") {
  CHECK_THROWS_AS(parse_matrix("{"), ParseError);
  CHECK_THROWS_AS(parse_matrix("[]"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 2})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 2, "entries": [[0, 1], [0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 3, "entries": [[0, 1], [0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 1, "entries": [[0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 2, "entries": [[0, "1/0"], [0, 0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"size": 2, "entries": [[0, "+inf"], [0, 0]]})"), ParseError);
  const TropMatrix ok = parse_matrix(R"({"size": 2, "entries": [[0, "-inf"], ["-3/6", 0]]})");
  CHECK_FALSE(ok(1, 2).is_finite());
  CHECK(ok(2, 1) == TropScalar(Rational(-1, 2)));
}

TEST_CASE("classification report") {
  const TropMatrix sni = isocanted_sni(IsocantedSpec(4, 2, Rational(1, 2)));
  const Json r = classify_report(parse_matrix(serialize_matrix(sni)));
  CHECK(r["NI"] == true);
  CHECK(r["SNI"] == true);
  CHECK(r["VNI"] == false);
  CHECK(r["isocanted"]["a"] == "1/2");
  CHECK(r["decomposition"]["edge_lengths"] == Json::array({2, 2, 2, 2}));
  CHECK(r["decomposition"]["shift"] == Json::array({1, 1, 1, 1, 0}));

  const Json box = classify_report(cube_vni(3, 2));
  CHECK(box["VNI"] == true);
  CHECK(box["isocanted"].is_null());

  TropMatrix not_normal = TropMatrix::zero(3);
  not_normal(1, 2) = 1L;
  const Json bad = classify_report(not_normal);
  CHECK(bad["normal"] == false);
  CHECK(bad["decomposition"].is_null());
}

TEST_CASE("reports serialize") {
  const Json j = report_to_json(check_argmax({4, 6}));
  CHECK(j["name"] == "argmax");
  CHECK(j["status"] == "fail");
  CHECK(j["failing_dims"] == Json::array({5}));
  CHECK(j["witnesses"][0]["counterexample"].is_null());
  CHECK(j["witnesses"][1]["counterexample"].is_string());
  CHECK(j["witnesses"][0]["evidence"]["argmax"] == "1");
  CHECK(fvector_to_json(4, fvector_formula(4))["fvector"] == Json::array({30, 70, 60, 20}));
}

TEST_CASE("placement names") {
  CHECK(parse_placement("vni") == Placement::Vni);
  CHECK(parse_placement("sni") == Placement::Sni);
  CHECK_THROWS_AS(parse_placement("VNI"), ParseError);
  CHECK(placement_name(Placement::Sni) == "sni");
}

TEST_CASE("colour key") {
  CHECK(label_color(1) == Rgb{0, 0, 255});
  CHECK(label_color(2) == Rgb{255, 255, 0});
  CHECK(label_color(3) == Rgb{255, 0, 255});
  CHECK(label_color(4) == Rgb{0, 255, 0});
  CHECK(color_name(3) == "magenta");
  CHECK_THROWS_AS(label_color(5), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(format_decimal(Rational(1, 3), 12) == "0.333333333333");
  CHECK(format_decimal(Rational(-5, 2), 12) == "-2.5");
  CHECK(format_decimal(Rational(0), 12) == "0");
  CHECK(format_decimal(Rational(2, 3), 3) == "0.667");
}

namespace {

using V3 = std::array<Rational, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 v3(const RationalPoint& p) { return {p.coords[0], p.coords[1], p.coords[2]}; }

}  // namespace

TEST_CASE("mesh of the three-dimensional polytope") {
  for (const Placement placement : {Placement::Vni, Placement::Sni}) {
    const IsocantedSpec spec(3, 2, 1);
    const MeshExport mesh = build_mesh(spec, placement);
    CHECK(mesh.vertices.size() == 14);
    CHECK(mesh.faces.size() == 12);
    CHECK(mesh.edge_count == 24);
    std::map<int, int> by_length;
    for (const VertexLabel& w : mesh.labels) by_length[w.length()]++;
    CHECK(by_length == std::map<int, int>{{1, 4}, {2, 6}, {3, 4}});

    const FaceLattice lattice = build_face_lattice(3);
    std::set<std::set<std::uint64_t>> two_faces;
    for (const FaceInterval& f : lattice.by_dim[2]) {
      std::set<std::uint64_t> s;
      for (const VertexLabel& w : f.vertices()) s.insert(w.mask());
      two_faces.insert(s);
    }
    V3 centroid{0, 0, 0};
    for (const auto& p : mesh.vertices) {
      for (int k = 0; k < 3; ++k) centroid[k] += p.coords[k] / 14;
    }
    const HRep h = hrep_from_matrix(isocanted::isocanted(spec, placement));
    for (const auto& quad : mesh.faces) {
      std::set<std::uint64_t> labels;
      for (const std::size_t i : quad) labels.insert(mesh.labels[i].mask());
      CHECK(two_faces.count(labels) == 1);
      const V3 a = v3(mesh.vertices[quad[0]]), b = v3(mesh.vertices[quad[1]]),
               c = v3(mesh.vertices[quad[2]]), d = v3(mesh.vertices[quad[3]]);
      const V3 normal = cross(sub(b, a), sub(c, a));
      CHECK(dot(normal, sub(d, a)) == 0);  // planar
      CHECK(dot(normal, sub(a, centroid)) > 0);  // outward
      // Consecutive corners differ in one label element: a cycle, not a bow tie.
      for (int k = 0; k < 4; ++k) {
        const auto x = mesh.labels[quad[static_cast<std::size_t>(k)]].mask();
        const auto y = mesh.labels[quad[static_cast<std::size_t>((k + 1) % 4)]].mask();
        CHECK(std::popcount(x ^ y) == 1);
      }
    }
    for (const auto& p : mesh.vertices) CHECK(h.contains(p));
  }
  CHECK_THROWS_AS(build_mesh(IsocantedSpec(4, 2, 1), Placement::Vni), std::invalid_argument);
}

TEST_CASE("OFF export round trip") {
  const MeshExport mesh = build_mesh(IsocantedSpec(3, 3, Rational(2, 3)), Placement::Sni);
  const std::string off = to_off(mesh);
  CHECK(off == to_off(mesh));
  CHECK(off.rfind("COFF\n", 0) == 0);
  const ParsedOff parsed = parse_off(off);
  CHECK(parsed.colored);
  REQUIRE(parsed.vertices.size() == 14);
  REQUIRE(parsed.faces.size() == 12);
  CHECK(parsed.edge_count == 24);
  for (std::size_t v = 0; v < 14; ++v) {
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(parsed.vertices[v][k] - mesh.vertices[v].coords[k].get_d()) < 1e-11);
    }
    CHECK(parsed.colors[v] == label_color(mesh.labels[v].length()));
  }
  for (std::size_t f = 0; f < 12; ++f) {
    CHECK(parsed.faces[f] == std::vector<std::size_t>(mesh.faces[f].begin(), mesh.faces[f].end()));
  }
  std::map<int, int> colour_classes;
  for (const Rgb& c : parsed.colors) {
    for (int len = 1; len <= 4; ++len) {
      if (c == label_color(len)) colour_classes[len]++;
    }
  }
  CHECK(colour_classes == std::map<int, int>{{1, 4}, {2, 6}, {3, 4}});
}

TEST_CASE("OBJ export") {
  const MeshExport mesh = build_mesh(IsocantedSpec(3, 2, 1), Placement::Vni);
  const std::string obj = to_obj(mesh);
  int v_lines = 0, f_lines = 0;
  std::istringstream in(obj);
  std::string line;
  while (std::getline(in, line)) {
    v_lines += line.rfind("v ", 0) == 0;
    f_lines += line.rfind("f ", 0) == 0;
  }
  CHECK(v_lines == 14);
  CHECK(f_lines == 12);
  CHECK(obj.find("blue") != std::string::npos);
  CHECK(obj.find("magenta") != std::string::npos);
}

TEST_CASE("OFF parser errors") {
  CHECK_THROWS_AS(parse_off(""), ParseError);
  CHECK_THROWS_AS(parse_off("PLY\n"), ParseError);
  CHECK_THROWS_AS(parse_off("OFF\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_off("OFF\n1 0 0\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n"), ParseError);
  const ParsedOff ok = parse_off("OFF # plain\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  CHECK_FALSE(ok.colored);
  CHECK(ok.faces.size() == 1);
}
