#pragma once

// Serialization: matrix files, reports and listings as JSON, and OFF/OBJ mesh
// export of three-dimensional isocanted polytopes.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isocanted/combinatorics.hpp"
#include "isocanted/conjectures.hpp"
#include "isocanted/geometry.hpp"
#include "isocanted/matrix_classes.hpp"
#include "isocanted/tropical.hpp"

namespace isocanted {

using Json = nlohmann::ordered_json;

/// Integers become JSON numbers when they fit in 64 bits, everything else a
/// canonical "p/q" string; -inf is the string "-inf".
Json scalar_to_json(const TropScalar& value);
/// Accepts integers, "p", "p/q" and "-inf". Throws ParseError on anything else
/// (floats, "+inf", zero denominators).
TropScalar scalar_from_json(const Json& value);

/// {"size": n, "entries": [[...], ...]}.
Json matrix_to_json(const TropMatrix& a);
TropMatrix matrix_from_json(const Json& doc);
std::string serialize_matrix(const TropMatrix& a);
/// Throws ParseError for malformed JSON, non-square data or bad entries.
TropMatrix parse_matrix(std::string_view text);

Json rationals_to_json(const std::vector<Rational>& values);
Json point_to_json(const RationalPoint& p);

/// Class flags, the box/perturbation decomposition when NI, and the cant
/// parameter when isocanted.
Json classify_report(const TropMatrix& a);

Json fvector_to_json(int d, const FVector& f);
Json lattice_to_json(const FaceLattice& lattice);
Json vertices_to_json(const VertexSet& vs);
Json report_to_json(const ConjectureReport& report);

Placement parse_placement(std::string_view text);
std::string placement_name(Placement p);

inline constexpr int kDefaultMeshPrecision = 12;

struct Rgb {
  int r;
  int g;
  int b;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Key by label length: 1 blue, 2 yellow, 3 magenta, 4 green.
Rgb label_color(int length);
std::string color_name(int length);

struct MeshExport {
  std::vector<RationalPoint> vertices;
  std::vector<VertexLabel> labels;
  /// Quadrilaterals as vertex indices, cyclically ordered and outward facing.
  std::vector<std::array<std::size_t, 4>> faces;
  std::size_t edge_count;
  int precision;
};

/// Vertices from the closed-form map, faces from the 2-dimensional intervals.
/// Throws std::invalid_argument unless spec.dim() == 3.
MeshExport build_mesh(const IsocantedSpec& spec, Placement placement,
                      int precision = kDefaultMeshPrecision);

/// Decimal rendering with the given number of significant digits.
std::string format_decimal(const Rational& value, int precision);

/// COFF: header, counts, "x y z r g b a" vertex lines, "4 i j k l" faces.
std::string to_off(const MeshExport& mesh);
/// OBJ with the colour of each vertex recorded in a comment.
std::string to_obj(const MeshExport& mesh);

struct ParsedOff {
  bool colored;
  std::vector<std::array<double, 3>> vertices;
  std::vector<Rgb> colors;
  std::vector<std::vector<std::size_t>> faces;
  std::size_t edge_count;
};

/// Reads OFF or COFF text. Throws ParseError.
ParsedOff parse_off(std::string_view text);

}  // namespace isocanted
