#pragma once

// Geometric side of alcoved polytopes: the halfspace system P(A), the
// auxiliary matrix A0 and its extreme points, a brute-force exact vertex
// enumerator used as an oracle, the closed-form vertex map of isocanted
// polytopes and the checks built on top of them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isocanted/combinatorics.hpp"
#include "isocanted/matrix_classes.hpp"
#include "isocanted/rational.hpp"
#include "isocanted/tropical.hpp"

namespace isocanted {

/// A point of R^d, identified with {x in R^{d+1} : x_{d+1} = 0}.
struct RationalPoint {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  RationalPoint operator-() const;
  std::string to_string() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b);
};

/// lower <= x_i <= upper (j == 0) or lower <= x_i - x_j <= upper; 1-based.
struct Constraint {
  int i;
  int j;
  Rational lower;
  Rational upper;

  bool is_single() const { return j == 0; }
  Rational evaluate(const RationalPoint& x) const;
};

struct HRep {
  int d;
  std::vector<Constraint> constraints;

  bool contains(const RationalPoint& x) const;
  /// Number of bounding hyperplanes through x (each lower/upper bound counts once).
  int tight_count(const RationalPoint& x) const;
};

/// Inequalities a_{i,d+1} <= x_i <= -a_{d+1,i} and a_{ij} <= x_i - x_j <= -a_{ji}.
/// Needs finite entries and zero diagonal; throws std::invalid_argument when
/// some lower bound exceeds its upper bound.
HRep hrep_from_matrix(const TropMatrix& a);

/// alpha_{ij} = a_{ij} - a_{d+1,j}; the columns are the generators.
TropMatrix auxiliary_matrix(const TropMatrix& a);
/// min P(A) = col(d+1, A0), for NI matrices.
RationalPoint min_point(const TropMatrix& a);
/// max P(A) = diag(A0), for NI matrices.
RationalPoint max_point(const TropMatrix& a);

struct Vertex {
  RationalPoint point;
  std::optional<VertexLabel> label;
};

struct VertexSet {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  std::vector<RationalPoint> points() const;
};

inline constexpr int kDefaultOracleBound = 6;

/// Brute force: solve every d-subset of bounding hyperplanes exactly, keep
/// feasible unique solutions, deduplicate. Points come out sorted and
/// unlabelled. Throws BoundExceeded for d > bound and std::invalid_argument
/// for an empty polytope.
VertexSet enumerate_vertices_oracle(const HRep& h, int bound = kDefaultOracleBound);

/// A face recovered from vertex-facet incidences: the vertices it contains
/// (indices into the vertex list) and its affine dimension.
struct OracleFace {
  std::vector<std::size_t> vertex_ids;
  int dim;
};

/// Facets are the bounding hyperplanes whose tight vertices span an affine
/// (d-1)-space; every other proper face is an intersection of facets.
/// Result grouped by dimension 0..d-1, each group sorted.
std::vector<std::vector<OracleFace>> faces_from_incidences(const HRep& h,
                                                           std::span<const RationalPoint> vertices);

/// Closed-form vertex of the isocanted polytope for label W, in the given
/// placement (VNI: max at the origin; SNI: centred at the origin).
RationalPoint isocanted_vertex(const IsocantedSpec& spec, const VertexLabel& w,
                               Placement placement = Placement::Vni);

/// Attaches labels by matching against the closed-form map. Returns false when
/// some point has no matching label.
bool label_vertices(VertexSet& vs, const IsocantedSpec& spec, Placement placement);

/// The matrix C(W, x): columns of c indexed by W (increasing) followed by x
/// (with x_{d+1} = 0), padded with -inf columns to stay square.
TropMatrix generator_matrix(const TropMatrix& c, const VertexLabel& w, const RationalPoint& x);

struct VertexConditions {
  /// Every order-(j+1) minor of C(W, x) attains its maximum at least twice.
  bool in_subspace;
  /// Every such minor has all its last-column Laplace terms equal.
  bool all_terms_equal;
};

VertexConditions vertex_conditions(const TropMatrix& c, const VertexLabel& w,
                                   const RationalPoint& x);

/// Solves the linear system "all Laplace terms equal" over every
/// order-(j+1) minor of C(W, x), with x_{d+1} = 0. Returns the solution when
/// it exists and is unique.
std::optional<RationalPoint> solve_unique_vertex(const TropMatrix& c, const VertexLabel& w);

/// The unique solution exists, equals isocanted_vertex(spec, W) and satisfies
/// vertex_conditions on isocanted_vni(spec).
bool verify_unique_vertex(const IsocantedSpec& spec, const VertexLabel& w);

/// For a VNI matrix c with cubic bounding box: every label has a unique
/// vertex, the vertices are pairwise distinct and lie in P(c). Fails for
/// degenerate canting (a = 0 or a = ell).
bool verify_vertex_bijection(const TropMatrix& c);

struct Poles {
  RationalPoint north;
  RationalPoint south;
};

Poles poles(const IsocantedSpec& spec, Placement placement = Placement::Vni);
/// Halfspace system of decompose(a).box. Throws when a is not NI.
HRep bounding_box(const TropMatrix& a);

/// p lies in the convex hull of points (exact phase-one simplex).
bool in_convex_hull(const RationalPoint& p, std::span<const RationalPoint> points);
/// Points of the list that are not convex combinations of the others.
std::vector<RationalPoint> hull_vertices(std::span<const RationalPoint> points);

/// Hull vertices of [-ell, -a]^d + [0, a (1, ..., 1)], 0 <= a < ell.
std::vector<RationalPoint> box_plus_segment_vertices(int d, const Rational& ell,
                                                     const Rational& a);

/// The vertex set of P(isocanted_vni(spec)) equals the hull vertices of
/// box_plus_segment_vertices. Throws BoundExceeded for d > bound.
bool zonotope_check(const IsocantedSpec& spec, int bound = 4);

/// Centres P(a) at the origin by diagonal conjugation and checks that the
/// oracle vertex set is closed under negation. Throws when a is not NI.
bool central_symmetry_check(const TropMatrix& a, int bound = kDefaultOracleBound);

}  // namespace isocanted
