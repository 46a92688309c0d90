#pragma once

// Combinatorial type of the d-dimensional isocanted alcoved polytope.
//
// Vertices are labelled by proper nonempty subsets W of [d+1]. A k-face is an
// interval [X, Y] of such subsets, X <= Y, |Y| - |X| = k, whose vertices are
// the labels U with X <= U <= Y. The face order is interval containment.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isocanted/rational.hpp"

namespace isocanted {

/// Largest d for which labels fit in a 64-bit mask.
inline constexpr int kMaxLabelDim = 62;

class VertexLabel {
 public:
  /// Elements are 1-based members of [d+1]. Throws std::invalid_argument for
  /// empty or full sets, out-of-range elements, or d outside [1, kMaxLabelDim].
  VertexLabel(int d, std::span<const int> elements);
  VertexLabel(int d, std::initializer_list<int> elements)
      : VertexLabel(d, std::span<const int>(elements.begin(), elements.size())) {}
  static VertexLabel from_mask(int d, std::uint64_t mask);

  int dim() const { return d_; }
  /// Bit k-1 set iff k is in W.
  std::uint64_t mask() const { return mask_; }
  int length() const;
  bool contains(int k) const { return (mask_ >> (k - 1)) & 1U; }
  std::vector<int> elements() const;
  /// "{1,2,4}".
  std::string to_string() const;

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

 private:
  VertexLabel(int d, std::uint64_t mask, bool);
  int d_;
  std::uint64_t mask_;
};

std::uint64_t full_mask(int d);

/// All 2^{d+1} - 2 labels, ordered by length and then by mask.
std::vector<VertexLabel> all_labels(int d);

/// [d+1] \ W.
VertexLabel antipode(const VertexLabel& w);

class FaceInterval {
 public:
  /// Throws std::invalid_argument unless 0 != bottom <= top != [d+1].
  FaceInterval(int d, std::uint64_t bottom, std::uint64_t top);
  FaceInterval(const VertexLabel& bottom, const VertexLabel& top);

  int ambient_dim() const { return d_; }
  std::uint64_t bottom() const { return bottom_; }
  std::uint64_t top() const { return top_; }
  int dim() const;
  std::uint64_t vertex_count() const { return std::uint64_t{1} << dim(); }
  std::vector<VertexLabel> vertices() const;
  bool contains(const VertexLabel& w) const;
  /// Face order: this <= other.
  bool is_subface_of(const FaceInterval& other) const;
  std::string to_string() const;

  friend auto operator<=>(const FaceInterval&, const FaceInterval&) = default;

 private:
  int d_;
  std::uint64_t bottom_;
  std::uint64_t top_;
};

/// Antipodal involution on faces: [X, Y] -> [Y^c, X^c].
FaceInterval antipode(const FaceInterval& f);

struct FVector {
  std::vector<BigInt> counts;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// I_{d,j} = (2^{d+1-j} - 2) C(d+1, j) for 0 <= j <= d-1, I_{d,d} = 1, and
/// zero for j < 0 or j > d. Valid for d >= 1.
BigInt iap_face_count(int d, int j);
/// (I_{d,0}, ..., I_{d,d-1}), plus I_{d,d} = 1 when with_top. Throws for d < 2.
FVector fvector_formula(int d, bool with_top = false);

/// B_{d,j} = 2^{d-j} C(d, j), j = 0..d.
BigInt box_face_count(int d, int j);
FVector fvector_box(int d, bool with_top = false);

/// C_{d,j} = (2^{d-j} - 1) C(d, j), defined for every 0 <= j <= d.
BigInt cask_face_count(int d, int j);
/// (C_{d,0}, ..., C_{d,d-2}).
FVector fvector_cask(int d);

/// Rows 0..dmax of the 2-power matrix T, Pascal matrix P, box matrix T o P
/// and the half f-vector matrix H (with H_{d,d} = 1/2). Row d has d+1 entries.
struct FVectorMatrices {
  std::vector<std::vector<BigInt>> two_power;
  std::vector<std::vector<BigInt>> pascal;
  std::vector<std::vector<BigInt>> box;
  std::vector<std::vector<Rational>> half;
};
FVectorMatrices fvector_matrices(int dmax);

inline constexpr int kDefaultLatticeBound = 8;

struct FaceLattice {
  int d;
  /// by_dim[k] lists the k-faces, k = 0..d-1, sorted.
  std::vector<std::vector<FaceInterval>> by_dim;

  FVector fvector() const;
  std::size_t size() const;
};

/// Every proper face as an interval. Throws BoundExceeded for d > bound and
/// std::invalid_argument for d < 2.
FaceLattice build_face_lattice(int d, int bound = kDefaultLatticeBound);

struct SkeletonGraph {
  int d;
  std::vector<VertexLabel> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t index_of(const VertexLabel& w) const;
};

/// Edges join W and W' when W < W' and |W'| = |W| + 1.
SkeletonGraph skeleton(int d, int bound = kDefaultLatticeBound);

/// Number of parents plus children: d for lengths 1 and d, d+1 otherwise.
int valence(const VertexLabel& w);
/// |W \ W'| + |W' \ W|.
int distance(const VertexLabel& w, const VertexLabel& other);
/// Closed form d + 1.
int diameter(int d);

std::vector<int> bfs_distances(const SkeletonGraph& g, std::size_t source);
/// Largest BFS eccentricity over all nodes.
int diameter_bfs(const SkeletonGraph& g);

/// Closed form (d+1)(d-1)!(2^{d+1} - 4).
BigInt count_flags(int d);
/// Maximal chains vertex < edge < ... < facet in the face lattice.
BigInt count_maximal_chains(const FaceLattice& lattice);

struct ValenceCensus {
  BigInt valence_d;
  BigInt valence_d_plus_1;
};
ValenceCensus valence_census(int d);

enum class Region { NorthCask, SouthCask, EquatorialBelt };

/// North cask: faces whose labels all omit d+1. South cask: faces whose labels
/// all contain d+1. Everything else lies in the equatorial belt.
Region classify_face(const FaceInterval& f);

struct CaskPartition {
  int d;
  std::vector<FaceInterval> north;
  std::vector<FaceInterval> south;
  std::vector<FaceInterval> belt;
  /// Facets containing an edge {W, W + (d+1)}, found by edge search.
  std::vector<FaceInterval> belt_facets;

  static FVector count_by_dim(int d, const std::vector<FaceInterval>& faces);
};
CaskPartition casks_and_belt(int d, int bound = kDefaultLatticeBound);

struct FourDimInvariants {
  Rational fatness;
  BigInt f03;
};
/// Fatness (f1 + f2 - 20) / (f0 + f3 - 10) and vertex-facet incidences,
/// recomputed from the face lattice. Throws std::invalid_argument for d != 4.
FourDimInvariants fatness_f03(int d);

}  // namespace isocanted
