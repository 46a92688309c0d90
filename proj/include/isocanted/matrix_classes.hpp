#pragma once

// Special classes of max-plus matrices that describe alcoved polytopes:
// normal, normal idempotent (NI), visualized NI (VNI) and symmetric NI (SNI),
// the box/cube/isocanted constructors, and the unique A = B - E split into a
// box matrix B and a perturbation matrix E.

#include <optional>
#include <span>
#include <vector>

#include "isocanted/rational.hpp"
#include "isocanted/tropical.hpp"

namespace isocanted {

// Predicates. All return false (rather than throwing) for matrices with -inf
// entries.

/// Zero diagonal and every entry <= 0.
bool is_normal(const TropMatrix& a);
/// A (.) A == A.
bool is_idempotent(const TropMatrix& a);
/// a_{ij} + a_{ji} < 0 for all i != j, i.e. P(A) has full dimension.
bool is_full_dimensional(const TropMatrix& a);
/// Normal, idempotent and full dimensional: the unique tight description of
/// a d-polytope containing the origin.
bool is_ni(const TropMatrix& a);
/// NI with a zero last row (max P(A) is the origin).
bool is_vni(const TropMatrix& a);
/// NI and symmetric (P(A) = -P(A)).
bool is_sni(const TropMatrix& a);

/// n x n matrix of exact rationals with zero diagonal, zero last row and
/// column, and non-positive entries.
class PerturbationMatrix {
 public:
  /// Throws std::invalid_argument when the pattern is violated.
  explicit PerturbationMatrix(std::vector<std::vector<Rational>> rows);
  static PerturbationMatrix zero(std::size_t n);
  /// e_{ij} = -a for all i != j in [n-1].
  static PerturbationMatrix constant(std::size_t n, const Rational& a);

  std::size_t size() const { return rows_.size(); }
  /// 1-based.
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }
  /// The cant parameter a when every cantable entry equals -a (a may be 0).
  std::optional<Rational> constant_value() const;

  friend bool operator==(const PerturbationMatrix&, const PerturbationMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// B - E, entrywise classical subtraction. No class checks on the result.
TropMatrix subtract(const TropMatrix& box, const PerturbationMatrix& perturbation);

struct Decomposition {
  TropMatrix box;
  PerturbationMatrix perturbation;
  /// Edge lengths of the bounding box, l_1..l_d.
  std::vector<Rational> edge_lengths;
  /// Diagonal D (last entry 0) with box = D (.) B^VNI(l) (.) D^{-1}.
  std::vector<Rational> shift;

  TropMatrix reconstruct() const { return subtract(box, perturbation); }
};

/// Unique split A = B - E of an NI matrix. Throws std::invalid_argument when
/// A is not NI or the derived pieces fail validation.
Decomposition decompose(const TropMatrix& a);

/// Cant parameter a > 0 when P(A) is isocanted, nothing otherwise.
/// Throws std::invalid_argument when A is not NI.
std::optional<Rational> is_isocanted(const TropMatrix& a);

// Box and cube matrices. d is the dimension, so results have size d + 1.
// Throw std::invalid_argument for non-positive lengths or d < 1.

TropMatrix box_vni(std::span<const Rational> lengths);
TropMatrix box_sni(std::span<const Rational> lengths);
TropMatrix cube_vni(int d, const Rational& ell);
TropMatrix cube_sni(int d, const Rational& ell);

/// Diagonal (l_1/2, ..., l_d/2, 0) moving box_vni onto box_sni.
std::vector<Rational> sni_shift(std::span<const Rational> lengths);

/// Parameters of an isocanted polytope with cubic bounding box:
/// dimension d >= 2, edge length ell and cant parameter a with 0 < a < ell.
class IsocantedSpec {
 public:
  /// Throws std::invalid_argument when the invariants fail.
  IsocantedSpec(int d, Rational ell, Rational a);

  int dim() const { return d_; }
  const Rational& ell() const { return ell_; }
  const Rational& cant() const { return a_; }

 private:
  int d_;
  Rational ell_;
  Rational a_;
};

enum class Placement { Vni, Sni };

TropMatrix isocanted_vni(const IsocantedSpec& spec);
TropMatrix isocanted_sni(const IsocantedSpec& spec);
TropMatrix isocanted(const IsocantedSpec& spec, Placement placement);

/// Extended family with a box of mixed edge lengths, 0 < a < min l_j.
/// Constructible and tested, but outside the cubic-box family used by the
/// closed-form vertex map.
TropMatrix isocanted_box_vni(std::span<const Rational> lengths, const Rational& a);
TropMatrix isocanted_box_sni(std::span<const Rational> lengths, const Rational& a);

}  // namespace isocanted
