#pragma once

// Max-plus semiring: scalars, square matrices, and tropical permanents with
// exact attainment multiplicities.
//
// Public indices are 1-based, matching the [d+1] labelling used throughout the
// library. A matrix of size n describes a polytope of dimension n - 1.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "isocanted/rational.hpp"

namespace isocanted {

/// A finite rational or the tropical zero, -inf.
class TropScalar {
 public:
  /// The additive identity -inf.
  TropScalar() = default;
  TropScalar(Rational value) : value_(std::move(value)) {  // NOLINT: implicit
    value_->canonicalize();
  }
  TropScalar(long value) : value_(Rational(value)) {}  // NOLINT: implicit

  static TropScalar neg_inf() { return {}; }

  bool is_finite() const { return value_.has_value(); }
  /// Throws std::logic_error on -inf.
  const Rational& value() const;

  friend bool operator==(const TropScalar& x, const TropScalar& y);
  friend std::strong_ordering operator<=>(const TropScalar& x, const TropScalar& y);

 private:
  std::optional<Rational> value_;
};

/// x (+) y = max(x, y).
TropScalar trop_add(const TropScalar& x, const TropScalar& y);
/// x (.) y = x + y, with -inf absorbing.
TropScalar trop_mul(const TropScalar& x, const TropScalar& y);

using IndexSet = std::vector<std::size_t>;

class TropMatrix {
 public:
  /// n x n matrix of -inf.
  explicit TropMatrix(std::size_t n);
  /// Row-major rows; throws std::invalid_argument unless square with n >= 2.
  explicit TropMatrix(const std::vector<std::vector<TropScalar>>& rows);

  static TropMatrix zero(std::size_t n);

  std::size_t size() const { return n_; }

  /// 1-based access.
  const TropScalar& operator()(std::size_t i, std::size_t j) const;
  TropScalar& operator()(std::size_t i, std::size_t j);

  bool all_finite() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t n_;
  std::vector<TropScalar> entries_;
};

/// (A (.) B)_{ik} = max_j A_{ij} + B_{jk}. Throws std::invalid_argument on size mismatch.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);

struct MinorEvaluation {
  TropScalar value;
  /// Number of permutations attaining value (zero only when value is -inf
  /// because every term is -inf, in which case it counts all of them).
  BigInt multiplicity;
};

inline constexpr std::size_t kDefaultPermanentBound = 10;

/// Tropical permanent, exhaustive over permutations.
/// Throws BoundExceeded when size() > bound.
MinorEvaluation trop_permanent(const TropMatrix& a,
                               std::size_t bound = kDefaultPermanentBound);

/// Permanent of the submatrix on the given rows and columns (1-based,
/// duplicates rejected, order irrelevant). Throws std::invalid_argument for
/// ragged or out-of-range selections.
MinorEvaluation trop_minor(const TropMatrix& a, const IndexSet& rows, const IndexSet& cols,
                           std::size_t bound = kDefaultPermanentBound);

/// Laplace expansion of trop_minor(a, rows, cols) along expansion_col: one
/// term a(r, c) + minor(rows \ r, cols \ c) per row r, in increasing row
/// order. Their maximum is the minor.
std::vector<TropScalar> laplace_terms(const TropMatrix& a, const IndexSet& rows,
                                      const IndexSet& cols, std::size_t expansion_col);

/// D (.) A (.) D^{-1}, i.e. entries a_{ij} + d_i - d_j. The last entry of d
/// must be zero (translations fix the homogenising coordinate).
TropMatrix conjugate_diag(const TropMatrix& a, std::span<const Rational> d);

}  // namespace isocanted
