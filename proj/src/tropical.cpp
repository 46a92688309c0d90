#include "isocanted/tropical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace isocanted {

const Rational& TropScalar::value() const {
  if (!value_) {
    throw std::logic_error("value() on tropical -inf");
  }
  return *value_;
}

bool operator==(const TropScalar& x, const TropScalar& y) {
  if (x.is_finite() != y.is_finite()) {
    return false;
  }
  return !x.is_finite() || cmp(*x.value_, *y.value_) == 0;
}

std::strong_ordering operator<=>(const TropScalar& x, const TropScalar& y) {
  if (!x.is_finite() || !y.is_finite()) {
    return x.is_finite() <=> y.is_finite();
  }
  const int c = cmp(*x.value_, *y.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

TropScalar trop_add(const TropScalar& x, const TropScalar& y) { return x < y ? y : x; }

TropScalar trop_mul(const TropScalar& x, const TropScalar& y) {
  if (!x.is_finite() || !y.is_finite()) {
    return TropScalar::neg_inf();
  }
  return Rational(x.value() + y.value());
}

TropMatrix::TropMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n < 2) {
    throw std::invalid_argument("tropical matrices need size >= 2");
  }
}

TropMatrix::TropMatrix(const std::vector<std::vector<TropScalar>>& rows)
    : TropMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(rows[i].size()) + " entries");
    }
    std::copy(rows[i].begin(), rows[i].end(), entries_.begin() + static_cast<long>(i * n_));
  }
}

TropMatrix TropMatrix::zero(std::size_t n) {
  TropMatrix m(n);
  std::fill(m.entries_.begin(), m.entries_.end(), TropScalar(0));
  return m;
}

const TropScalar& TropMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw std::out_of_range("matrix index out of range");
  }
  return entries_[(i - 1) * n_ + (j - 1)];
}

TropScalar& TropMatrix::operator()(std::size_t i, std::size_t j) {
  return const_cast<TropScalar&>(std::as_const(*this)(i, j));
}

bool TropMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TropScalar& x) { return x.is_finite(); });
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("mat_mul: size mismatch");
  }
  const std::size_t n = a.size();
  TropMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      TropScalar acc;
      for (std::size_t j = 1; j <= n; ++j) {
        acc = trop_add(acc, trop_mul(a(i, j), b(j, k)));
      }
      out(i, k) = acc;
    }
  }
  return out;
}

namespace {

void check_selection(const TropMatrix& a, const IndexSet& idx, const char* what) {
  std::vector<bool> seen(a.size() + 1, false);
  for (const std::size_t i : idx) {
    if (i < 1 || i > a.size()) {
      throw std::invalid_argument(std::string(what) + " index out of range");
    }
    if (seen[i]) {
      throw std::invalid_argument(std::string("duplicate ") + what + " index");
    }
    seen[i] = true;
  }
}

IndexSet sorted(IndexSet idx) {
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Subset dynamic programme over columns: state = set of columns used by the
// first popcount(mask) rows. Keeps the best partial sum and the number of
// partial assignments reaching it, which yields the exact count of optimal
// permutations.
MinorEvaluation permanent_of(const TropMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  const std::size_t k = rows.size();
  if (k == 0) {
    return {TropScalar(0), BigInt(1)};
  }
  const std::size_t states = std::size_t{1} << k;
  std::vector<TropScalar> best(states);
  std::vector<BigInt> count(states, BigInt(0));
  best[0] = TropScalar(0);
  count[0] = 1;
  for (std::size_t mask = 1; mask < states; ++mask) {
    const std::size_t row = rows[static_cast<std::size_t>(std::popcount(mask)) - 1];
    bool first = true;
    for (std::size_t c = 0; c < k; ++c) {
      if ((mask & (std::size_t{1} << c)) == 0) {
        continue;
      }
      const std::size_t prev = mask ^ (std::size_t{1} << c);
      const TropScalar term = trop_mul(best[prev], a(row, cols[c]));
      if (first || term > best[mask]) {
        best[mask] = term;
        count[mask] = count[prev];
        first = false;
      } else if (term == best[mask]) {
        count[mask] += count[prev];
      }
    }
  }
  return {best[states - 1], count[states - 1]};
}

}  // namespace

MinorEvaluation trop_permanent(const TropMatrix& a, std::size_t bound) {
  IndexSet all(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    all[i] = i + 1;
  }
  return trop_minor(a, all, all, bound);
}

MinorEvaluation trop_minor(const TropMatrix& a, const IndexSet& rows, const IndexSet& cols,
                           std::size_t bound) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("ragged minor selection: " + std::to_string(rows.size()) +
                                " rows vs " + std::to_string(cols.size()) + " columns");
  }
  if (rows.size() > bound) {
    throw BoundExceeded("permanent of order " + std::to_string(rows.size()) +
                        " exceeds bound " + std::to_string(bound));
  }
  check_selection(a, rows, "row");
  check_selection(a, cols, "column");
  return permanent_of(a, sorted(rows), sorted(cols));
}

std::vector<TropScalar> laplace_terms(const TropMatrix& a, const IndexSet& rows,
                                      const IndexSet& cols, std::size_t expansion_col) {
  if (rows.size() != cols.size()) {
    throw std::invalid_argument("ragged minor selection");
  }
  check_selection(a, rows, "row");
  check_selection(a, cols, "column");
  if (std::find(cols.begin(), cols.end(), expansion_col) == cols.end()) {
    throw std::invalid_argument("expansion column is not part of the selection");
  }
  IndexSet rest_cols;
  for (const std::size_t c : cols) {
    if (c != expansion_col) {
      rest_cols.push_back(c);
    }
  }
  const IndexSet ordered = sorted(rows);
  std::vector<TropScalar> terms;
  terms.reserve(ordered.size());
  for (const std::size_t r : ordered) {
    IndexSet rest_rows;
    for (const std::size_t q : ordered) {
      if (q != r) {
        rest_rows.push_back(q);
      }
    }
    terms.push_back(trop_mul(a(r, expansion_col),
                             permanent_of(a, rest_rows, sorted(rest_cols)).value));
  }
  return terms;
}

TropMatrix conjugate_diag(const TropMatrix& a, std::span<const Rational> d) {
  const std::size_t n = a.size();
  if (d.size() != n) {
    throw std::invalid_argument("diagonal has wrong length");
  }
  if (d.back() != 0) {
    throw std::invalid_argument("last diagonal entry must be zero");
  }
  TropMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const TropScalar& x = a(i, j);
      out(i, j) = x.is_finite() ? TropScalar(Rational(x.value() + d[i - 1] - d[j - 1]))
                                : TropScalar::neg_inf();
    }
  }
  return out;
}

}  // namespace isocanted
