#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the code it is meant to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "isocanted/rational.hpp"
#include "isocanted/tropical.hpp"

namespace oracle {

using isocanted::BigInt;
using isocanted::Rational;
using isocanted::TropMatrix;
using isocanted::TropScalar;

struct Permanent {
  TropScalar value;
  BigInt multiplicity;
};

// Walks every permutation.
inline Permanent brute_permanent(const TropMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Permanent best{TropScalar::neg_inf(), 0};
  do {
    TropScalar term = 0L;
    for (std::size_t i = 0; i < n; ++i) {
      term = isocanted::trop_mul(term, a(i + 1, perm[i]));
    }
    if (term > best.value) {
      best = {term, 1};
    } else if (term == best.value) {
      best.multiplicity += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline TropMatrix submatrix(const TropMatrix& a, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  TropMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i + 1, j + 1) = a(rows[i], cols[j]);
    }
  }
  return out;
}

// Interval [X, Y] counts of dimension k straight from the definition.
inline std::vector<BigInt> interval_counts(int d) {
  const std::uint64_t full = (std::uint64_t{1} << (d + 1)) - 1;
  std::vector<BigInt> counts(static_cast<std::size_t>(d), BigInt(0));
  for (std::uint64_t x = 1; x < full; ++x) {
    for (std::uint64_t y = x; y < full; y = (y + 1) | x) {
      if ((y & x) == x) {
        const int k = std::popcount(y) - std::popcount(x);
        counts[static_cast<std::size_t>(k)] += 1;
      }
    }
  }
  return counts;
}

// Maximal chains by depth-first search: each step grows an interval by one
// dimension, either shrinking the bottom or enlarging the top.
inline BigInt dfs_chains(int d, std::uint64_t bottom, std::uint64_t top) {
  const std::uint64_t full = (std::uint64_t{1} << (d + 1)) - 1;
  if (std::popcount(top) - std::popcount(bottom) == d - 1) {
    return 1;
  }
  BigInt total = 0;
  for (int e = 0; e <= d; ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    if ((bottom & bit) && (bottom & ~bit) != 0) {
      total += dfs_chains(d, bottom & ~bit, top);
    }
    if (!(top & bit) && (top | bit) != full) {
      total += dfs_chains(d, bottom, top | bit);
    }
  }
  return total;
}

inline BigInt maximal_chains(int d) {
  const std::uint64_t full = (std::uint64_t{1} << (d + 1)) - 1;
  BigInt total = 0;
  for (std::uint64_t w = 1; w < full; ++w) {
    total += dfs_chains(d, w, w);
  }
  return total;
}

inline BigInt choose(long n, long k) {
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

// I_{d,j} evaluated by plain integer arithmetic.
inline BigInt face_count(int d, int j) {
  if (j == d) {
    return 1;
  }
  BigInt p = 1;
  p <<= static_cast<mp_bitcnt_t>(d + 1 - j);
  return (p - 2) * choose(d + 1, j);
}

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
  }

  Rational rational(int max_num, int max_den) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  TropScalar scalar(double neg_inf_rate = 0.15) {
    if (std::uniform_real_distribution<double>(0, 1)(gen_) < neg_inf_rate) {
      return TropScalar::neg_inf();
    }
    return rational(9, 4);
  }

  TropMatrix matrix(std::size_t n, double neg_inf_rate = 0.15) {
    TropMatrix a(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        a(i, j) = scalar(neg_inf_rate);
      }
    }
    return a;
  }

  // Entries drawn from a small pool so that ties happen often.
  TropMatrix tie_heavy_matrix(std::size_t n) {
    static const std::vector<long> pool{-2, -1, 0, 1};
    TropMatrix a(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        a(i, j) = TropScalar(pick(pool));
      }
    }
    return a;
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

}  // namespace oracle
