#pragma once

// Exact sweeps over the f-vector of isocanted polytopes: extremes,
// log-concavity, unimodality, argmax location, the Barany bound, the 3^d
// identity, the flag inequality and the cubical g-vector.
//
// Every check evaluates each dimension of its range and records a witness for
// it; a report passes iff all of its witnesses pass.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isocanted/rational.hpp"

namespace isocanted {

struct DimRange {
  int lo;
  int hi;

  friend bool operator==(const DimRange&, const DimRange&) = default;
};

inline constexpr DimRange kDefaultSweep{2, 60};

/// Parses "2..40" or a single "7". Throws ParseError.
DimRange parse_range(const std::string& text);

struct Witness {
  int d;
  bool passed;
  /// Ordered key/value evidence, values rendered exactly.
  std::vector<std::pair<std::string, std::string>> evidence;
  /// Set iff the check failed at d.
  std::optional<std::string> counterexample;

  const std::string* find(const std::string& key) const;
};

struct ConjectureReport {
  std::string name;
  DimRange range;
  bool passed;
  std::vector<Witness> witnesses;

  std::vector<int> failing_dims() const;
};

/// (d+1)d/2 <= 2^d - 1, equality exactly for d in {0, 1, 2}. Needs d >= 0.
ConjectureReport check_extremes(DimRange range = kDefaultSweep);

/// I_{d,k+1}^2 >= I_{d,k} I_{d,k+2}; the 2-power factor identity
/// (2^{m-1}-1)^2 - (2^m-1)(2^{m-2}-1) = 2^{m-2} > 0 with m = d-k; log-concave
/// Pascal rows.
ConjectureReport check_log_concave(DimRange range = kDefaultSweep);
ConjectureReport check_unimodal(DimRange range = kDefaultSweep);

/// I_{d, floor(d/3)} is at least both neighbours; Q_{d,k+1} >= 1 iff
/// L_{d,k+1} >= R_{d,k+1}; the turning index lies in [(d-2)/3, d/3].
ConjectureReport check_argmax(DimRange range = kDefaultSweep);

/// Every I_{d,k} >= I_{d,d-1} = (d+1)d.
ConjectureReport check_barany(DimRange range = kDefaultSweep);

/// sum_k I_{d,k} = 3^{d+1} - 2^{d+2} + 2 = 2 S(d+2, 3) + 1 > 3^d.
ConjectureReport check_3d(DimRange range = kDefaultSweep);

inline constexpr int kFlagChainLimit = 7;

/// count_flags(d) > 2^d d!, the supporting inequality, and for d <= chain_limit
/// agreement with the maximal-chain count of the face lattice.
ConjectureReport check_flag(DimRange range = kDefaultSweep, int chain_limit = kFlagChainLimit);

/// Stirling number of the second kind by the standard recurrence.
BigInt stirling2(int n, int k);

/// Short cubical h-vector sum_j 2^j f_j t^j (1-t)^{d-1-j}, from the f-vector.
std::vector<BigInt> short_cubical_h(int d);
/// The same vector as a sum of vertex-link h-vectors.
std::vector<BigInt> short_cubical_h_from_links(int d);
/// Cubical h-vector: h_0 = 2^{d-1}, h_{i+1} = h^sc_i - h_i.
std::vector<BigInt> cubical_h(int d);
/// g^c_{d,i} = h_i - h_{i-1}. Throws std::invalid_argument unless 1 <= i <= d/2.
BigInt cubical_g(int d, int i);

inline constexpr int kMinCubicalG2Dim = 4;

/// g^c_{d,2} from the f-vector, cross-checked against the link route and
/// 2^d - 2d - 2, and required to be non-negative. Throws std::invalid_argument
/// when the range starts below kMinCubicalG2Dim.
ConjectureReport cubical_g2(DimRange range = {kMinCubicalG2Dim, 60});

/// The values 6, 20, 50, 112, 238 of g^c_{d,2}, d = 4..8.
const std::vector<BigInt>& printed_g2_values();

/// Names accepted by run_conjecture, in canonical order.
const std::vector<std::string>& conjecture_names();
/// Dispatch by name ("extremes", "log_concave", ...). Throws std::invalid_argument.
ConjectureReport run_conjecture(const std::string& name, DimRange range);

}  // namespace isocanted
