#include "isocanted/conjectures.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

#include "isocanted/combinatorics.hpp"

namespace isocanted {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ParseError("bad dimension '" + std::string(text) + "'");
  }
  return value;
}

unsigned long ul(int v) { return static_cast<unsigned long>(v); }

std::string str(const BigInt& v) { return to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(const std::string& v) { return v; }

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? " " : "") + to_string(values[i]);
  }
  return out;
}

// Proper part of the f-vector, k = 0..d-1.
std::vector<BigInt> proper_fvector(int d) { return fvector_formula(d, false).counts; }

class WitnessBuilder {
 public:
  explicit WitnessBuilder(int d) : w_{d, true, {}, std::nullopt} {}

  template <typename T>
  WitnessBuilder& add(const std::string& key, const T& value) {
    w_.evidence.emplace_back(key, str(value));
    return *this;
  }

  // Records a failed condition; only the first one becomes the counterexample.
  void require(bool condition, const std::string& what) {
    if (!condition && w_.passed) {
      w_.passed = false;
      w_.counterexample = what;
    }
  }

  Witness done() { return std::move(w_); }

 private:
  Witness w_;
};

ConjectureReport sweep(const std::string& name, DimRange range, int min_dim,
                       const std::function<Witness(int)>& one) {
  if (range.lo > range.hi) {
    throw std::invalid_argument(name + ": empty dimension range");
  }
  if (range.lo < min_dim) {
    throw std::invalid_argument(name + ": dimensions below " + std::to_string(min_dim) +
                                " are outside the definable range");
  }
  if (range.hi > kMaxLabelDim) {
    throw std::invalid_argument(name + ": dimension above " + std::to_string(kMaxLabelDim));
  }
  ConjectureReport report{name, range, true, {}};
  for (int d = range.lo; d <= range.hi; ++d) {
    report.witnesses.push_back(one(d));
    report.passed = report.passed && report.witnesses.back().passed;
  }
  return report;
}

}  // namespace

DimRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  DimRange r{};
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi) {
    throw ParseError("range '" + text + "' is empty");
  }
  return r;
}

const std::string* Witness::find(const std::string& key) const {
  for (const auto& [k, v] : evidence) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

std::vector<int> ConjectureReport::failing_dims() const {
  std::vector<int> out;
  for (const Witness& w : witnesses) {
    if (!w.passed) {
      out.push_back(w.d);
    }
  }
  return out;
}

ConjectureReport check_extremes(DimRange range) {
  return sweep("extremes", range, 0, [](int d) {
    const BigInt last = BigInt(d + 1) * d / 2;
    const BigInt first = pow2(ul(d)) - 1;
    WitnessBuilder w(d);
    w.add("H_last", last).add("H_first", first);
    const bool equal = last == first;
    w.add("equality", equal);
    w.require(last <= first, "H_last > H_first");
    w.require(equal == (d <= 2), equal ? "equality outside d <= 2" : "strict inequality at d <= 2");
    return w.done();
  });
}

ConjectureReport check_log_concave(DimRange range) {
  return sweep("log_concave", range, 2, [](int d) {
    const auto f = proper_fvector(d);
    WitnessBuilder w(d);
    w.add("fvector", join(f));
    for (int k = 0; k + 2 < d; ++k) {
      const auto i = static_cast<std::size_t>(k);
      w.require(f[i + 1] * f[i + 1] >= f[i] * f[i + 2],
                "I^2_{d," + str(k + 1) + "} < I_{d," + str(k) + "} I_{d," + str(k + 2) + "}");
      const BigInt a = pow2(ul(d - k)) - 1;
      const BigInt b = pow2(ul(d - k - 1)) - 1;
      const BigInt c = pow2(ul(d - k - 2)) - 1;
      const BigInt gap = b * b - a * c;
      w.require(gap == pow2(ul(d - k - 2)) && gap > 0,
                "2-power factor gap " + to_string(gap) + " at k=" + str(k));
    }
    for (int k = 1; k < d + 1; ++k) {
      const BigInt mid = binomial(ul(d + 1), ul(k));
      w.require(mid * mid >= binomial(ul(d + 1), ul(k - 1)) * binomial(ul(d + 1), ul(k + 1)),
                "Pascal row not log-concave at k=" + str(k));
    }
    return w.done();
  });
}

ConjectureReport check_unimodal(DimRange range) {
  return sweep("unimodal", range, 2, [](int d) {
    const auto f = proper_fvector(d);
    WitnessBuilder w(d);
    w.add("fvector", join(f));
    std::size_t k = 0;
    while (k + 1 < f.size() && f[k + 1] >= f[k]) {
      ++k;
    }
    w.add("peak", static_cast<int>(k));
    while (k + 1 < f.size() && f[k + 1] <= f[k]) {
      ++k;
    }
    w.require(k + 1 == f.size(), "rises again after the peak at k=" + str(static_cast<int>(k)));
    return w.done();
  });
}

ConjectureReport check_argmax(DimRange range) {
  return sweep("argmax", range, 2, [](int d) {
    const auto f = proper_fvector(d);
    const int expected = d / 3;
    const auto e = static_cast<std::size_t>(expected);
    const auto top = std::max_element(f.begin(), f.end());  // first maximum
    const int actual = static_cast<int>(top - f.begin());
    const bool tie = top + 1 != f.end() && *(top + 1) == *top;

    WitnessBuilder w(d);
    w.add("floor_d_over_3", expected).add("argmax", actual).add("tie", tie);
    w.add("I_at_floor", f[e]).add("I_max", *top);
    bool ge_left = e == 0 || f[e] >= f[e - 1];
    bool ge_right = e + 1 >= f.size() || f[e] >= f[e + 1];
    w.require(ge_left && ge_right, "I_{d,floor(d/3)} = " + to_string(f[e]) +
                                       " is below its neighbour; maximum " + to_string(*top) +
                                       " at k=" + str(actual));

    // Q_{d,k+1} = I_{d,k+1} / I_{d,k}, L = 2^{d-k-1}(d-3k-1), R = d-2k.
    bool equivalence = true;
    int turning = d - 1;
    for (int k = 0; k + 1 < d; ++k) {
      const auto i = static_cast<std::size_t>(k);
      Rational q(f[i + 1], f[i]);
      q.canonicalize();
      const BigInt left = pow2(ul(d - k - 1)) * (d - 3 * k - 1);
      const BigInt right = d - 2 * k;
      equivalence = equivalence && ((q >= 1) == (left >= right));
      if (turning == d - 1 && q <= 1) {
        turning = k;
      }
    }
    w.add("Q_iff_L_ge_R", equivalence).add("turning_index", turning);
    w.require(equivalence, "Q >= 1 and L >= R disagree");
    const bool bracketed = 3 * turning >= d - 2 && 3 * turning <= d;
    w.add("turning_in_bracket", bracketed);
    w.require(bracketed, "turning index " + str(turning) + " outside [(d-2)/3, d/3]");
    return w.done();
  });
}

ConjectureReport check_barany(DimRange range) {
  return sweep("barany", range, 2, [](int d) {
    const auto f = proper_fvector(d);
    const BigInt bound = BigInt(d + 1) * d;
    const BigInt low = *std::min_element(f.begin(), f.end());
    WitnessBuilder w(d);
    w.add("min", low).add("bound", bound);
    w.require(low >= bound, "entry below (d+1)d");
    w.require(f.back() == bound && low == f.back(), "minimum is not I_{d,d-1} = (d+1)d");
    return w.done();
  });
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("stirling2: negative argument");
  }
  // row[j] = S(m, j) for the current m.
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, BigInt(0));
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      const auto u = static_cast<std::size_t>(j);
      row[u] = BigInt(j) * row[u] + row[u - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

ConjectureReport check_3d(DimRange range) {
  return sweep("three_d", range, 2, [](int d) {
    const auto f = fvector_formula(d, true).counts;
    BigInt sum = 0;
    for (const BigInt& v : f) {
      sum += v;
    }
    BigInt three_d;
    mpz_ui_pow_ui(three_d.get_mpz_t(), 3, ul(d));
    const BigInt closed = 3 * three_d - pow2(ul(d + 2)) + 2;
    const BigInt stirling = 2 * stirling2(d + 2, 3) + 1;
    WitnessBuilder w(d);
    w.add("sum", sum).add("closed_form", closed).add("stirling_form", stirling).add("three_pow_d",
                                                                                   three_d);
    w.require(sum == closed, "sum differs from 3^{d+1} - 2^{d+2} + 2");
    w.require(closed == stirling, "closed form differs from 2S(d+2,3) + 1");
    w.require(sum > three_d, "sum does not exceed 3^d");
    return w.done();
  });
}

ConjectureReport check_flag(DimRange range, int chain_limit) {
  return sweep("flag", range, 2, [chain_limit](int d) {
    const BigInt formula = count_flags(d);
    const BigInt floor_value = pow2(ul(d)) * factorial(ul(d));
    const BigInt lhs = (pow2(ul(d - 1)) - 1) * (d + 1);
    const BigInt rhs = pow2(ul(d - 2)) * d;
    WitnessBuilder w(d);
    w.add("formula", formula).add("two_pow_d_factorial", floor_value);
    w.require(formula > floor_value, "formula does not exceed 2^d d!");
    w.require(lhs > rhs, "supporting inequality fails");
    if (d <= chain_limit) {
      const BigInt chains = count_maximal_chains(build_face_lattice(d, chain_limit));
      w.add("maximal_chains", chains);
      w.require(chains == formula, "face lattice has " + to_string(chains) +
                                       " maximal chains, formula gives " + to_string(formula));
    }
    return w.done();
  });
}

namespace {

void add_poly(std::vector<BigInt>& into, const std::vector<BigInt>& p, const BigInt& scale) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    into.at(i) += scale * p[i];
  }
}

std::vector<BigInt> times_linear(const std::vector<BigInt>& p, int c1) {
  // p(t) * (1 + c1 t)
  std::vector<BigInt> out(p.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + 1] += c1 * p[i];
  }
  return out;
}

void check_cubical_dim(int d) {
  if (d < 2 || d > kMaxLabelDim) {
    throw std::invalid_argument("cubical h-vector needs 2 <= d <= " + std::to_string(kMaxLabelDim));
  }
}

}  // namespace

std::vector<BigInt> short_cubical_h(int d) {
  check_cubical_dim(d);
  const auto f = proper_fvector(d);
  std::vector<BigInt> h(static_cast<std::size_t>(d), BigInt(0));
  for (int j = 0; j < d; ++j) {
    std::vector<BigInt> p(static_cast<std::size_t>(j) + 1, BigInt(0));
    p.back() = 1;
    for (int r = 0; r < d - 1 - j; ++r) {
      p = times_linear(p, -1);
    }
    add_poly(h, p, pow2(ul(j)) * f[static_cast<std::size_t>(j)]);
  }
  return h;
}

std::vector<BigInt> short_cubical_h_from_links(int d) {
  check_cubical_dim(d);
  // A vertex with a label of length t has link (boundary of a (t-1)-simplex)
  // joined with (boundary of a (d-t)-simplex); h-polynomial [t]_q [d+1-t]_q.
  std::vector<BigInt> h(static_cast<std::size_t>(d), BigInt(0));
  for (int t = 1; t <= d; ++t) {
    std::vector<BigInt> p(static_cast<std::size_t>(d), BigInt(0));
    for (int i = 0; i < t; ++i) {
      for (int j = 0; j < d + 1 - t; ++j) {
        p[static_cast<std::size_t>(i + j)] += 1;
      }
    }
    add_poly(h, p, binomial(ul(d + 1), ul(t)));
  }
  return h;
}

std::vector<BigInt> cubical_h(int d) {
  const auto sc = short_cubical_h(d);
  std::vector<BigInt> h{pow2(ul(d - 1))};
  for (std::size_t i = 0; i + 1 < sc.size(); ++i) {
    h.push_back(sc[i] - h[i]);
  }
  return h;
}

BigInt cubical_g(int d, int i) {
  check_cubical_dim(d);
  if (i < 1 || i > d / 2) {
    throw std::invalid_argument("cubical g_" + std::to_string(i) + " undefined for d = " +
                                std::to_string(d));
  }
  const auto h = cubical_h(d);
  return h[static_cast<std::size_t>(i)] - h[static_cast<std::size_t>(i - 1)];
}

const std::vector<BigInt>& printed_g2_values() {
  static const std::vector<BigInt> values{6, 20, 50, 112, 238};
  return values;
}

ConjectureReport cubical_g2(DimRange range) {
  return sweep("cubical_g2", range, kMinCubicalG2Dim, [](int d) {
    const BigInt g2 = cubical_g(d, 2);
    const BigInt closed = pow2(ul(d)) - 2 * d - 2;
    WitnessBuilder w(d);
    w.add("g2", g2).add("closed_form", closed);
    w.require(short_cubical_h(d) == short_cubical_h_from_links(d),
              "f-vector and vertex-link routes disagree");
    w.require(g2 == closed, "g2 differs from 2^d - 2d - 2");
    w.require(g2 >= 0, "g2 negative");
    const auto idx = static_cast<std::size_t>(d - kMinCubicalG2Dim);
    if (idx < printed_g2_values().size()) {
      w.add("printed", printed_g2_values()[idx]);
      w.require(g2 == printed_g2_values()[idx], "differs from printed value");
    }
    return w.done();
  });
}

const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> names{"extremes", "log_concave", "unimodal", "argmax",
                                              "barany",   "three_d",     "flag",     "cubical_g2"};
  return names;
}

ConjectureReport run_conjecture(const std::string& name, DimRange range) {
  static const std::map<std::string, std::function<ConjectureReport(DimRange)>> table{
      {"extremes", [](DimRange r) { return check_extremes(r); }},
      {"log_concave", [](DimRange r) { return check_log_concave(r); }},
      {"unimodal", [](DimRange r) { return check_unimodal(r); }},
      {"argmax", [](DimRange r) { return check_argmax(r); }},
      {"barany", [](DimRange r) { return check_barany(r); }},
      {"three_d", [](DimRange r) { return check_3d(r); }},
      {"flag", [](DimRange r) { return check_flag(r); }},
      {"cubical_g2", [](DimRange r) { return cubical_g2(r); }},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown conjecture '" + name + "'");
  }
  return it->second(range);
}

}  // namespace isocanted
