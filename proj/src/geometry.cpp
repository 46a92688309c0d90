#include "isocanted/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace isocanted {

RationalPoint RationalPoint::operator-() const {
  RationalPoint out{coords};
  for (Rational& c : out.coords) {
    c = -c;
  }
  return out;
}

std::string RationalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out += (i ? ", " : "") + isocanted::to_string(coords[i]);
  }
  return out + ")";
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(
      a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

Rational Constraint::evaluate(const RationalPoint& x) const {
  const Rational& xi = x.coords.at(static_cast<std::size_t>(i - 1));
  if (is_single()) {
    return xi;
  }
  return xi - x.coords.at(static_cast<std::size_t>(j - 1));
}

bool HRep::contains(const RationalPoint& x) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const Constraint& c) {
    const Rational v = c.evaluate(x);
    return c.lower <= v && v <= c.upper;
  });
}

int HRep::tight_count(const RationalPoint& x) const {
  int n = 0;
  for (const Constraint& c : constraints) {
    const Rational v = c.evaluate(x);
    n += (v == c.lower) + (v == c.upper);
  }
  return n;
}

HRep hrep_from_matrix(const TropMatrix& a) {
  if (!a.all_finite()) {
    throw std::invalid_argument("halfspace systems need finite matrix entries");
  }
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (a(i, i).value() != 0) {
      throw std::invalid_argument("halfspace systems need a zero diagonal");
    }
  }
  HRep h{static_cast<int>(n - 1), {}};
  auto push = [&](std::size_t i, std::size_t j, std::size_t col) {
    // col is the matrix column paired with i: j for differences, n for singles.
    Constraint c{static_cast<int>(i), static_cast<int>(j), a(i, col).value(),
                 -a(col, i).value()};
    if (c.lower > c.upper) {
      throw std::invalid_argument("inconsistent bounds for x" + std::to_string(i) +
                                  (j ? " - x" + std::to_string(j) : std::string()) + ": " +
                                  to_string(c.lower) + " > " + to_string(c.upper));
    }
    h.constraints.push_back(std::move(c));
  };
  for (std::size_t i = 1; i < n; ++i) {
    push(i, 0, n);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      push(i, j, j);
    }
  }
  return h;
}

TropMatrix auxiliary_matrix(const TropMatrix& a) {
  if (!a.all_finite()) {
    throw std::invalid_argument("auxiliary matrix needs finite entries");
  }
  const std::size_t n = a.size();
  TropMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      out(i, j) = Rational(a(i, j).value() - a(n, j).value());
    }
  }
  return out;
}

RationalPoint min_point(const TropMatrix& a) {
  const TropMatrix a0 = auxiliary_matrix(a);
  const std::size_t n = a.size();
  RationalPoint p;
  for (std::size_t i = 1; i < n; ++i) {
    p.coords.push_back(a0(i, n).value());
  }
  return p;
}

RationalPoint max_point(const TropMatrix& a) {
  const TropMatrix a0 = auxiliary_matrix(a);
  RationalPoint p;
  for (std::size_t i = 1; i < a.size(); ++i) {
    p.coords.push_back(a0(i, i).value());
  }
  return p;
}

std::vector<RationalPoint> VertexSet::points() const {
  std::vector<RationalPoint> out;
  out.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    out.push_back(v.point);
  }
  return out;
}

namespace {

struct Hyperplane {
  std::vector<Rational> normal;
  Rational rhs;
};

std::vector<Hyperplane> hyperplanes_of(const HRep& h) {
  const auto d = static_cast<std::size_t>(h.d);
  std::vector<Hyperplane> out;
  for (const Constraint& c : h.constraints) {
    std::vector<Rational> normal(d);
    normal[static_cast<std::size_t>(c.i - 1)] = 1;
    if (!c.is_single()) {
      normal[static_cast<std::size_t>(c.j - 1)] = -1;
    }
    out.push_back({normal, c.lower});
    out.push_back({std::move(normal), c.upper});
  }
  return out;
}

bool on_hyperplane(const Hyperplane& hp, const RationalPoint& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < hp.normal.size(); ++k) {
    if (hp.normal[k] != 0) {
      s += hp.normal[k] * x.coords[k];
    }
  }
  return s == hp.rhs;
}

// Gaussian elimination on a square system; nothing when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) {
        continue;
      }
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) {
        m[r][k] -= factor * m[col][k];
      }
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    rhs[r] /= m[r][r];
  }
  return rhs;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) {
    return 0;
  }
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == m.size()) {
      continue;
    }
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) {
        continue;
      }
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) {
        m[r][k] -= factor * m[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int affine_dim(std::span<const RationalPoint> all, const std::vector<std::size_t>& ids) {
  if (ids.empty()) {
    return -1;
  }
  std::vector<std::vector<Rational>> diffs;
  const RationalPoint& base = all[ids.front()];
  for (std::size_t k = 1; k < ids.size(); ++k) {
    std::vector<Rational> row(base.dim());
    for (std::size_t c = 0; c < base.dim(); ++c) {
      row[c] = all[ids[k]].coords[c] - base.coords[c];
    }
    diffs.push_back(std::move(row));
  }
  return matrix_rank(std::move(diffs));
}

}  // namespace

VertexSet enumerate_vertices_oracle(const HRep& h, int bound) {
  if (h.d < 1) {
    throw std::invalid_argument("oracle needs d >= 1");
  }
  if (h.d > bound) {
    throw BoundExceeded("oracle dimension " + std::to_string(h.d) + " exceeds bound " +
                        std::to_string(bound));
  }
  const auto d = static_cast<std::size_t>(h.d);
  const std::vector<Hyperplane> planes = hyperplanes_of(h);
  const std::size_t m = planes.size();
  std::set<RationalPoint> found;
  if (m >= d) {
    std::vector<std::size_t> pick(d);
    for (std::size_t k = 0; k < d; ++k) {
      pick[k] = k;
    }
    while (true) {
      std::vector<std::vector<Rational>> sys;
      std::vector<Rational> rhs;
      sys.reserve(d);
      for (const std::size_t p : pick) {
        sys.push_back(planes[p].normal);
        rhs.push_back(planes[p].rhs);
      }
      if (auto sol = solve_square(std::move(sys), std::move(rhs))) {
        RationalPoint x{std::move(*sol)};
        if (h.contains(x)) {
          found.insert(std::move(x));
        }
      }
      // Next d-combination of [0, m).
      std::size_t k = d;
      while (k > 0 && pick[k - 1] == m - d + k - 1) {
        --k;
      }
      if (k == 0) {
        break;
      }
      ++pick[k - 1];
      for (std::size_t r = k; r < d; ++r) {
        pick[r] = pick[r - 1] + 1;
      }
    }
  }
  if (found.empty()) {
    throw std::invalid_argument("polytope has no vertices (empty)");
  }
  VertexSet vs;
  for (const RationalPoint& p : found) {
    vs.vertices.push_back({p, std::nullopt});
  }
  return vs;
}

std::vector<std::vector<OracleFace>> faces_from_incidences(
    const HRep& h, std::span<const RationalPoint> vertices) {
  const int d = h.d;
  std::set<std::vector<std::size_t>> facets;
  for (const Hyperplane& hp : hyperplanes_of(h)) {
    std::vector<std::size_t> ids;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (on_hyperplane(hp, vertices[v])) {
        ids.push_back(v);
      }
    }
    if (affine_dim(vertices, ids) == d - 1) {
      facets.insert(std::move(ids));
    }
  }
  std::set<std::vector<std::size_t>> faces(facets.begin(), facets.end());
  std::deque<std::vector<std::size_t>> queue(facets.begin(), facets.end());
  while (!queue.empty()) {
    const std::vector<std::size_t> face = std::move(queue.front());
    queue.pop_front();
    for (const auto& facet : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && faces.insert(meet).second) {
        queue.push_back(std::move(meet));
      }
    }
  }
  std::vector<std::vector<OracleFace>> by_dim(static_cast<std::size_t>(d));
  for (const auto& ids : faces) {
    const int k = affine_dim(vertices, ids);
    if (k < 0 || k >= d) {
      throw std::logic_error("recovered face of impossible dimension");
    }
    by_dim[static_cast<std::size_t>(k)].push_back({ids, k});
  }
  return by_dim;
}

RationalPoint isocanted_vertex(const IsocantedSpec& spec, const VertexLabel& w,
                               Placement placement) {
  const int d = spec.dim();
  if (w.dim() != d) {
    throw std::invalid_argument("label dimension does not match the polytope");
  }
  const bool has_pole = w.contains(d + 1);
  const Rational shift = placement == Placement::Sni ? Rational(spec.ell() / 2) : Rational(0);
  RationalPoint x;
  for (int k = 1; k <= d; ++k) {
    Rational value;
    if (!has_pole) {
      value = w.contains(k) ? Rational(0) : Rational(spec.cant() - spec.ell());
    } else {
      value = w.contains(k) ? Rational(-spec.cant()) : Rational(-spec.ell());
    }
    x.coords.push_back(value + shift);
  }
  return x;
}

bool label_vertices(VertexSet& vs, const IsocantedSpec& spec, Placement placement) {
  std::map<RationalPoint, VertexLabel> by_point;
  for (const VertexLabel& w : all_labels(spec.dim())) {
    by_point.emplace(isocanted_vertex(spec, w, placement), w);
  }
  bool all = true;
  for (Vertex& v : vs.vertices) {
    const auto it = by_point.find(v.point);
    if (it == by_point.end()) {
      v.label.reset();
      all = false;
    } else {
      v.label = it->second;
    }
  }
  return all;
}

namespace {

IndexSet columns_of(const VertexLabel& w) {
  IndexSet cols;
  for (const int k : w.elements()) {
    cols.push_back(static_cast<std::size_t>(k));
  }
  return cols;
}

// All k-subsets of [n], 1-based, in lexicographic order.
std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  IndexSet cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

void check_generator_input(const TropMatrix& c, const VertexLabel& w) {
  if (w.dim() + 1 != static_cast<int>(c.size())) {
    throw std::invalid_argument("label dimension does not match the matrix");
  }
}

}  // namespace

TropMatrix generator_matrix(const TropMatrix& c, const VertexLabel& w, const RationalPoint& x) {
  check_generator_input(c, w);
  const std::size_t n = c.size();
  if (x.dim() + 1 != n) {
    throw std::invalid_argument("point dimension does not match the matrix");
  }
  const IndexSet cols = columns_of(w);
  TropMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      m(i, k + 1) = c(i, cols[k]);
    }
    m(i, cols.size() + 1) = i < n ? TropScalar(x.coords[i - 1]) : TropScalar(0);
  }
  return m;
}

VertexConditions vertex_conditions(const TropMatrix& c, const VertexLabel& w,
                                   const RationalPoint& x) {
  const TropMatrix m = generator_matrix(c, w, x);
  const std::size_t j = static_cast<std::size_t>(w.length());
  IndexSet cols(j + 1);
  for (std::size_t k = 0; k <= j; ++k) {
    cols[k] = k + 1;
  }
  VertexConditions out{true, true};
  for (const IndexSet& rows : subsets(c.size(), j + 1)) {
    if (trop_minor(m, rows, cols).multiplicity < 2) {
      out.in_subspace = false;
    }
    const auto terms = laplace_terms(m, rows, cols, j + 1);
    if (std::adjacent_find(terms.begin(), terms.end(), std::not_equal_to<>()) != terms.end()) {
      out.all_terms_equal = false;
    }
  }
  return out;
}

std::optional<RationalPoint> solve_unique_vertex(const TropMatrix& c, const VertexLabel& w) {
  check_generator_input(c, w);
  const std::size_t n = c.size();
  const IndexSet cols = columns_of(w);
  // Edge (p, q, delta) encodes x_q = x_p + delta.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(n + 1);
  for (const IndexSet& rows : subsets(n, cols.size() + 1)) {
    std::vector<Rational> consts;
    for (const std::size_t r : rows) {
      IndexSet rest;
      for (const std::size_t q : rows) {
        if (q != r) {
          rest.push_back(q);
        }
      }
      const MinorEvaluation minor = trop_minor(c, rest, cols);
      if (!minor.value.is_finite()) {
        return std::nullopt;
      }
      consts.push_back(minor.value.value());
    }
    // x_{r_k} + m_k = x_{r_0} + m_0.
    for (std::size_t k = 1; k < rows.size(); ++k) {
      const Rational delta = consts[0] - consts[k];
      adj[rows[0]].emplace_back(rows[k], delta);
      adj[rows[k]].emplace_back(rows[0], Rational(-delta));
    }
  }
  std::vector<std::optional<Rational>> value(n + 1);
  value[n] = Rational(0);
  std::deque<std::size_t> queue{n};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& [q, delta] : adj[p]) {
      const Rational candidate = *value[p] + delta;
      if (!value[q]) {
        value[q] = candidate;
        queue.push_back(q);
      } else if (*value[q] != candidate) {
        return std::nullopt;
      }
    }
  }
  RationalPoint x;
  for (std::size_t i = 1; i < n; ++i) {
    if (!value[i]) {
      return std::nullopt;
    }
    x.coords.push_back(*value[i]);
  }
  return x;
}

bool verify_unique_vertex(const IsocantedSpec& spec, const VertexLabel& w) {
  const TropMatrix c = isocanted_vni(spec);
  const auto solved = solve_unique_vertex(c, w);
  if (!solved || *solved != isocanted_vertex(spec, w)) {
    return false;
  }
  const VertexConditions cond = vertex_conditions(c, w, *solved);
  return cond.in_subspace && cond.all_terms_equal;
}

bool verify_vertex_bijection(const TropMatrix& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const HRep h = hrep_from_matrix(c);
  std::set<RationalPoint> seen;
  for (const VertexLabel& w : all_labels(d)) {
    const auto x = solve_unique_vertex(c, w);
    if (!x || !h.contains(*x)) {
      return false;
    }
    const VertexConditions cond = vertex_conditions(c, w, *x);
    if (!cond.in_subspace || !cond.all_terms_equal || !seen.insert(*x).second) {
      return false;
    }
  }
  return true;
}

Poles poles(const IsocantedSpec& spec, Placement placement) {
  const TropMatrix a = isocanted(spec, placement);
  return {max_point(a), min_point(a)};
}

HRep bounding_box(const TropMatrix& a) { return hrep_from_matrix(decompose(a).box); }

bool in_convex_hull(const RationalPoint& p, std::span<const RationalPoint> points) {
  if (points.empty()) {
    return false;
  }
  // Phase-one simplex for lambda >= 0, sum lambda = 1, sum lambda_k q_k = p,
  // with Bland's rule so that degenerate pivots cannot cycle.
  const std::size_t rows = p.dim() + 1;
  const std::size_t m = points.size();
  const std::size_t cols = m + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols));
  std::vector<Rational> rhs(rows);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      t[i][k] = points[k].coords[i];
    }
    t[rows - 1][k] = 1;
  }
  for (std::size_t i = 0; i < p.dim(); ++i) {
    rhs[i] = p.coords[i];
  }
  rhs[rows - 1] = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (rhs[i] < 0) {
      rhs[i] = -rhs[i];
      for (std::size_t k = 0; k < m; ++k) {
        t[i][k] = -t[i][k];
      }
    }
    t[i][m + i] = 1;
  }
  std::vector<std::size_t> basis(rows);
  std::vector<Rational> reduced(cols);
  Rational objective = 0;  // minus the artificial sum
  for (std::size_t i = 0; i < rows; ++i) {
    basis[i] = m + i;
    for (std::size_t k = 0; k < m; ++k) {
      reduced[k] -= t[i][k];
    }
    objective -= rhs[i];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k) {
      if (reduced[k] < 0) {
        enter = k;
        break;
      }
    }
    if (enter == cols) {
      break;
    }
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        const Rational ratio = rhs[i] / t[i][enter];
        if (leave == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == rows) {
      break;  // unbounded direction; cannot happen in phase one
    }
    const Rational pivot = t[leave][enter];
    for (Rational& v : t[leave]) {
      v /= pivot;
    }
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) {
        continue;
      }
      const Rational f = t[i][enter];
      for (std::size_t k = 0; k < cols; ++k) {
        t[i][k] -= f * t[leave][k];
      }
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = reduced[enter];
    for (std::size_t k = 0; k < cols; ++k) {
      reduced[k] -= f * t[leave][k];
    }
    objective -= f * rhs[leave];
    basis[leave] = enter;
  }
  return objective == 0;
}

std::vector<RationalPoint> hull_vertices(std::span<const RationalPoint> points) {
  const std::set<RationalPoint> unique(points.begin(), points.end());
  const std::vector<RationalPoint> all(unique.begin(), unique.end());
  std::vector<RationalPoint> out;
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::vector<RationalPoint> others;
    for (std::size_t r = 0; r < all.size(); ++r) {
      if (r != k) {
        others.push_back(all[r]);
      }
    }
    if (!in_convex_hull(all[k], others)) {
      out.push_back(all[k]);
    }
  }
  return out;
}

std::vector<RationalPoint> box_plus_segment_vertices(int d, const Rational& ell,
                                                     const Rational& a) {
  if (d < 1 || d > 20) {
    throw std::invalid_argument("box dimension out of range");
  }
  if (!(a >= 0 && a < ell)) {
    throw std::invalid_argument("segment length must satisfy 0 <= a < ell");
  }
  std::vector<RationalPoint> candidates;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    for (const Rational& shift : {Rational(0), a}) {
      RationalPoint x;
      for (int k = 0; k < d; ++k) {
        x.coords.push_back(((mask >> k) & 1U ? Rational(-a) : Rational(-ell)) + shift);
      }
      candidates.push_back(std::move(x));
    }
  }
  return hull_vertices(candidates);
}

bool zonotope_check(const IsocantedSpec& spec, int bound) {
  if (spec.dim() > bound) {
    throw BoundExceeded("zonotope check dimension exceeds bound");
  }
  const auto sum = box_plus_segment_vertices(spec.dim(), spec.ell(), spec.cant());
  const auto oracle =
      enumerate_vertices_oracle(hrep_from_matrix(isocanted_vni(spec)), bound).points();
  return sum == oracle;
}

bool central_symmetry_check(const TropMatrix& a, int bound) {
  if (!is_ni(a)) {
    throw std::invalid_argument("central symmetry check needs an NI matrix");
  }
  const RationalPoint lo = min_point(a);
  const RationalPoint hi = max_point(a);
  std::vector<Rational> shift(a.size());
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    shift[i] = -(lo.coords[i] + hi.coords[i]) / 2;
  }
  const TropMatrix centred = conjugate_diag(a, shift);
  const auto pts = enumerate_vertices_oracle(hrep_from_matrix(centred), bound).points();
  const std::set<RationalPoint> all(pts.begin(), pts.end());
  return std::all_of(pts.begin(), pts.end(),
                     [&](const RationalPoint& p) { return all.count(-p) == 1; });
}

}  // namespace isocanted
