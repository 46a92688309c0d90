#include "isocanted/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace isocanted {

namespace {

void check_dim(int d) {
  if (d < 1 || d > kMaxLabelDim) {
    throw std::invalid_argument("label dimension out of range: " + std::to_string(d));
  }
}

void check_polytope_dim(int d) {
  if (d < 2) {
    throw std::invalid_argument("isocanted polytopes need d >= 2, got " + std::to_string(d));
  }
}

void check_lattice_bound(int d, int bound) {
  check_polytope_dim(d);
  if (d > bound || d > kMaxLabelDim) {
    throw BoundExceeded("d = " + std::to_string(d) + " exceeds lattice bound " +
                        std::to_string(bound));
  }
}

bool is_proper_label_mask(int d, std::uint64_t mask) {
  return mask != 0 && (mask & ~full_mask(d)) == 0 && mask != full_mask(d);
}

std::string mask_string(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int k = 1; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) {
      out += (first ? "" : ",") + std::to_string(k);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::uint64_t full_mask(int d) { return (std::uint64_t{1} << (d + 1)) - 1; }

VertexLabel::VertexLabel(int d, std::uint64_t mask, bool) : d_(d), mask_(mask) {}

VertexLabel::VertexLabel(int d, std::span<const int> elements) : d_(d), mask_(0) {
  check_dim(d);
  for (const int k : elements) {
    if (k < 1 || k > d + 1) {
      throw std::invalid_argument("label element " + std::to_string(k) + " outside [1, " +
                                  std::to_string(d + 1) + "]");
    }
    mask_ |= std::uint64_t{1} << (k - 1);
  }
  if (!is_proper_label_mask(d, mask_)) {
    throw std::invalid_argument("vertex labels are proper nonempty subsets of [d+1]");
  }
}

VertexLabel VertexLabel::from_mask(int d, std::uint64_t mask) {
  check_dim(d);
  if (!is_proper_label_mask(d, mask)) {
    throw std::invalid_argument("vertex labels are proper nonempty subsets of [d+1]");
  }
  return VertexLabel(d, mask, true);
}

int VertexLabel::length() const { return std::popcount(mask_); }

std::vector<int> VertexLabel::elements() const {
  std::vector<int> out;
  for (int k = 1; k <= d_ + 1; ++k) {
    if (contains(k)) {
      out.push_back(k);
    }
  }
  return out;
}

std::string VertexLabel::to_string() const { return mask_string(mask_); }

std::vector<VertexLabel> all_labels(int d) {
  check_dim(d);
  if (d > 30) {
    throw BoundExceeded("refusing to list 2^" + std::to_string(d + 1) + " labels");
  }
  std::vector<VertexLabel> out;
  for (std::uint64_t m = 1; m < full_mask(d); ++m) {
    out.push_back(VertexLabel::from_mask(d, m));
  }
  std::stable_sort(out.begin(), out.end(), [](const VertexLabel& a, const VertexLabel& b) {
    return a.length() < b.length();
  });
  return out;
}

VertexLabel antipode(const VertexLabel& w) {
  return VertexLabel::from_mask(w.dim(), full_mask(w.dim()) & ~w.mask());
}

FaceInterval::FaceInterval(int d, std::uint64_t bottom, std::uint64_t top)
    : d_(d), bottom_(bottom), top_(top) {
  check_dim(d);
  if (!is_proper_label_mask(d, bottom) || !is_proper_label_mask(d, top) ||
      (bottom & ~top) != 0) {
    throw std::invalid_argument("face interval needs nonempty X <= Y < [d+1]");
  }
}

FaceInterval::FaceInterval(const VertexLabel& bottom, const VertexLabel& top)
    : FaceInterval(bottom.dim(), bottom.mask(), top.mask()) {
  if (bottom.dim() != top.dim()) {
    throw std::invalid_argument("face interval endpoints of different dimension");
  }
}

int FaceInterval::dim() const { return std::popcount(top_) - std::popcount(bottom_); }

std::vector<VertexLabel> FaceInterval::vertices() const {
  std::vector<VertexLabel> out;
  const std::uint64_t free = top_ & ~bottom_;
  // Enumerate submasks of the free part.
  std::uint64_t sub = free;
  while (true) {
    out.push_back(VertexLabel::from_mask(d_, bottom_ | sub));
    if (sub == 0) {
      break;
    }
    sub = (sub - 1) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FaceInterval::contains(const VertexLabel& w) const {
  return (bottom_ & ~w.mask()) == 0 && (w.mask() & ~top_) == 0;
}

bool FaceInterval::is_subface_of(const FaceInterval& other) const {
  return (other.bottom_ & ~bottom_) == 0 && (top_ & ~other.top_) == 0;
}

std::string FaceInterval::to_string() const {
  return "[" + mask_string(bottom_) + ", " + mask_string(top_) + "]";
}

FaceInterval antipode(const FaceInterval& f) {
  const std::uint64_t full = full_mask(f.ambient_dim());
  return FaceInterval(f.ambient_dim(), full & ~f.top(), full & ~f.bottom());
}

BigInt iap_face_count(int d, int j) {
  // The count also holds for the segment d = 1, which the recursion needs.
  if (d < 1) {
    throw std::invalid_argument("face counts need d >= 1, got " + std::to_string(d));
  }
  if (j < 0 || j > d) {
    return 0;
  }
  if (j == d) {
    return 1;
  }
  const auto du = static_cast<unsigned long>(d);
  const auto ju = static_cast<unsigned long>(j);
  return BigInt(pow2(du + 1 - ju) - 2) * binomial(du + 1, ju);
}

FVector fvector_formula(int d, bool with_top) {
  check_polytope_dim(d);
  FVector f;
  for (int j = 0; j < d + (with_top ? 1 : 0); ++j) {
    f.counts.push_back(iap_face_count(d, j));
  }
  return f;
}

BigInt box_face_count(int d, int j) {
  if (d < 0 || j < 0 || j > d) {
    return 0;
  }
  const auto du = static_cast<unsigned long>(d);
  const auto ju = static_cast<unsigned long>(j);
  return BigInt(pow2(du - ju) * binomial(du, ju));
}

FVector fvector_box(int d, bool with_top) {
  if (d < 1) {
    throw std::invalid_argument("box dimension must be positive");
  }
  FVector f;
  for (int j = 0; j < d + (with_top ? 1 : 0); ++j) {
    f.counts.push_back(box_face_count(d, j));
  }
  return f;
}

BigInt cask_face_count(int d, int j) {
  if (d < 0 || j < 0 || j > d) {
    return 0;
  }
  const auto du = static_cast<unsigned long>(d);
  const auto ju = static_cast<unsigned long>(j);
  return BigInt(pow2(du - ju) - 1) * binomial(du, ju);
}

FVector fvector_cask(int d) {
  check_polytope_dim(d);
  FVector f;
  for (int j = 0; j <= d - 2; ++j) {
    f.counts.push_back(cask_face_count(d, j));
  }
  return f;
}

FVectorMatrices fvector_matrices(int dmax) {
  if (dmax < 0) {
    throw std::invalid_argument("dmax must be non-negative");
  }
  FVectorMatrices m;
  for (int d = 0; d <= dmax; ++d) {
    const auto du = static_cast<unsigned long>(d);
    std::vector<BigInt> t;
    std::vector<BigInt> p;
    std::vector<BigInt> b;
    std::vector<Rational> h;
    for (int k = 0; k <= d; ++k) {
      const auto ku = static_cast<unsigned long>(k);
      t.push_back(pow2(du - ku));
      p.push_back(binomial(du, ku));
      b.push_back(BigInt(t.back() * p.back()));
      if (k == d) {
        h.emplace_back(1, 2);
      } else {
        h.emplace_back(BigInt(BigInt(t.back() - 1) * binomial(du + 1, ku)));
      }
    }
    m.two_power.push_back(std::move(t));
    m.pascal.push_back(std::move(p));
    m.box.push_back(std::move(b));
    m.half.push_back(std::move(h));
  }
  return m;
}

FVector FaceLattice::fvector() const {
  FVector f;
  for (const auto& faces : by_dim) {
    f.counts.emplace_back(static_cast<unsigned long>(faces.size()));
  }
  return f;
}

std::size_t FaceLattice::size() const {
  std::size_t n = 0;
  for (const auto& faces : by_dim) {
    n += faces.size();
  }
  return n;
}

FaceLattice build_face_lattice(int d, int bound) {
  check_lattice_bound(d, bound);
  FaceLattice lattice{d, std::vector<std::vector<FaceInterval>>(static_cast<std::size_t>(d))};
  const std::uint64_t full = full_mask(d);
  for (std::uint64_t top = 1; top < full; ++top) {
    for (std::uint64_t bottom = top; bottom != 0; bottom = (bottom - 1) & top) {
      FaceInterval f(d, bottom, top);
      lattice.by_dim[static_cast<std::size_t>(f.dim())].push_back(f);
    }
  }
  for (auto& faces : lattice.by_dim) {
    std::sort(faces.begin(), faces.end());
  }
  return lattice;
}

std::size_t SkeletonGraph::index_of(const VertexLabel& w) const {
  const auto it = std::find(nodes.begin(), nodes.end(), w);
  if (it == nodes.end()) {
    throw std::invalid_argument("label not in skeleton: " + w.to_string());
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

SkeletonGraph skeleton(int d, int bound) {
  check_lattice_bound(d, bound);
  SkeletonGraph g{d, all_labels(d), {}, {}};
  g.adjacency.resize(g.nodes.size());
  std::vector<std::size_t> index_by_mask(static_cast<std::size_t>(full_mask(d)) + 1);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    index_by_mask[g.nodes[i].mask()] = i;
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const std::uint64_t m = g.nodes[i].mask();
    for (int k = 0; k <= d; ++k) {
      const std::uint64_t child = m | (std::uint64_t{1} << k);
      if (child != m && child != full_mask(d)) {
        const std::size_t j = index_by_mask[child];
        g.edges.emplace_back(i, j);
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
  for (auto& adj : g.adjacency) {
    std::sort(adj.begin(), adj.end());
  }
  return g;
}

int valence(const VertexLabel& w) {
  const int parents = w.length() >= 2 ? w.length() : 0;
  const int children = w.length() <= w.dim() - 1 ? w.dim() + 1 - w.length() : 0;
  return parents + children;
}

int distance(const VertexLabel& w, const VertexLabel& other) {
  if (w.dim() != other.dim()) {
    throw std::invalid_argument("labels of different dimension");
  }
  return std::popcount(w.mask() ^ other.mask());
}

int diameter(int d) {
  check_polytope_dim(d);
  return d + 1;
}

std::vector<int> bfs_distances(const SkeletonGraph& g, std::size_t source) {
  std::vector<int> dist(g.nodes.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const std::size_t v : g.adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int diameter_bfs(const SkeletonGraph& g) {
  int best = 0;
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    for (const int dist : bfs_distances(g, s)) {
      if (dist < 0) {
        throw std::logic_error("skeleton is disconnected");
      }
      best = std::max(best, dist);
    }
  }
  return best;
}

BigInt count_flags(int d) {
  check_polytope_dim(d);
  const auto du = static_cast<unsigned long>(d);
  return BigInt(BigInt(du + 1) * factorial(du - 1) * BigInt(pow2(du + 1) - 4));
}

BigInt count_maximal_chains(const FaceLattice& lattice) {
  const std::size_t top = lattice.by_dim.size() - 1;
  // chains_up[i] = number of chains from face i of the current level up to a facet.
  std::vector<BigInt> chains_up(lattice.by_dim[top].size(), BigInt(1));
  for (std::size_t k = top; k-- > 0;) {
    const auto& lower = lattice.by_dim[k];
    const auto& upper = lattice.by_dim[k + 1];
    std::vector<BigInt> next(lower.size(), BigInt(0));
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (std::size_t j = 0; j < upper.size(); ++j) {
        if (lower[i].is_subface_of(upper[j])) {
          next[i] += chains_up[j];
        }
      }
    }
    chains_up = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& c : chains_up) {
    total += c;
  }
  return total;
}

ValenceCensus valence_census(int d) {
  check_polytope_dim(d);
  ValenceCensus census{0, 0};
  for (int t = 1; t <= d; ++t) {
    const BigInt count = binomial(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(t));
    const int parents = t >= 2 ? t : 0;
    const int children = t <= d - 1 ? d + 1 - t : 0;
    (parents + children == d ? census.valence_d : census.valence_d_plus_1) += count;
  }
  return census;
}

Region classify_face(const FaceInterval& f) {
  const std::uint64_t pole_bit = std::uint64_t{1} << f.ambient_dim();
  if ((f.top() & pole_bit) == 0) {
    return Region::NorthCask;
  }
  if ((f.bottom() & pole_bit) != 0) {
    return Region::SouthCask;
  }
  return Region::EquatorialBelt;
}

FVector CaskPartition::count_by_dim(int d, const std::vector<FaceInterval>& faces) {
  FVector f;
  f.counts.assign(static_cast<std::size_t>(d), BigInt(0));
  for (const auto& face : faces) {
    f.counts[static_cast<std::size_t>(face.dim())] += 1;
  }
  return f;
}

CaskPartition casks_and_belt(int d, int bound) {
  const FaceLattice lattice = build_face_lattice(d, bound);
  CaskPartition part{d, {}, {}, {}, {}};
  for (const auto& faces : lattice.by_dim) {
    for (const auto& f : faces) {
      switch (classify_face(f)) {
        case Region::NorthCask: part.north.push_back(f); break;
        case Region::SouthCask: part.south.push_back(f); break;
        case Region::EquatorialBelt: part.belt.push_back(f); break;
      }
    }
  }
  const int pole = d + 1;
  for (const auto& facet : lattice.by_dim.back()) {
    const auto verts = facet.vertices();
    const bool has_vertical_edge = std::any_of(verts.begin(), verts.end(), [&](const auto& w) {
      if (w.contains(pole)) {
        return false;
      }
      const std::uint64_t up = w.mask() | (std::uint64_t{1} << d);
      return up != full_mask(d) && facet.contains(VertexLabel::from_mask(d, up));
    });
    if (has_vertical_edge) {
      part.belt_facets.push_back(facet);
    }
  }
  return part;
}

FourDimInvariants fatness_f03(int d) {
  if (d != 4) {
    throw std::invalid_argument("fatness and f03 are 4-polytope invariants, got d = " +
                                std::to_string(d));
  }
  const FaceLattice lattice = build_face_lattice(d);
  const FVector f = lattice.fvector();
  BigInt f03 = 0;
  for (const auto& facet : lattice.by_dim[3]) {
    f03 += static_cast<unsigned long>(facet.vertices().size());
  }
  const Rational fatness(BigInt(f.counts[1] + f.counts[2] - 20),
                         BigInt(f.counts[0] + f.counts[3] - 10));
  Rational canonical = fatness;
  canonical.canonicalize();
  return {canonical, f03};
}

}  // namespace isocanted
