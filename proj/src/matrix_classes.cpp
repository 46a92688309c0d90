#include "isocanted/matrix_classes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isocanted {

bool is_normal(const TropMatrix& a) {
  if (!a.all_finite()) {
    return false;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= a.size(); ++j) {
      const Rational& x = a(i, j).value();
      if (i == j ? x != 0 : x > 0) {
        return false;
      }
    }
  }
  return true;
}

bool is_idempotent(const TropMatrix& a) { return mat_mul(a, a) == a; }

bool is_full_dimensional(const TropMatrix& a) {
  if (!a.all_finite()) {
    return false;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i + 1; j <= a.size(); ++j) {
      if (a(i, j).value() + a(j, i).value() >= 0) {
        return false;
      }
    }
  }
  return true;
}

bool is_ni(const TropMatrix& a) {
  return is_normal(a) && is_full_dimensional(a) && is_idempotent(a);
}

bool is_vni(const TropMatrix& a) {
  if (!is_ni(a)) {
    return false;
  }
  const std::size_t n = a.size();
  for (std::size_t j = 1; j <= n; ++j) {
    if (a(n, j).value() != 0) {
      return false;
    }
  }
  return true;
}

bool is_sni(const TropMatrix& a) {
  if (!is_ni(a)) {
    return false;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i + 1; j <= a.size(); ++j) {
      if (a(i, j) != a(j, i)) {
        return false;
      }
    }
  }
  return true;
}

PerturbationMatrix::PerturbationMatrix(std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n < 2) {
    throw std::invalid_argument("perturbation matrix needs size >= 2");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) {
      throw std::invalid_argument("perturbation matrix is not square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = rows_[i][j];
      const bool forced_zero = i == j || i == n - 1 || j == n - 1;
      if (forced_zero ? e != 0 : e > 0) {
        throw std::invalid_argument(
            "perturbation entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
            ") = " + to_string(e) +
            (forced_zero ? " must be zero" : " must be non-positive"));
      }
    }
  }
}

PerturbationMatrix PerturbationMatrix::zero(std::size_t n) {
  return PerturbationMatrix(std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
}

PerturbationMatrix PerturbationMatrix::constant(std::size_t n, const Rational& a) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (i != j) {
        rows[i][j] = -a;
      }
    }
  }
  return PerturbationMatrix(std::move(rows));
}

std::optional<Rational> PerturbationMatrix::constant_value() const {
  const std::size_t d = size() - 1;
  std::optional<Rational> common;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) {
        continue;
      }
      if (!common) {
        common = -rows_[i][j];
      } else if (*common != -rows_[i][j]) {
        return std::nullopt;
      }
    }
  }
  return common;
}

TropMatrix subtract(const TropMatrix& box, const PerturbationMatrix& perturbation) {
  if (box.size() != perturbation.size()) {
    throw std::invalid_argument("subtract: size mismatch");
  }
  TropMatrix out(box.size());
  for (std::size_t i = 1; i <= box.size(); ++i) {
    for (std::size_t j = 1; j <= box.size(); ++j) {
      out(i, j) = Rational(box(i, j).value() - perturbation(i, j));
    }
  }
  return out;
}

Decomposition decompose(const TropMatrix& a) {
  if (!is_ni(a)) {
    throw std::invalid_argument("decompose: matrix is not normal idempotent");
  }
  const std::size_t n = a.size();
  std::vector<Rational> lengths(n - 1);
  std::vector<Rational> shift(n);
  for (std::size_t i = 1; i < n; ++i) {
    // The last row and column of E vanish, so A and B share them.
    shift[i - 1] = -a(n, i).value();
    lengths[i - 1] = -a(n, i).value() - a(i, n).value();
  }
  TropMatrix box = conjugate_diag(box_vni(lengths), shift);

  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      e[i - 1][j - 1] = box(i, j).value() - a(i, j).value();
    }
  }
  // The constructor rejects anything outside the perturbation pattern.
  PerturbationMatrix perturbation(std::move(e));
  if (!is_ni(box)) {
    throw std::invalid_argument("decompose: derived box matrix is not NI");
  }
  return {std::move(box), std::move(perturbation), std::move(lengths), std::move(shift)};
}

std::optional<Rational> is_isocanted(const TropMatrix& a) {
  const Decomposition dec = decompose(a);
  auto value = dec.perturbation.constant_value();
  if (value && *value > 0) {
    return value;
  }
  return std::nullopt;
}

namespace {

void check_lengths(std::span<const Rational> lengths) {
  if (lengths.empty()) {
    throw std::invalid_argument("box needs at least one edge length");
  }
  for (const Rational& l : lengths) {
    if (l <= 0) {
      throw std::invalid_argument("edge length must be positive, got " + to_string(l));
    }
  }
}

std::vector<Rational> repeated(int d, const Rational& ell) {
  if (d < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  return std::vector<Rational>(static_cast<std::size_t>(d), ell);
}

void check_cant(std::span<const Rational> lengths, const Rational& a) {
  check_lengths(lengths);
  const Rational& shortest = *std::min_element(lengths.begin(), lengths.end());
  if (!(a > 0 && a < shortest)) {
    throw std::invalid_argument("cant parameter must satisfy 0 < a < " + to_string(shortest) +
                                ", got " + to_string(a));
  }
}

}  // namespace

TropMatrix box_vni(std::span<const Rational> lengths) {
  check_lengths(lengths);
  const std::size_t n = lengths.size() + 1;
  TropMatrix b = TropMatrix::zero(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) {
        b(i, j) = Rational(-lengths[i - 1]);
      }
    }
  }
  return b;
}

std::vector<Rational> sni_shift(std::span<const Rational> lengths) {
  std::vector<Rational> d(lengths.size() + 1);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    d[i] = lengths[i] / 2;
  }
  return d;
}

TropMatrix box_sni(std::span<const Rational> lengths) {
  return conjugate_diag(box_vni(lengths), sni_shift(lengths));
}

TropMatrix cube_vni(int d, const Rational& ell) { return box_vni(repeated(d, ell)); }

TropMatrix cube_sni(int d, const Rational& ell) { return box_sni(repeated(d, ell)); }

IsocantedSpec::IsocantedSpec(int d, Rational ell, Rational a)
    : d_(d), ell_(std::move(ell)), a_(std::move(a)) {
  ell_.canonicalize();
  a_.canonicalize();
  if (d_ < 2) {
    throw std::invalid_argument("isocanted polytopes need d >= 2, got " + std::to_string(d_));
  }
  if (ell_ <= 0) {
    throw std::invalid_argument("edge length must be positive");
  }
  if (!(a_ > 0 && a_ < ell_)) {
    throw std::invalid_argument("cant parameter must satisfy 0 < a < ell");
  }
}

TropMatrix isocanted_box_vni(std::span<const Rational> lengths, const Rational& a) {
  check_cant(lengths, a);
  return subtract(box_vni(lengths), PerturbationMatrix::constant(lengths.size() + 1, a));
}

TropMatrix isocanted_box_sni(std::span<const Rational> lengths, const Rational& a) {
  check_cant(lengths, a);
  return subtract(box_sni(lengths), PerturbationMatrix::constant(lengths.size() + 1, a));
}

TropMatrix isocanted_vni(const IsocantedSpec& spec) {
  return isocanted_box_vni(repeated(spec.dim(), spec.ell()), spec.cant());
}

TropMatrix isocanted_sni(const IsocantedSpec& spec) {
  return isocanted_box_sni(repeated(spec.dim(), spec.ell()), spec.cant());
}

TropMatrix isocanted(const IsocantedSpec& spec, Placement placement) {
  return placement == Placement::Vni ? isocanted_vni(spec) : isocanted_sni(spec);
}

}  // namespace isocanted
