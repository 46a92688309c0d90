#include <catch_amalgamated.hpp>

#include "isocanted/matrix_classes.hpp"
#include "isocanted/tropical.hpp"
#include "oracles.hpp"

using namespace isocanted;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("-5/10") == Rational(-1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational(" 1"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("inf"), ParseError);
}

TEST_CASE("integer helpers") {
  CHECK(pow2(10) == 1024);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(6) == 720);
}

TEST_CASE("scalar order and -inf") {
  const TropScalar ninf = TropScalar::neg_inf();
  CHECK_FALSE(ninf.is_finite());
  CHECK(ninf < TropScalar(-1000000L));
  CHECK(ninf == TropScalar());
  CHECK_THROWS_AS(ninf.value(), std::logic_error);
  CHECK(trop_add(ninf, TropScalar(3L)) == TropScalar(3L));
  CHECK_FALSE(trop_mul(ninf, TropScalar(3L)).is_finite());
  CHECK(trop_mul(TropScalar(Rational(1, 2)), TropScalar(Rational(1, 3))) ==
        TropScalar(Rational(5, 6)));
}

TEST_CASE("semiring axioms on random scalars") {
  oracle::Rng rng(11);
  const TropScalar zero = TropScalar::neg_inf();
  const TropScalar one = 0L;
  for (int trial = 0; trial < 500; ++trial) {
    const TropScalar x = rng.scalar(), y = rng.scalar(), z = rng.scalar();
    CHECK(trop_add(x, y) == trop_add(y, x));
    CHECK(trop_mul(x, y) == trop_mul(y, x));
    CHECK(trop_add(trop_add(x, y), z) == trop_add(x, trop_add(y, z)));
    CHECK(trop_mul(trop_mul(x, y), z) == trop_mul(x, trop_mul(y, z)));
    CHECK(trop_mul(x, trop_add(y, z)) == trop_add(trop_mul(x, y), trop_mul(x, z)));
    CHECK(trop_add(x, zero) == x);
    CHECK(trop_mul(x, one) == x);
    CHECK(trop_mul(x, zero) == zero);
    CHECK(trop_add(x, x) == x);
  }
}

TEST_CASE("matrix construction and access") {
  TropMatrix a(3);
  CHECK_FALSE(a(1, 1).is_finite());
  CHECK_FALSE(a.all_finite());
  CHECK(TropMatrix::zero(3).all_finite());
  CHECK_THROWS_AS(TropMatrix(1), std::invalid_argument);
  CHECK_THROWS_AS(TropMatrix(std::vector<std::vector<TropScalar>>{{0L, 1L}, {0L}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(a(0, 1), std::out_of_range);
  CHECK_THROWS_AS(a(1, 4), std::out_of_range);
}

TEST_CASE("matrix product associativity and identity") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const TropMatrix a = rng.matrix(n), b = rng.matrix(n), c = rng.matrix(n);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    TropMatrix id(n);
    for (std::size_t i = 1; i <= n; ++i) {
      id(i, i) = 0L;
    }
    CHECK(mat_mul(a, id) == a);
    CHECK(mat_mul(id, a) == a);
  }
  CHECK_THROWS_AS(mat_mul(TropMatrix(2), TropMatrix(3)), std::invalid_argument);
}

TEST_CASE("permanent agrees with permutation walk") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const TropMatrix a = trial % 2 ? rng.matrix(n) : rng.tie_heavy_matrix(n);
    const MinorEvaluation got = trop_permanent(a);
    const oracle::Permanent want = oracle::brute_permanent(a);
    INFO("trial " << trial << " n " << n);
    CHECK(got.value == want.value);
    CHECK(got.multiplicity == want.multiplicity);
  }
}

TEST_CASE("permanent of the zero matrix counts every permutation") {
  const MinorEvaluation p = trop_permanent(TropMatrix::zero(5));
  CHECK(p.value == TropScalar(0L));
  CHECK(p.multiplicity == 120);
}

TEST_CASE("permanent bound") {
  CHECK_THROWS_AS(trop_permanent(TropMatrix::zero(5), 4), BoundExceeded);
  CHECK_NOTHROW(trop_permanent(TropMatrix::zero(5), 5));
}

TEST_CASE("minors agree with brute force on submatrices") {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const TropMatrix a = rng.tie_heavy_matrix(6);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 5));
    std::vector<std::size_t> rows{1, 2, 3, 4, 5, 6}, cols{1, 2, 3, 4, 5, 6};
    std::shuffle(rows.begin(), rows.end(), rng.engine());
    std::shuffle(cols.begin(), cols.end(), rng.engine());
    rows.resize(k);
    cols.resize(k);
    std::vector<std::size_t> rs = rows, cs = cols;
    std::sort(rs.begin(), rs.end());
    std::sort(cs.begin(), cs.end());
    const oracle::Permanent want = oracle::brute_permanent(oracle::submatrix(a, rs, cs));
    const MinorEvaluation got = trop_minor(a, rows, cols);
    CHECK(got.value == want.value);
    CHECK(got.multiplicity == want.multiplicity);
  }
}

TEST_CASE("minor selection errors") {
  const TropMatrix a = TropMatrix::zero(4);
  CHECK_THROWS_AS(trop_minor(a, {1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(trop_minor(a, {1, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(trop_minor(a, {1, 5}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(trop_minor(a, {0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(laplace_terms(a, {1, 2}, {1, 2}, 3), std::invalid_argument);
}

TEST_CASE("laplace terms maximise to the minor") {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const TropMatrix a = rng.matrix(5);
    const IndexSet rows{1, 3, 4, 5}, cols{2, 3, 4, 5};
    const std::size_t expansion = cols[static_cast<std::size_t>(rng.uniform(0, 3))];
    const auto terms = laplace_terms(a, rows, cols, expansion);
    REQUIRE(terms.size() == rows.size());
    TropScalar best = TropScalar::neg_inf();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      best = trop_add(best, terms[i]);
      // Term i is a(r, c) plus the complementary minor.
      IndexSet rest_rows, rest_cols;
      for (const auto r : rows) {
        if (r != rows[i]) rest_rows.push_back(r);
      }
      for (const auto c : cols) {
        if (c != expansion) rest_cols.push_back(c);
      }
      CHECK(terms[i] == trop_mul(a(rows[i], expansion), trop_minor(a, rest_rows, rest_cols).value));
    }
    CHECK(best == trop_minor(a, rows, cols).value);
  }
}

TEST_CASE("diagonal conjugation") {
  oracle::Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const TropMatrix a = rng.matrix(n);
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      d[i] = rng.rational(5, 3);
    }
    const TropMatrix c = conjugate_diag(a, d);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (a(i, j).is_finite()) {
          CHECK(c(i, j).value() == a(i, j).value() + d[i - 1] - d[j - 1]);
        } else {
          CHECK_FALSE(c(i, j).is_finite());
        }
      }
    }
    // Every permutation term is unchanged, so the permanent is too.
    const MinorEvaluation p = trop_permanent(a), q = trop_permanent(c);
    CHECK(p.value == q.value);
    CHECK(p.multiplicity == q.multiplicity);
  }
  const std::vector<Rational> bad{1, 1};
  CHECK_THROWS_AS(conjugate_diag(TropMatrix::zero(2), bad), std::invalid_argument);
  const std::vector<Rational> short_d{0};
  CHECK_THROWS_AS(conjugate_diag(TropMatrix::zero(2), short_d), std::invalid_argument);
}

TEST_CASE("isocanted matrices have permanent 0 attained once") {
  for (int d = 2; d <= 6; ++d) {
    for (const auto& [ell, a] : std::vector<std::pair<Rational, Rational>>{
             {2, 1}, {3, 1}, {Rational(5, 2), Rational(3, 4)}}) {
      const MinorEvaluation p = trop_permanent(isocanted_vni(IsocantedSpec(d, ell, a)));
      CHECK(p.value == TropScalar(0L));
      CHECK(p.multiplicity == 1);
    }
  }
}
