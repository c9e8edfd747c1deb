#include <functional>

#include "doctest.h"
#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"
#include "rrefkit/nullspace.hpp"
#include "rrefkit/row_reduction.hpp"
#include "support/generators.hpp"

using namespace rrefkit;
using namespace rrefkit::testing;

namespace {

// Plain integer product, independent of the library's Scalar arithmetic.
std::vector<long long> int_product(const std::vector<std::vector<long long>>& m, const std::vector<long long>& v) {
  std::vector<long long> out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  }
  return out;
}

const std::vector<std::vector<long long>> kTInts{{2, 1, 7, -7, 2}, {-3, 4, -5, -6, 3}, {1, 1, 4, -5, 2}};

// Calls visit(alpha) for every alpha in GF(p)^len.
void for_each_tuple(const FieldSpec& field, std::size_t len, const std::function<void(const std::vector<Scalar>&)>& visit) {
  std::vector<Scalar> alpha(len, Scalar::zero(field));
  std::vector<std::uint32_t> digits(len, 0);
  for (;;) {
    for (std::size_t i = 0; i < len; ++i) alpha[i] = Scalar::from_int(field, digits[i]);
    visit(alpha);
    std::size_t i = 0;
    while (i < len && ++digits[i] == field.modulus()) digits[i++] = 0;
    if (i == len) return;
  }
}

Vector combination(const Matrix& m, std::span<const Index> js, const std::vector<Scalar>& alpha) {
  Vector out = Vector::zero(m.field(), m.rows());
  for (std::size_t i = 0; i < js.size(); ++i) out += alpha[i] * column(m, js[i]);
  return out;
}

std::vector<Index> random_selection(Rng& rng, std::size_t q, std::size_t max_len) {
  std::vector<Index> all(q);
  for (std::size_t i = 0; i < q; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(std::min(max_len, q)))));
  return all;
}

}  // namespace

TEST_CASE("null_basis of the worked example") {
  // Frozen from the reduced form; checked here by integer multiplication.
  const std::vector<long long> v3{-3, -1, 1, 0, 0};
  const std::vector<long long> v4{2, 3, 0, 1, 0};
  CHECK(int_product(kTInts, v3) == std::vector<long long>{0, 0, 0});
  CHECK(int_product(kTInts, v4) == std::vector<long long>{0, 0, 0});

  const NullBasis nb = null_basis(matrix_T());
  CHECK(nb.free_indices == std::vector<Index>{3, 4});
  REQUIRE(nb.basis.size() == 2);
  CHECK(nb.basis[0] == Vector::from_ints(kQ, {-3, -1, 1, 0, 0}));
  CHECK(nb.basis[1] == Vector::from_ints(kQ, {2, 3, 0, 1, 0}));
}

TEST_CASE("null_basis edge cases") {
  const NullBasis id = null_basis(Matrix::identity(kQ, 3));
  CHECK(id.free_indices.empty());
  CHECK(id.basis.empty());

  const NullBasis zero = null_basis(Matrix(kGF7, 2, 3));
  CHECK(zero.free_indices == std::vector<Index>{1, 2, 3});
  REQUIRE(zero.basis.size() == 3);
  for (Index n = 1; n <= 3; ++n) CHECK(zero.basis[n - 1] == std_basis(3, n, kGF7));
}

TEST_CASE("graph_relations") {
  const GraphRelations t = graph_relations(matrix_T());
  CHECK(t.free_indices == std::vector<Index>{3, 4});
  REQUIRE(t.pivot_exprs.size() == 3);
  const auto coeffs = [](std::initializer_list<long long> v) {
    std::vector<Scalar> out;
    for (long long x : v) out.push_back(Scalar::from_int(kQ, x));
    return out;
  };
  CHECK(t.pivot_exprs[0].pivot == 1);
  CHECK(t.pivot_exprs[0].coefficients == coeffs({-3, 2}));
  CHECK(t.pivot_exprs[1].pivot == 2);
  CHECK(t.pivot_exprs[1].coefficients == coeffs({-1, 3}));
  CHECK(t.pivot_exprs[2].pivot == 5);
  CHECK(t.pivot_exprs[2].coefficients == coeffs({0, 0}));

  const GraphRelations id = graph_relations(Matrix::identity(kQ, 2));
  CHECK(id.free_indices.empty());
  REQUIRE(id.pivot_exprs.size() == 2);
  CHECK(id.pivot_exprs[1].coefficients.empty());

  CHECK(graph_relations(Matrix(kQ, 2, 2)).pivot_exprs.empty());
  CHECK_THROWS_AS(static_cast<void>(t.lift(coeffs({1}))), ShapeError);
}

TEST_CASE("null_contains") {
  const Matrix t = matrix_T();
  CHECK(null_contains(t, Vector::from_ints(kQ, {3, 1, -1, 0, 0})));
  CHECK_FALSE(null_contains(t, std_basis(5, 1, kQ)));
  CHECK(null_contains(t, Vector::zero(kQ, 5)));
  CHECK_THROWS_AS(null_contains(t, Vector::zero(kQ, 3)), ShapeError);
}

TEST_CASE("null_equal") {
  const Matrix t = matrix_T();
  CHECK(null_equal(t, gauche_rref(t).rref));
  CHECK_FALSE(null_equal(Matrix::identity(kQ, 2), Matrix::from_ints(kQ, {{1, 1}, {0, 0}})));
  CHECK(null_equal(Matrix::from_ints(kQ, {{1, 1}, {0, 0}}), Matrix::from_ints(kQ, {{0, 0}, {3, 3}})));

  const NullComparison shape = compare_null_spaces(t, Matrix(kQ, 2, 5));
  CHECK_FALSE(shape.equal);
  CHECK(shape.diagnostic.find("shapes differ") != std::string::npos);
  CHECK_FALSE(compare_null_spaces(t, matrix_T(kGF7)).equal);

  Rng rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    REQUIRE(null_equal(t, apply_ops(t, random_row_ops(rng, kQ, 3))));
  }
}

TEST_CASE("column_in_span") {
  const Matrix t = matrix_T();
  const std::vector<Index> first_two{1, 2};
  const auto alpha = column_in_span(t, 3, first_two);
  REQUIRE(alpha.has_value());
  CHECK(*alpha == std::vector<Scalar>{Scalar::from_int(kQ, 3), Scalar::from_int(kQ, 1)});
  CHECK(null_contains(t, span_witness(5, 3, first_two, *alpha, kQ)));
  CHECK_FALSE(column_in_span(t, 5, first_two).has_value());

  const Matrix with_zero = Matrix::from_ints(kQ, {{1, 0}, {2, 0}});
  const auto empty = column_in_span(with_zero, 2, std::vector<Index>{});
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
  CHECK_FALSE(column_in_span(with_zero, 1, std::vector<Index>{}).has_value());

  // Dependent selection: col3 of T from (1, 2, 4) still resolves, col4 gets 0.
  const std::vector<Index> dependent{1, 2, 4};
  const auto beta = column_in_span(t, 3, dependent);
  REQUIRE(beta.has_value());
  CHECK((*beta)[2].is_zero());
  CHECK(null_contains(t, span_witness(5, 3, dependent, *beta, kQ)));

  CHECK_THROWS_AS(column_in_span(t, 6, first_two), IndexError);
  CHECK_THROWS_AS(column_in_span(t, 1, first_two), IndexError);
  CHECK_THROWS_AS(column_in_span(t, 3, std::vector<Index>{1, 1}), IndexError);
  CHECK_THROWS_AS(column_in_span(t, 3, std::vector<Index>{0}), IndexError);
}

TEST_CASE("columns_independent") {
  const Matrix t = matrix_T();
  CHECK(columns_independent(t, std::vector<Index>{1, 2, 5}));
  CHECK_FALSE(columns_independent(t, std::vector<Index>{1, 2, 3}));
  CHECK(columns_independent(t, std::vector<Index>{}));
  CHECK_FALSE(columns_independent(Matrix(kQ, 2, 2), std::vector<Index>{2}));
  CHECK_THROWS_AS(columns_independent(t, std::vector<Index>{2, 2}), IndexError);
  CHECK_THROWS_AS(columns_independent(t, std::vector<Index>{7}), IndexError);
}

TEST_CASE("dictionary agrees with exhaustive search over GF(5)") {
  const FieldSpec gf5 = FieldSpec::prime_field(5);
  Rng rng(1001);
  int in_span = 0, out_of_span = 0, dependent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Matrix m = random_test_matrix(rng, gf5, 4, 5);
    if (m.cols() < 2) continue;
    const Index k = static_cast<Index>(uniform(rng, 1, static_cast<long long>(m.cols())));
    std::vector<Index> js;
    for (Index j : random_selection(rng, m.cols(), 3)) {
      if (j != k) js.push_back(j);
    }

    const Vector target = column(m, k);
    bool reachable = false;
    bool independent = true;
    for_each_tuple(gf5, js.size(), [&](const std::vector<Scalar>& alpha) {
      const Vector c = combination(m, js, alpha);
      if (c == target) reachable = true;
      if (c.is_zero() && std::any_of(alpha.begin(), alpha.end(), [](const Scalar& a) { return !a.is_zero(); })) {
        independent = false;
      }
    });

    const auto alpha = column_in_span(m, k, js);
    REQUIRE(alpha.has_value() == reachable);
    if (alpha) {
      REQUIRE(combination(m, js, *alpha) == target);
      REQUIRE(null_contains(m, span_witness(m.cols(), k, js, *alpha, gf5)));
      ++in_span;
    } else {
      ++out_of_span;
    }
    REQUIRE(columns_independent(m, js) == independent);
    if (!independent) ++dependent;
  }
  CHECK(in_span > 40);
  CHECK(out_of_span > 40);
  CHECK(dependent > 20);
}

TEST_CASE("rank-nullity and graph soundness") {
  for (const FieldSpec& field : {kQ, kGF7}) {
    Rng rng(1102 + field.modulus());
    for (int trial = 0; trial < 300; ++trial) {
      const Matrix m = random_test_matrix(rng, field);
      const NullBasis nb = null_basis(m);
      REQUIRE(gauche_basis(m).size() + nb.free_indices.size() == m.cols());
      for (std::size_t k = 0; k < nb.basis.size(); ++k) {
        REQUIRE(null_contains(m, nb.basis[k]));
        for (std::size_t other = 0; other < nb.free_indices.size(); ++other) {
          const Scalar& slot = nb.basis[k][nb.free_indices[other] - 1];
          REQUIRE((other == k ? slot.is_one() : slot.is_zero()));
        }
      }
      if (!nb.basis.empty()) {
        REQUIRE(gauss_jordan(Matrix::from_columns(nb.basis)).pivot_set.size() == nb.basis.size());
      }

      const GraphRelations rel = graph_relations(m);
      std::vector<Scalar> free_values;
      for (std::size_t k = 0; k < rel.free_indices.size(); ++k) free_values.push_back(random_scalar(rng, field));
      REQUIRE(null_contains(m, rel.lift(free_values)));
    }
  }
}

TEST_CASE("null space equality matches RREF equality") {
  int equal_pairs = 0, unequal_pairs = 0;
  for (const FieldSpec& field : {kQ, kGF7, FieldSpec::prime_field(2)}) {
    Rng rng(1203 + field.modulus());
    for (int trial = 0; trial < 300; ++trial) {
      const Matrix a = random_test_matrix(rng, field, 4, 4);
      const Matrix perturbed = apply_ops(a, random_row_ops(rng, field, a.rows()));
      REQUIRE(null_equal(a, perturbed));
      REQUIRE(gauche_rref(a).rref == gauche_rref(perturbed).rref);

      // Independent draw of the same shape; tiny shapes over GF(2) collide often.
      const Matrix b = field.modulus() == 2 ? random_matrix(rng, field, a.rows(), a.cols(), 0, 1)
                                            : random_test_matrix(rng, field, a.rows(), a.cols());
      if (b.rows() != a.rows() || b.cols() != a.cols()) continue;
      const bool same = gauche_rref(a).rref == gauche_rref(b).rref;
      REQUIRE(null_equal(a, b) == same);
      (same ? equal_pairs : unequal_pairs)++;
    }
  }
  CHECK(equal_pairs > 10);
  CHECK(unequal_pairs > 100);
}
