#include "doctest.h"
#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"
#include "rrefkit/nullspace.hpp"
#include "rrefkit/row_reduction.hpp"
#include "support/generators.hpp"

using namespace rrefkit;
using namespace rrefkit::testing;

namespace {

KeeperState first_two_keepers_of_T() {
  const Matrix t = matrix_T();
  KeeperState state(kQ, 3);
  state.add_keeper(1, column(t, 1));
  state.add_keeper(2, column(t, 2));
  return state;
}

std::vector<Scalar> ints(std::initializer_list<long long> values) {
  std::vector<Scalar> out;
  for (long long v : values) out.push_back(Scalar::from_int(kQ, v));
  return out;
}

}  // namespace

TEST_CASE("llq on the worked example") {
  const Matrix t = matrix_T();
  const KeeperState state = first_two_keepers_of_T();
  CHECK(llq(state, column(t, 3)) == LlqAnswer{Subordinate{ints({3, 1})}});
  CHECK(llq(state, column(t, 4)) == LlqAnswer{Subordinate{ints({-2, -3})}});
  CHECK(llq(state, column(t, 5)) == LlqAnswer{Keeper{}});
  CHECK(llq(state, Vector::zero(kQ, 3)) == LlqAnswer{Subordinate{ints({0, 0})}});
}

TEST_CASE("llq with no keepers asks whether the column is nonzero") {
  const KeeperState empty(kQ, 4);
  CHECK(llq(empty, Vector::zero(kQ, 4)) == LlqAnswer{Subordinate{}});
  CHECK(llq(empty, std_basis(4, 2, kQ)) == LlqAnswer{Keeper{}});
  CHECK_THROWS_AS(llq(empty, Vector::zero(kQ, 3)), ShapeError);
  CHECK_THROWS_AS(llq(empty, Vector::zero(kGF7, 4)), FieldMismatch);
}

TEST_CASE("add_keeper rejects a column already in the span") {
  KeeperState state = first_two_keepers_of_T();
  CHECK_THROWS_AS(state.add_keeper(3, column(matrix_T(), 3)), InternalInvariantViolation);
  CHECK(state.keeper_indices() == std::vector<Index>{1, 2});
}

TEST_CASE("journal_vector") {
  CHECK(journal_vector(Subordinate{ints({3, 1})}, 2, 3, kQ) == Vector::from_ints(kQ, {3, 1, 0}));
  CHECK(journal_vector(Keeper{}, 2, 3, kQ) == Vector::from_ints(kQ, {0, 0, 1}));
  CHECK(journal_vector(Subordinate{}, 0, 4, kQ) == Vector::zero(kQ, 4));
  CHECK_THROWS_AS(journal_vector(Keeper{}, 3, 3, kQ), InternalInvariantViolation);
  CHECK_THROWS_AS(journal_vector(Subordinate{ints({1})}, 2, 3, kQ), InternalInvariantViolation);
}

TEST_CASE("gauche_rref on fixtures") {
  const GaucheResult g = gauche_rref(matrix_T());
  CHECK(g.rref == matrix_J());
  CHECK(g.pivot_set == std::vector<Index>{1, 2, 5});
  CHECK(g.basis_indices() == std::vector<Index>{1, 2, 5});
  REQUIRE(g.journals.size() == 5);
  CHECK(g.journals[0] == std_basis(3, 1, kQ));
  CHECK(g.journals[2] == Vector::from_ints(kQ, {3, 1, 0}));
  CHECK(g.journals[3] == Vector::from_ints(kQ, {-2, -3, 0}));
  CHECK(g.journals[4] == std_basis(3, 3, kQ));

  const GaucheResult zero = gauche_rref(Matrix(kQ, 3, 4));
  CHECK(zero.rref == Matrix(kQ, 3, 4));
  CHECK(zero.pivot_set.empty());

  const GaucheResult id = gauche_rref(Matrix::identity(kGF7, 4));
  CHECK(id.rref == Matrix::identity(kGF7, 4));
  CHECK(id.pivot_set == std::vector<Index>{1, 2, 3, 4});

  // J is its own reduced form; the Gauss-Jordan oracle agrees and needs no ops.
  const ReductionResult oracle = gauss_jordan(matrix_J());
  CHECK(oracle.rref == matrix_J());
  CHECK(oracle.ops.empty());
  CHECK(gauche_rref(matrix_J()).rref == oracle.rref);
  CHECK(gauche_rref(matrix_J()).pivot_set == std::vector<Index>{1, 2, 5});
}

TEST_CASE("gauche_rref over GF(7) on the worked example") {
  // Same relations hold mod 7: col3 = 3 col1 + col2, col4 = -2 col1 - 3 col2.
  const GaucheResult g = gauche_rref(matrix_T(kGF7));
  CHECK(g.rref == matrix_J(kGF7));
  CHECK(g.pivot_set == std::vector<Index>{1, 2, 5});
}

TEST_CASE("gauche_basis") {
  CHECK(gauche_basis(matrix_T()) == std::vector<Index>{1, 2, 5});
  CHECK(gauche_basis(Matrix(kQ, 2, 3)).empty());
  CHECK(gauche_basis(Matrix::from_ints(kQ, {{2, 2}, {-1, -1}, {0, 0}})) == std::vector<Index>{1});
  CHECK(gauche_basis(Matrix::from_ints(kQ, {{0, 1, 2}, {0, 0, 0}})) == std::vector<Index>{2});
}

TEST_CASE("sweep invariants on random matrices") {
  for (const FieldSpec& field : {kQ, kGF7}) {
    CAPTURE(field.name());
    Rng rng(303 + field.modulus());
    for (int trial = 0; trial < 400; ++trial) {
      const Matrix m = random_test_matrix(rng, field);
      CAPTURE(trial);
      const GaucheResult g = gauche_rref(m);

      REQUIRE(is_rref(g.rref).ok());
      REQUIRE(g.rref == gauss_jordan(m).rref);
      REQUIRE(g.pivot_set == gauss_jordan(m).pivot_set);
      REQUIRE(gauche_rref(g.rref).rref == g.rref);
      REQUIRE(std::is_sorted(g.pivot_set.begin(), g.pivot_set.end()));
      REQUIRE(std::adjacent_find(g.pivot_set.begin(), g.pivot_set.end()) == g.pivot_set.end());
      for (std::size_t n = 0; n < m.cols(); ++n) REQUIRE(column(g.rref, n + 1) == g.journals[n]);

      // A nonpivot column's journal encodes sum alpha_i f_{s_i} - f_n in Null(M).
      for (Index n = 1; n <= m.cols(); ++n) {
        if (std::binary_search(g.pivot_set.begin(), g.pivot_set.end(), n)) continue;
        Vector w = Vector::zero(field, m.cols()) - std_basis(m.cols(), n, field);
        for (std::size_t i = 0; i < g.pivot_set.size(); ++i) {
          w += g.journals[n - 1][i] * std_basis(m.cols(), g.pivot_set[i], field);
        }
        REQUIRE(mat_vec_mul(m, w).is_zero());
      }

      if (!g.pivot_set.empty()) {
        const Matrix keepers = select_columns(m, g.pivot_set);
        REQUIRE(gauss_jordan(keepers).pivot_set.size() == g.pivot_set.size());
      }

      const Matrix shuffled = apply_ops(m, random_row_ops(rng, field, m.rows()));
      REQUIRE(gauche_rref(shuffled).rref == g.rref);
    }
  }
}
