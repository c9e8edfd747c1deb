#include "rrefkit/nullspace.hpp"

#include <algorithm>
#include <set>

#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"

namespace rrefkit {

namespace {

std::vector<Index> complement(const std::vector<Index>& pivots, std::size_t q) {
  std::vector<Index> free;
  auto it = pivots.begin();
  for (Index n = 1; n <= q; ++n) {
    if (it != pivots.end() && *it == n) {
      ++it;
    } else {
      free.push_back(n);
    }
  }
  return free;
}

void validate_selection(const Matrix& m, std::span<const Index> js) {
  std::set<Index> seen;
  for (Index j : js) {
    if (j < 1 || j > m.cols()) {
      throw IndexError("column index " + std::to_string(j) + " out of range 1.." +
                       std::to_string(m.cols()));
    }
    if (!seen.insert(j).second) throw IndexError("column index " + std::to_string(j) + " repeated");
  }
}

}  // namespace

Vector GraphRelations::lift(std::span<const Scalar> free_values) const {
  if (free_values.size() != free_indices.size()) {
    throw ShapeError("expected " + std::to_string(free_indices.size()) + " free values, got " +
                     std::to_string(free_values.size()));
  }
  Vector x = Vector::zero(field, dim);
  for (std::size_t k = 0; k < free_indices.size(); ++k) x[free_indices[k] - 1] = free_values[k];
  for (const PivotExpression& expr : pivot_exprs) {
    Scalar value = Scalar::zero(field);
    for (std::size_t k = 0; k < free_values.size(); ++k) value += expr.coefficients[k] * free_values[k];
    x[expr.pivot - 1] = value;
  }
  return x;
}

GraphRelations graph_relations(const Matrix& m) {
  const GaucheResult g = gauche_rref(m);
  GraphRelations out{m.field(), m.cols(), complement(g.pivot_set, m.cols()), {}};
  // Row i of E reads x_{s_i} + sum_n E[i][n] x_n = 0 over the free n.
  for (std::size_t i = 0; i < g.pivot_set.size(); ++i) {
    PivotExpression expr{g.pivot_set[i], {}};
    for (Index n : out.free_indices) expr.coefficients.push_back(-g.rref(i, n - 1));
    out.pivot_exprs.push_back(std::move(expr));
  }
  return out;
}

NullBasis null_basis(const Matrix& m) {
  const GraphRelations rel = graph_relations(m);
  NullBasis out{rel.free_indices, {}};
  std::vector<Scalar> values(rel.free_indices.size(), Scalar::zero(m.field()));
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = Scalar::one(m.field());
    out.basis.push_back(rel.lift(values));
    values[k] = Scalar::zero(m.field());
  }
  return out;
}

bool null_contains(const Matrix& m, const Vector& v) { return mat_vec_mul(m, v).is_zero(); }

NullComparison compare_null_spaces(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    return {false, "fields differ: " + a.field().name() + " vs " + b.field().name()};
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return {false, "shapes differ: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols())};
  }
  const NullBasis na = null_basis(a);
  for (std::size_t k = 0; k < na.basis.size(); ++k) {
    if (!null_contains(b, na.basis[k])) {
      return {false, "null vector for free column " + std::to_string(na.free_indices[k]) +
                         " of the first matrix is not annihilated by the second"};
    }
  }
  const NullBasis nb = null_basis(b);
  for (std::size_t k = 0; k < nb.basis.size(); ++k) {
    if (!null_contains(a, nb.basis[k])) {
      return {false, "null vector for free column " + std::to_string(nb.free_indices[k]) +
                         " of the second matrix is not annihilated by the first"};
    }
  }
  return {true, {}};
}

bool null_equal(const Matrix& a, const Matrix& b) { return compare_null_spaces(a, b).equal; }

std::optional<std::vector<Scalar>> column_in_span(const Matrix& m, Index k,
                                                  std::span<const Index> js) {
  validate_selection(m, js);
  if (k < 1 || k > m.cols()) {
    throw IndexError("column index " + std::to_string(k) + " out of range 1.." +
                     std::to_string(m.cols()));
  }
  if (std::find(js.begin(), js.end(), k) != js.end()) {
    throw IndexError("column " + std::to_string(k) + " is also in the spanning selection");
  }

  // Gauche sweep over the selected columns only; js[i] is recorded as keeper
  // position i + 1 so the answer can be mapped back.
  KeeperState keepers(m.field(), m.rows());
  for (std::size_t i = 0; i < js.size(); ++i) {
    const Vector col = column(m, js[i]);
    if (std::holds_alternative<Keeper>(keepers.classify(col))) keepers.add_keeper(i + 1, col);
  }
  const LlqAnswer answer = keepers.classify(column(m, k));
  if (std::holds_alternative<Keeper>(answer)) return std::nullopt;

  const auto& coefficients = std::get<Subordinate>(answer).coefficients;
  std::vector<Scalar> alpha(js.size(), Scalar::zero(m.field()));
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    alpha[keepers.keeper_indices()[i] - 1] = coefficients[i];
  }
  return alpha;
}

Vector span_witness(std::size_t q, Index k, std::span<const Index> js,
                    std::span<const Scalar> alpha, const FieldSpec& field) {
  if (alpha.size() != js.size()) throw ShapeError("one coefficient per selected column expected");
  Vector w = Vector::zero(field, q) - std_basis(q, k, field);
  for (std::size_t i = 0; i < js.size(); ++i) w += alpha[i] * std_basis(q, js[i], field);
  return w;
}

bool columns_independent(const Matrix& m, std::span<const Index> js) {
  validate_selection(m, js);
  if (js.empty()) return true;
  return gauche_basis(select_columns(m, js)).size() == js.size();
}

}  // namespace rrefkit
