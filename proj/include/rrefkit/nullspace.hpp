#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rrefkit/matrix.hpp"

namespace rrefkit {

/// Basis of Null(M) normalized as a graph over the free coordinates: the
/// vector for free index n has a 1 in slot n and a 0 in every other free slot.
struct NullBasis {
  std::vector<Index> free_indices;
  std::vector<Vector> basis;  // basis[k] belongs to free_indices[k]
};

/// x_pivot = sum_k coefficients[k] * x_{free_indices[k]}
struct PivotExpression {
  Index pivot;
  std::vector<Scalar> coefficients;
};

/// Null(M) as the graph of a linear map from the free coordinates to the
/// pivot coordinates. Every expression lists every free variable, zeros
/// included.
struct GraphRelations {
  FieldSpec field;
  std::size_t dim;  // q
  std::vector<Index> free_indices;
  std::vector<PivotExpression> pivot_exprs;

  /// The point of Null(M) lying over the given free-variable values.
  [[nodiscard]] Vector lift(std::span<const Scalar> free_values) const;
};

NullBasis null_basis(const Matrix& m);

GraphRelations graph_relations(const Matrix& m);

/// Throws ShapeError when v.dim() != m.cols().
bool null_contains(const Matrix& m, const Vector& v);

struct NullComparison {
  bool equal;
  std::string diagnostic;  // why the spaces differ; empty when equal
};

/// Compares Null(a) and Null(b) by mutual basis membership. Matrices of
/// different shape or field compare unequal, with a diagnostic.
NullComparison compare_null_spaces(const Matrix& a, const Matrix& b);

bool null_equal(const Matrix& a, const Matrix& b);

/// Coefficients alpha with column k = sum alpha_i * column js[i], or nullopt
/// when column k is outside their span. When the selected columns are
/// dependent, the coefficients on non-keeper selections are zero.
std::optional<std::vector<Scalar>> column_in_span(const Matrix& m, Index k,
                                                  std::span<const Index> js);

/// sum alpha_i f_{js[i]} - f_k, the null vector witnessing a span relation.
Vector span_witness(std::size_t q, Index k, std::span<const Index> js,
                    std::span<const Scalar> alpha, const FieldSpec& field);

bool columns_independent(const Matrix& m, std::span<const Index> js);

}  // namespace rrefkit
