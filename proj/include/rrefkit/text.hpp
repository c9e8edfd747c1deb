#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrefkit/matrix.hpp"
#include "rrefkit/nullspace.hpp"
#include "rrefkit/row_reduction.hpp"
#include "rrefkit/systems.hpp"

// Text formats shared by the CLI and its golden tests.
//
// Matrix: one row per line, entries are scalar literals separated by
// whitespace, '#' starts a comment, blank lines are skipped.
// System: a matrix file whose rows carry a '|' before the right-hand side.
// Row ops: one per line, "swap i j", "scale i c", "axpy i j c"
// (row i <- row i - c * row j).
namespace rrefkit {

/// Throws ParseError (with line number for ragged rows) or DivisionByZero.
Matrix parse_matrix(std::string_view text, const FieldSpec& field);
LinearSystem parse_system(std::string_view text, const FieldSpec& field);

/// Entries separated by single spaces, newline after every row.
std::string format_matrix(const Matrix& m);
/// Entries separated by single spaces, no newline.
std::string format_vector(const Vector& v);

std::string format_row_op(const RowOp& op);
std::vector<RowOp> parse_row_ops(std::string_view text, const FieldSpec& field);

/// "x1 = -3*x3 + 2*x4"; "x1 = 0" when there are no free variables.
std::string format_relation(const PivotExpression& expr, const std::vector<Index>& free_indices);
std::vector<std::string> format_relations(const GraphRelations& rel);

}  // namespace rrefkit
