#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "rrefkit/matrix.hpp"

namespace rrefkit {

/// Interchange rows i and j.
struct Swap {
  Index i;
  Index j;
  friend bool operator==(const Swap&, const Swap&) = default;
};

/// row_i <- c * row_i, c nonzero.
struct Scale {
  Index i;
  Scalar c;
  friend bool operator==(const Scale&, const Scale&) = default;
};

/// row_target <- row_target - c * row_source.
struct Axpy {
  Index target;
  Index source;
  Scalar c;
  friend bool operator==(const Axpy&, const Axpy&) = default;
};

using RowOp = std::variant<Swap, Scale, Axpy>;

/// The op that undoes `op`.
RowOp inverse(const RowOp& op);

/// Applies ops in order. Throws IndexError for rows outside 1..p and
/// InvalidOperation for a zero scale, a self-swap or a self-axpy.
Matrix apply_ops(Matrix m, std::span<const RowOp> ops);

// The four defining conditions, in the order is_rref checks them.
enum class RrefCondition {
  Pivots,            // first nonzero entry of every row is 1
  PivotInsecurity,   // a pivot is the only nonzero entry of its column
  Downright,         // a pivot to the right of another sits lower down
  BottomZeros,       // zero rows come last
};

std::string_view condition_name(RrefCondition c);

struct RrefCheck {
  /// First violated condition; empty when the matrix is in RREF.
  std::optional<RrefCondition> violated;

  [[nodiscard]] bool ok() const { return !violated.has_value(); }
  explicit operator bool() const { return ok(); }
};

RrefCheck is_rref(const Matrix& m);

struct ReductionResult {
  Matrix rref;
  std::vector<RowOp> ops;
  std::vector<Index> pivot_set;
};

/// Classical Gauss-Jordan elimination with a replayable log. The pivot is the
/// first nonzero entry at or below the current row; the pivot row is scaled
/// to 1 and the column is cleared above and below in the same pass. No-op
/// steps are never recorded.
ReductionResult gauss_jordan(const Matrix& m);

/// Row operations taking m to gauche_rref(m).rref.
std::vector<RowOp> equivalence_script(const Matrix& m);

}  // namespace rrefkit
