#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "rrefkit/matrix.hpp"

namespace rrefkit {

/// Answer to "is this column a linear combination of the keepers to its left?"
struct Keeper {
  friend bool operator==(const Keeper&, const Keeper&) = default;
};

struct Subordinate {
  /// alpha_1..alpha_l, one per keeper in designation order; the queried column
  /// equals sum alpha_i * keeper_i exactly.
  std::vector<Scalar> coefficients;
  friend bool operator==(const Subordinate&, const Subordinate&) = default;
};

using LlqAnswer = std::variant<Keeper, Subordinate>;

/// The keeper columns designated so far during a left-to-right sweep.
///
/// Alongside the keeper columns it maintains a reduced copy: vectors r_1..r_l
/// spanning the same subspace, where r_i has a 1 in its pivot row and every
/// other r_j is zero in that row. Each r_i is tracked as an explicit
/// combination of the original keepers, so a span test costs one pass over
/// the reduced vectors and yields the keeper coefficients directly.
class KeeperState {
 public:
  KeeperState(const FieldSpec& field, std::size_t dim);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return keeper_indices_.size(); }
  /// Column indices (1-based) of the keepers, in designation order.
  [[nodiscard]] const std::vector<Index>& keeper_indices() const { return keeper_indices_; }

  /// Classifies `col` against the current keepers without changing state.
  /// With no keepers, only the zero column is subordinate.
  [[nodiscard]] LlqAnswer classify(const Vector& col) const;

  /// Designates `col` (column `index` of the swept matrix) a keeper.
  /// Throws InternalInvariantViolation if `col` is already in the span.
  void add_keeper(Index index, const Vector& col);

 private:
  struct Reduction {
    std::vector<Scalar> reduced_coeffs;  // coefficient on each r_i
    Vector residual;                     // col - sum coeff_i * r_i
  };

  [[nodiscard]] Reduction reduce(const Vector& col) const;
  void require_dim(const Vector& col) const;

  FieldSpec field_;
  std::size_t dim_;
  std::vector<Index> keeper_indices_;
  std::vector<Vector> reduced_;          // r_i
  std::vector<std::size_t> pivot_rows_;  // 0-based pivot row of r_i
  // transform_[i][j]: coefficient of keeper j in r_i.
  std::vector<std::vector<Scalar>> transform_;
};

/// Left-leaning question for one column.
LlqAnswer llq(const KeeperState& state, const Vector& col);

/// Keeper -> e_{l_before+1}; Subordinate(alpha) -> sum alpha_i e_i, zero-padded
/// to length p.
Vector journal_vector(const LlqAnswer& answer, std::size_t ell_before, std::size_t p,
                      const FieldSpec& field);

struct GaucheResult {
  Matrix rref;
  /// Keeper column indices, 1-based, strictly increasing.
  std::vector<Index> pivot_set;
  /// journals[n] is the journal vector of column n + 1, i.e. column n + 1 of rref.
  std::vector<Vector> journals;

  /// The keeper columns of the input form a basis of its column space.
  [[nodiscard]] const std::vector<Index>& basis_indices() const { return pivot_set; }
};

/// Sweeps the columns left to right, journaling each keeper/subordinate
/// decision; the journals are the columns of the reduced row echelon form.
GaucheResult gauche_rref(const Matrix& m);

/// Indices of the keeper columns of m.
std::vector<Index> gauche_basis(const Matrix& m);

}  // namespace rrefkit
