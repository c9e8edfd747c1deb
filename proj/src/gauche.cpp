#include "rrefkit/gauche.hpp"

#include <string>

#include "rrefkit/error.hpp"

namespace rrefkit {

KeeperState::KeeperState(const FieldSpec& field, std::size_t dim) : field_(field), dim_(dim) {}

void KeeperState::require_dim(const Vector& col) const {
  if (col.field() != field_) throw FieldMismatch("column over " + col.field().name());
  if (col.dim() != dim_) {
    throw ShapeError("column of length " + std::to_string(col.dim()) + " swept against keepers in F^" +
                     std::to_string(dim_));
  }
}

KeeperState::Reduction KeeperState::reduce(const Vector& col) const {
  Reduction out{{}, col};
  out.reduced_coeffs.reserve(reduced_.size());
  // r_j vanishes in every pivot row but its own, so the coefficient on r_i
  // can be read straight off the column.
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    const Scalar c = col[pivot_rows_[i]];
    if (!c.is_zero()) out.residual -= c * reduced_[i];
    out.reduced_coeffs.push_back(c);
  }
  return out;
}

LlqAnswer KeeperState::classify(const Vector& col) const {
  require_dim(col);
  const Reduction red = reduce(col);
  if (!red.residual.is_zero()) return Keeper{};

  std::vector<Scalar> alpha(size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (red.reduced_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) alpha[j] += red.reduced_coeffs[i] * transform_[i][j];
  }
  return Subordinate{std::move(alpha)};
}

void KeeperState::add_keeper(Index index, const Vector& col) {
  require_dim(col);
  Reduction red = reduce(col);
  std::size_t pivot = 0;
  while (pivot < dim_ && red.residual[pivot].is_zero()) ++pivot;
  if (pivot == dim_) {
    throw InternalInvariantViolation("column " + std::to_string(index) +
                                     " lies in the span of the keepers");
  }
  const std::size_t ell = size();
  const Scalar scale = red.residual[pivot].inverse();

  // residual = new keeper - sum_i coeff_i * r_i, with r_i = sum_j T[i][j] k_j.
  std::vector<Scalar> new_transform(ell + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (red.reduced_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < ell; ++j) new_transform[j] -= red.reduced_coeffs[i] * transform_[i][j];
  }
  new_transform[ell] = Scalar::one(field_);
  for (Scalar& t : new_transform) t *= scale;
  Vector new_reduced = scale * std::move(red.residual);

  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    transform_[i].push_back(Scalar::zero(field_));
    const Scalar c = reduced_[i][pivot];
    if (c.is_zero()) continue;
    reduced_[i] -= c * new_reduced;
    for (std::size_t j = 0; j <= ell; ++j) transform_[i][j] -= c * new_transform[j];
  }

  keeper_indices_.push_back(index);
  reduced_.push_back(std::move(new_reduced));
  pivot_rows_.push_back(pivot);
  transform_.push_back(std::move(new_transform));
}

LlqAnswer llq(const KeeperState& state, const Vector& col) { return state.classify(col); }

Vector journal_vector(const LlqAnswer& answer, std::size_t ell_before, std::size_t p,
                      const FieldSpec& field) {
  Vector out = Vector::zero(field, p);
  if (std::holds_alternative<Keeper>(answer)) {
    if (ell_before + 1 > p) {
      throw InternalInvariantViolation("keeper " + std::to_string(ell_before + 1) +
                                       " exceeds the " + std::to_string(p) + " rows available");
    }
    out[ell_before] = Scalar::one(field);
    return out;
  }
  const auto& coefficients = std::get<Subordinate>(answer).coefficients;
  if (coefficients.size() != ell_before || ell_before > p) {
    throw InternalInvariantViolation("subordinate journal with " +
                                     std::to_string(coefficients.size()) +
                                     " coefficients for " + std::to_string(ell_before) + " keepers");
  }
  for (std::size_t i = 0; i < coefficients.size(); ++i) out[i] = coefficients[i];
  return out;
}

GaucheResult gauche_rref(const Matrix& m) {
  const std::size_t p = m.rows();
  KeeperState keepers(m.field(), p);
  std::vector<Vector> journals;
  journals.reserve(m.cols());

  for (Index n = 1; n <= m.cols(); ++n) {
    const Vector col = column(m, n);
    const LlqAnswer answer = keepers.classify(col);
    journals.push_back(journal_vector(answer, keepers.size(), p, m.field()));
    if (std::holds_alternative<Keeper>(answer)) keepers.add_keeper(n, col);
  }

  return GaucheResult{Matrix::from_columns(journals), keepers.keeper_indices(), std::move(journals)};
}

std::vector<Index> gauche_basis(const Matrix& m) { return gauche_rref(m).pivot_set; }

}  // namespace rrefkit
