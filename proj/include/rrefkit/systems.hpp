#pragma once

#include <variant>

#include "rrefkit/matrix.hpp"
#include "rrefkit/nullspace.hpp"

namespace rrefkit {

/// M x = b.
class LinearSystem {
 public:
  /// Throws ShapeError if rhs.dim() != coeff.rows(), FieldMismatch on mixed fields.
  LinearSystem(Matrix coeff, Vector rhs);

  [[nodiscard]] const Matrix& coeff() const { return coeff_; }
  [[nodiscard]] const Vector& rhs() const { return rhs_; }
  [[nodiscard]] Matrix augmented() const { return augment(coeff_, rhs_); }

 private:
  Matrix coeff_;
  Vector rhs_;
};

struct Inconsistent {};

/// particular + span(homogeneous.basis).
struct Affine {
  Vector particular;
  NullBasis homogeneous;
};

using SolutionSet = std::variant<Inconsistent, Affine>;

/// Free variables are set to zero in the particular solution.
SolutionSet solve(const LinearSystem& sys);

/// Whether two consistent systems of the same size have the same solutions.
/// Throws ShapeError on differing shapes or fields and InconsistentSystemError
/// if either system has no solution.
bool solution_equivalent(const LinearSystem& a, const LinearSystem& b);

/// Same RREF. Throws ShapeError on differing shapes, FieldMismatch on
/// differing fields.
bool row_equivalent(const Matrix& a, const Matrix& b);

}  // namespace rrefkit
