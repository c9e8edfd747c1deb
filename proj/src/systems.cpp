#include "rrefkit/systems.hpp"

#include <algorithm>
#include <string>

#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"

namespace rrefkit {

LinearSystem::LinearSystem(Matrix coeff, Vector rhs) : coeff_(std::move(coeff)), rhs_(std::move(rhs)) {
  if (coeff_.field() != rhs_.field()) throw FieldMismatch("coefficients and right-hand side over different fields");
  if (rhs_.dim() != coeff_.rows()) {
    throw ShapeError("right-hand side has " + std::to_string(rhs_.dim()) + " entries for " +
                     std::to_string(coeff_.rows()) + " equations");
  }
}

SolutionSet solve(const LinearSystem& sys) {
  const std::size_t q = sys.coeff().cols();
  const GaucheResult g = gauche_rref(sys.augmented());
  if (!g.pivot_set.empty() && g.pivot_set.back() == q + 1) return Inconsistent{};

  Vector particular = Vector::zero(sys.coeff().field(), q);
  for (std::size_t i = 0; i < g.pivot_set.size(); ++i) particular[g.pivot_set[i] - 1] = g.rref(i, q);
  return Affine{std::move(particular), null_basis(sys.coeff())};
}

bool solution_equivalent(const LinearSystem& a, const LinearSystem& b) {
  if (a.coeff().field() != b.coeff().field()) {
    throw ShapeError("systems over " + a.coeff().field().name() + " and " + b.coeff().field().name());
  }
  if (a.coeff().rows() != b.coeff().rows() || a.coeff().cols() != b.coeff().cols()) {
    throw ShapeError("systems of different sizes");
  }
  const SolutionSet sa = solve(a);
  const SolutionSet sb = solve(b);
  if (std::holds_alternative<Inconsistent>(sa) || std::holds_alternative<Inconsistent>(sb)) {
    throw InconsistentSystemError("solution equivalence is only meaningful for consistent systems");
  }
  const Vector& pa = std::get<Affine>(sa).particular;
  const Vector& pb = std::get<Affine>(sb).particular;
  // Two affine sets with a common point and the same direction space coincide.
  return mat_vec_mul(b.coeff(), pa) == b.rhs() && mat_vec_mul(a.coeff(), pb) == a.rhs() &&
         null_equal(a.coeff(), b.coeff());
}

bool row_equivalent(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("matrices over " + a.field().name() + " and " + b.field().name());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("cannot compare " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " with " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return matrices_equal(gauche_rref(a).rref, gauche_rref(b).rref);
}

}  // namespace rrefkit
