#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rrefkit/scalar.hpp"

namespace rrefkit {

// Public operations take 1-based row and column indices, matching the
// "first column" / "jth entry" language used in error messages and the CLI.
// Element access through operator[] / operator() is 0-based.
using Index = std::size_t;

/// A column vector in F^dim.
class Vector {
 public:
  Vector(const FieldSpec& field, std::vector<Scalar> entries);

  static Vector zero(const FieldSpec& field, std::size_t dim);
  static Vector from_ints(const FieldSpec& field, std::initializer_list<long long> values);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return entries_.size(); }
  [[nodiscard]] bool is_zero() const;

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }

  [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
  friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
  friend Vector operator*(const Scalar& c, Vector v);

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  void require_compatible(const Vector& rhs) const;

  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Dense p x q matrix with p, q >= 1, stored row-major.
class Matrix {
 public:
  /// Zero matrix. Throws ShapeError if either dimension is zero.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(const FieldSpec& field,
                          std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_columns(const std::vector<Vector>& columns);
  static Matrix identity(const FieldSpec& field, std::size_t n);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Scalar> row(std::size_t r) const {
    return std::span<const Scalar>(data_).subspan(r * cols_, cols_);
  }
  [[nodiscard]] bool row_is_zero(std::size_t r) const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// e_i in F^dim (or f_i, depending on which space dim describes).
Vector std_basis(std::size_t dim, Index i, const FieldSpec& field);

/// The jth column of m.
Vector column(const Matrix& m, Index j);

Vector mat_vec_mul(const Matrix& m, const Vector& v);

/// Same shape, same field and entrywise equal.
bool matrices_equal(const Matrix& a, const Matrix& b);

/// Submatrix made of the listed columns of m, in the listed order. `js` must
/// be nonempty.
Matrix select_columns(const Matrix& m, std::span<const Index> js);

/// (m | v): m with v appended as a last column.
Matrix augment(const Matrix& m, const Vector& v);

}  // namespace rrefkit
