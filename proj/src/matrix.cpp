#include "rrefkit/matrix.hpp"

#include <algorithm>
#include <string>

#include "rrefkit/error.hpp"

namespace rrefkit {

namespace {

void check_index(Index i, std::size_t dim, const char* what) {
  if (i < 1 || i > dim) {
    throw IndexError(std::string(what) + " index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(dim));
  }
}

}  // namespace

Vector::Vector(const FieldSpec& field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const Scalar& s : entries_) {
    if (s.field() != field_) throw FieldMismatch("vector entry outside " + field_.name());
  }
}

Vector Vector::zero(const FieldSpec& field, std::size_t dim) {
  return Vector(field, std::vector<Scalar>(dim, Scalar::zero(field)));
}

Vector Vector::from_ints(const FieldSpec& field, std::initializer_list<long long> values) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (long long v : values) entries.push_back(Scalar::from_int(field, v));
  return Vector(field, std::move(entries));
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Vector::require_compatible(const Vector& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("vectors over different fields");
  if (dim() != rhs.dim()) {
    throw ShapeError("vector dimensions " + std::to_string(dim()) + " and " +
                     std::to_string(rhs.dim()) + " differ");
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_compatible(rhs);
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector operator*(const Scalar& c, Vector v) {
  for (Scalar& s : v.entries_) s = c * s;
  return v;
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("empty matrix (" + std::to_string(rows) + "x" + std::to_string(cols) + ")");
  }
  data_.assign(rows * cols, Scalar::zero(field));
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw FieldMismatch("matrix entry outside " + field.name());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Scalar>> converted;
  for (const auto& row : rows) {
    auto& out = converted.emplace_back();
    for (long long v : row) out.push_back(Scalar::from_int(field, v));
  }
  return from_rows(field, converted);
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw ShapeError("empty matrix (no columns)");
  const FieldSpec field = columns.front().field();
  Matrix m(field, columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].field() != field) throw FieldMismatch("columns over different fields");
    if (columns[c].dim() != m.rows()) throw ShapeError("columns of different lengths");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

bool Matrix::row_is_zero(std::size_t r) const {
  const auto entries = row(r);
  return std::all_of(entries.begin(), entries.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector std_basis(std::size_t dim, Index i, const FieldSpec& field) {
  check_index(i, dim, "basis");
  Vector v = Vector::zero(field, dim);
  v[i - 1] = Scalar::one(field);
  return v;
}

Vector column(const Matrix& m, Index j) {
  check_index(j, m.cols(), "column");
  std::vector<Scalar> entries;
  entries.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(m(r, j - 1));
  return Vector(m.field(), std::move(entries));
}

Vector mat_vec_mul(const Matrix& m, const Vector& v) {
  if (m.field() != v.field()) throw FieldMismatch("matrix and vector over different fields");
  if (v.dim() != m.cols()) {
    throw ShapeError("cannot multiply " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " matrix by vector of dimension " +
                     std::to_string(v.dim()));
  }
  Vector out = Vector::zero(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

bool matrices_equal(const Matrix& a, const Matrix& b) { return a == b; }

Matrix select_columns(const Matrix& m, std::span<const Index> js) {
  if (js.empty()) throw ShapeError("column selection is empty");
  Matrix out(m.field(), m.rows(), js.size());
  for (std::size_t k = 0; k < js.size(); ++k) {
    check_index(js[k], m.cols(), "column");
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, js[k] - 1);
  }
  return out;
}

Matrix augment(const Matrix& m, const Vector& v) {
  if (m.field() != v.field()) throw FieldMismatch("matrix and vector over different fields");
  if (v.dim() != m.rows()) throw ShapeError("right-hand side length differs from row count");
  Matrix out(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    out(r, m.cols()) = v[r];
  }
  return out;
}

}  // namespace rrefkit
