#include "rrefkit/row_reduction.hpp"

#include <string>

#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"

namespace rrefkit {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void check_row(Index i, std::size_t rows) {
  if (i < 1 || i > rows) {
    throw IndexError("row index " + std::to_string(i) + " out of range 1.." + std::to_string(rows));
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void scale_row(Matrix& m, std::size_t r, const Scalar& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= k;
}

void axpy_row(Matrix& m, std::size_t target, std::size_t source, const Scalar& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!m(source, c).is_zero()) m(target, c) -= k * m(source, c);
  }
}

// Column of the first nonzero entry in row r, or cols() for a zero row.
std::size_t leading_column(const Matrix& m, std::size_t r) {
  std::size_t c = 0;
  while (c < m.cols() && m(r, c).is_zero()) ++c;
  return c;
}

}  // namespace

RowOp inverse(const RowOp& op) {
  return std::visit(overloaded{
                        [](const Swap& s) -> RowOp { return s; },
                        [](const Scale& s) -> RowOp { return Scale{s.i, s.c.inverse()}; },
                        [](const Axpy& a) -> RowOp { return Axpy{a.target, a.source, -a.c}; },
                    },
                    op);
}

Matrix apply_ops(Matrix m, std::span<const RowOp> ops) {
  const std::size_t rows = m.rows();
  for (const RowOp& op : ops) {
    std::visit(overloaded{
                   [&](const Swap& s) {
                     check_row(s.i, rows);
                     check_row(s.j, rows);
                     if (s.i == s.j) throw InvalidOperation("swap of row " + std::to_string(s.i) + " with itself");
                     swap_rows(m, s.i - 1, s.j - 1);
                   },
                   [&](const Scale& s) {
                     check_row(s.i, rows);
                     if (s.c.field() != m.field()) throw FieldMismatch("scale factor over " + s.c.field().name());
                     if (s.c.is_zero()) throw InvalidOperation("scale of row " + std::to_string(s.i) + " by zero");
                     scale_row(m, s.i - 1, s.c);
                   },
                   [&](const Axpy& a) {
                     check_row(a.target, rows);
                     check_row(a.source, rows);
                     if (a.c.field() != m.field()) throw FieldMismatch("axpy factor over " + a.c.field().name());
                     if (a.target == a.source) {
                       throw InvalidOperation("axpy of row " + std::to_string(a.target) + " onto itself");
                     }
                     axpy_row(m, a.target - 1, a.source - 1, a.c);
                   },
               },
               op);
  }
  return m;
}

std::string_view condition_name(RrefCondition c) {
  switch (c) {
    case RrefCondition::Pivots:
      return "Pivots";
    case RrefCondition::PivotInsecurity:
      return "Pivot insecurity";
    case RrefCondition::Downright:
      return "Downright";
    case RrefCondition::BottomZeros:
      return "Bottom zeros";
  }
  return "unknown";
}

RrefCheck is_rref(const Matrix& m) {
  std::vector<std::size_t> lead(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) lead[r] = leading_column(m, r);

  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead[r] < m.cols() && !m(r, lead[r]).is_one()) return {RrefCondition::Pivots};
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead[r] == m.cols()) continue;
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != r && !m(other, lead[r]).is_zero()) return {RrefCondition::PivotInsecurity};
    }
  }
  std::optional<std::size_t> previous;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead[r] == m.cols()) continue;
    if (previous && lead[r] <= *previous) return {RrefCondition::Downright};
    previous = lead[r];
  }
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead[r] == m.cols()) {
      seen_zero_row = true;
    } else if (seen_zero_row) {
      return {RrefCondition::BottomZeros};
    }
  }
  return {};
}

ReductionResult gauss_jordan(const Matrix& m) {
  Matrix work = m;
  std::vector<RowOp> ops;
  std::vector<Index> pivots;
  std::size_t pivot_row = 0;

  for (std::size_t c = 0; c < work.cols() && pivot_row < work.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < work.rows() && work(r, c).is_zero()) ++r;
    if (r == work.rows()) continue;

    if (r != pivot_row) {
      swap_rows(work, r, pivot_row);
      ops.push_back(Swap{pivot_row + 1, r + 1});
    }
    if (!work(pivot_row, c).is_one()) {
      const Scalar k = work(pivot_row, c).inverse();
      scale_row(work, pivot_row, k);
      ops.push_back(Scale{pivot_row + 1, k});
    }
    for (std::size_t other = 0; other < work.rows(); ++other) {
      if (other == pivot_row || work(other, c).is_zero()) continue;
      const Scalar k = work(other, c);
      axpy_row(work, other, pivot_row, k);
      ops.push_back(Axpy{other + 1, pivot_row + 1, k});
    }
    pivots.push_back(c + 1);
    ++pivot_row;
  }
  return ReductionResult{std::move(work), std::move(ops), std::move(pivots)};
}

std::vector<RowOp> equivalence_script(const Matrix& m) {
  // Gauss-Jordan lands on the unique RREF, which is the Gauche matrix; replay
  // confirms it rather than assuming it.
  ReductionResult reduced = gauss_jordan(m);
  if (apply_ops(m, reduced.ops) != gauche_rref(m).rref) {
    throw InternalInvariantViolation("row-operation script does not reach the Gauche RREF");
  }
  return std::move(reduced.ops);
}

}  // namespace rrefkit
