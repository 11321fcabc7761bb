#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isodim/field.hpp"

namespace isodim {

/// Dense m×n matrix over a single field, row-major. Zero rows or zero columns
/// are allowed; a 0×n or m×0 matrix stands for a map from/to F^0 = {0}.
class Matrix {
 public:
  Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols);

  /// Each entry of `rows` must have length `cols`. `cols` is explicit so that
  /// an empty row list still has a width.
  static Matrix from_rows(const FieldSpec& spec, std::size_t cols, const std::vector<Vector>& rows);
  /// Each entry of `columns` must have length `rows`.
  static Matrix from_columns(const FieldSpec& spec, std::size_t rows,
                             const std::vector<Vector>& columns);
  static Matrix identity(std::size_t n, const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const;

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Matrix transpose() const;
  /// Matrix formed by the first `count` columns.
  Matrix column_prefix(std::size_t count) const;
  /// Copy with `v` appended as a new last column.
  Matrix with_column(const Vector& v) const;
  /// Copy with `v` appended as a new last row.
  Matrix with_row(const Vector& v) const;
  /// Copy with column `j` removed.
  Matrix without_column(std::size_t j) const;

  /// A·x.
  Vector apply(const Vector& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix identity(std::size_t n, const FieldSpec& spec) { return Matrix::identity(n, spec); }
inline Matrix transpose(const Matrix& a) { return a.transpose(); }

struct RrefResult {
  Matrix rref;
  /// Strictly increasing.
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, so the result is fully deterministic.
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// One vector per free column, in increasing free-column order. The vector for
/// free column j has a 1 at j, 0 at the other free columns, and -rref(i, j) at
/// pivot column p_i. Spans the null space of `a`.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Particular solution of A·x = b with every free coordinate set to 0, or
/// nullopt when the system is inconsistent. Unique iff kernel_basis(a) is empty.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// True iff `m` satisfies the reduced row echelon axioms.
bool is_rref(const Matrix& m);

}  // namespace isodim
