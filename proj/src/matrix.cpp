#include "isodim/matrix.hpp"

#include <utility>

#include "isodim/errors.hpp"

namespace isodim {

namespace {

void require_length(const Vector& v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw DimensionMismatchError(std::string(what) + ": expected length " +
                                 std::to_string(expected) + ", got " + std::to_string(v.size()));
  }
}

void require_spec(const Vector& v, const FieldSpec& spec) {
  for (const auto& x : v) {
    if (!(x.spec() == spec)) {
      throw FieldMismatchError("entry over " + x.spec().to_string() + " in a matrix over " +
                               spec.to_string());
    }
  }
}

}  // namespace

Matrix::Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(spec)) {}

Matrix Matrix::from_rows(const FieldSpec& spec, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(spec, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_length(rows[i], cols, "matrix row");
    require_spec(rows[i], spec);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& spec, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(spec, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_length(columns[j], rows, "matrix column");
    require_spec(columns[j], spec);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n, const FieldSpec& spec) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(spec);
  return m;
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DimensionMismatchError("index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + " matrix");
  }
  return (*this)(i, j);
}

Vector Matrix::row(std::size_t i) const {
  Vector out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

Vector Matrix::column(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::column_prefix(std::size_t count) const {
  if (count > cols_) {
    throw DimensionMismatchError("column prefix " + std::to_string(count) + " exceeds " +
                                 std::to_string(cols_) + " columns");
  }
  Matrix out(spec_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::with_column(const Vector& v) const {
  require_length(v, rows_, "appended column");
  require_spec(v, spec_);
  Matrix out(spec_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    out(i, cols_) = v[i];
  }
  return out;
}

Matrix Matrix::with_row(const Vector& v) const {
  require_length(v, cols_, "appended row");
  require_spec(v, spec_);
  Matrix out = *this;
  out.data_.insert(out.data_.end(), v.begin(), v.end());
  ++out.rows_;
  return out;
}

Matrix Matrix::without_column(std::size_t j) const {
  if (j >= cols_) {
    throw DimensionMismatchError("column " + std::to_string(j) + " out of range");
  }
  Matrix out(spec_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0, k = 0; c < cols_; ++c) {
      if (c != j) out(i, k++) = (*this)(i, c);
    }
  }
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  require_length(x, cols_, "matrix-vector product");
  require_spec(x, spec_);
  Vector out = zero_vector(spec_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!x[j].is_zero()) out[i] += (*this)(i, j) * x[j];
    }
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (!(a.spec() == b.spec())) {
    throw FieldMismatchError("matmul over " + a.spec().to_string() + " and " +
                             b.spec().to_string());
  }
  if (a.cols() != b.rows()) {
    throw DimensionMismatchError("matmul of " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                 "x" + std::to_string(b.cols()));
  }
  Matrix out(a.spec(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RrefResult rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;

    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const FieldElement scale = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= scale;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElement factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  const RrefResult r = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.spec(), n);
    v[free] = FieldElement::one(a.spec());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.rref(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  require_length(b, a.rows(), "right-hand side");
  require_spec(b, a.spec());
  // eliminate on [A | b]
  const RrefResult r = rref(a.with_column(b));
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;

  Vector x = zero_vector(a.spec(), a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    x[r.pivot_cols[i]] = r.rref(i, a.cols());
  }
  return x;
}

bool is_rref(const Matrix& m) {
  std::size_t last_pivot = 0;
  bool seen_pivot = false;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t lead = m.cols();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead == m.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (seen_pivot && lead <= last_pivot) return false;
    if (!m(i, lead).is_one()) return false;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != i && !m(k, lead).is_zero()) return false;
    }
    last_pivot = lead;
    seen_pivot = true;
  }
  return true;
}

}  // namespace isodim
