#include "isodim/space.hpp"

#include "isodim/errors.hpp"

namespace isodim {

namespace {

void require_compatible(const Space& s, const FieldSpec& spec, std::size_t length) {
  if (!(s.spec() == spec)) {
    throw FieldMismatchError("space over " + s.spec().to_string() + " vs " + spec.to_string());
  }
  if (s.ambient_dim() != length) {
    throw DimensionMismatchError("ambient dimension " + std::to_string(s.ambient_dim()) +
                                 " vs " + std::to_string(length));
  }
}

}  // namespace

Space Space::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<Vector> rows;
  rows.reserve(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) rows.push_back(r.rref.row(i));
  return Space(m.spec(), Matrix::from_rows(m.spec(), m.cols(), rows), std::move(r.pivot_cols));
}

Space Space::span(const FieldSpec& spec, std::size_t ambient_dim,
                  const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(spec, ambient_dim, vectors));
}

Space Space::zero(const FieldSpec& spec, std::size_t ambient_dim) {
  return Space(spec, Matrix(spec, 0, ambient_dim), {});
}

Space Space::full(const FieldSpec& spec, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Space(spec, Matrix::identity(ambient_dim, spec), std::move(pivots));
}

bool Space::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatchError("vector of length " + std::to_string(v.size()) +
                                 " tested against a subspace of F^" +
                                 std::to_string(ambient_dim()));
  }
  if (!v.empty() && !(v.front().spec() == spec_)) {
    throw FieldMismatchError("vector over " + v.front().spec().to_string() + " vs space over " +
                             spec_.to_string());
  }
  // Reduce v against the canonical rows; v is a member iff nothing is left.
  Vector rest = v;
  for (std::size_t i = 0; i < pivot_cols_.size(); ++i) {
    const FieldElement c = rest[pivot_cols_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * basis_(i, j);
  }
  return is_zero_vector(rest);
}

bool Space::is_subspace_of(const Space& other) const {
  require_compatible(other, spec_, ambient_dim());
  if (dim() > other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!other.contains(basis_.row(i))) return false;
  }
  return true;
}

}  // namespace isodim
