#pragma once

#include <cstddef>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/matrix.hpp"

namespace isodim {

/// Subspace of F^m in canonical form: its basis is the list of nonzero rows of
/// an RREF matrix. Canonicity makes equality syntactic.
class Space {
 public:
  /// span of `vectors`; each must have length `ambient_dim`. Empty list gives {0}.
  static Space span(const FieldSpec& spec, std::size_t ambient_dim,
                    const std::vector<Vector>& vectors);
  /// Row space of `m`.
  static Space row_space(const Matrix& m);
  static Space zero(const FieldSpec& spec, std::size_t ambient_dim);
  static Space full(const FieldSpec& spec, std::size_t ambient_dim);

  const FieldSpec& spec() const { return spec_; }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }

  /// k×m RREF matrix without zero rows.
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_rows() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

  bool contains(const Vector& v) const;
  bool is_subspace_of(const Space& other) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  Space(FieldSpec spec, Matrix basis, std::vector<std::size_t> pivots)
      : spec_(spec), basis_(std::move(basis)), pivot_cols_(std::move(pivots)) {}

  FieldSpec spec_;
  Matrix basis_;
  std::vector<std::size_t> pivot_cols_;
};

inline Space span_of(const std::vector<Vector>& vectors, const FieldSpec& spec,
                     std::size_t ambient_dim) {
  return Space::span(spec, ambient_dim, vectors);
}
inline bool contains(const Space& s, const Vector& v) { return s.contains(v); }
inline bool is_subspace_of(const Space& u, const Space& v) { return u.is_subspace_of(v); }
/// Mutual inclusion; with canonical bases this is entrywise equality.
inline bool space_equal(const Space& u, const Space& v) { return u == v; }

}  // namespace isodim
