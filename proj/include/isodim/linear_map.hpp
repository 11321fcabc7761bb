#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/matrix.hpp"
#include "isodim/space.hpp"

namespace isodim {

/// Linear map F^n -> F^m, stored as the m×n matrix whose j-th column is f(e_j).
///
/// A map may declare a codomain V ⊆ F^m. Values keep their ambient F^m
/// coordinates; the declaration only constrains the columns (each must lie in
/// V) and changes what "surjective" means.
class LinearMap {
 public:
  /// The unique map with f(e_j) = images[j]. An empty list gives the map {0} -> F^m.
  static LinearMap from_images(const FieldSpec& spec, std::size_t ambient_dim,
                               const std::vector<Vector>& images,
                               std::optional<Space> codomain = std::nullopt);
  static LinearMap from_matrix(Matrix columns, std::optional<Space> codomain = std::nullopt);
  static LinearMap identity(std::size_t n, const FieldSpec& spec);

  const FieldSpec& spec() const { return columns_.spec(); }
  std::size_t domain_dim() const { return columns_.cols(); }
  std::size_t ambient_dim() const { return columns_.rows(); }
  const Matrix& columns() const { return columns_; }
  std::vector<Vector> images() const { return columns_.column_list(); }

  /// Declared codomain, or all of F^m when none was given.
  Space codomain() const;
  const std::optional<Space>& declared_codomain() const { return codomain_; }

  Vector apply(const Vector& x) const;

  /// Same columns, different declared codomain (membership re-checked).
  LinearMap with_codomain(std::optional<Space> codomain) const;

 private:
  LinearMap(Matrix columns, std::optional<Space> codomain)
      : columns_(std::move(columns)), codomain_(std::move(codomain)) {}

  Matrix columns_;
  std::optional<Space> codomain_;
};

inline Vector apply(const LinearMap& f, const Vector& x) { return f.apply(x); }

/// g ∘ f. Requires f.ambient_dim() == g.domain_dim(); the result keeps g's codomain.
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Span of kernel_basis(columns), as a subspace of F^n.
Space kernel(const LinearMap& f);
/// Span of the columns, as a subspace of F^m.
Space image(const LinearMap& f);

/// rank(columns) == domain_dim.
bool is_injective(const LinearMap& f);
/// image(f) == codomain(f).
bool is_surjective(const LinearMap& f);
bool is_isomorphism(const LinearMap& f);

/// Inverse of an isomorphism f: F^n -> V ⊆ F^m, as a map F^m -> F^n.
/// compose(inverse(f), f) is the identity on F^n and compose(f, inverse(f)) is
/// the identity on every vector of V. Off V it reads the coordinates of V's
/// pivot columns and ignores the rest. Throws NotInvertibleError otherwise.
LinearMap inverse(const LinearMap& f);

/// p_i^j: zero-pads F^i into F^j when i <= j, drops trailing coordinates when i >= j.
LinearMap embed_truncate(std::size_t from_dim, std::size_t to_dim, const FieldSpec& spec);

}  // namespace isodim
