#include "isodim/linear_map.hpp"

#include <algorithm>

#include "isodim/errors.hpp"

namespace isodim {

namespace {

void check_codomain(const Matrix& columns, const std::optional<Space>& codomain) {
  if (!codomain) return;
  if (!(codomain->spec() == columns.spec())) {
    throw FieldMismatchError("codomain over " + codomain->spec().to_string() + ", map over " +
                             columns.spec().to_string());
  }
  if (codomain->ambient_dim() != columns.rows()) {
    throw DimensionMismatchError("codomain lives in F^" + std::to_string(codomain->ambient_dim()) +
                                 ", images in F^" + std::to_string(columns.rows()));
  }
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    if (!codomain->contains(columns.column(j))) {
      throw NotMemberError("image of e_" + std::to_string(j + 1) + " " +
                           format_vector(columns.column(j)) + " is not in the codomain");
    }
  }
}

}  // namespace

LinearMap LinearMap::from_images(const FieldSpec& spec, std::size_t ambient_dim,
                                 const std::vector<Vector>& images,
                                 std::optional<Space> codomain) {
  return from_matrix(Matrix::from_columns(spec, ambient_dim, images), std::move(codomain));
}

LinearMap LinearMap::from_matrix(Matrix columns, std::optional<Space> codomain) {
  check_codomain(columns, codomain);
  return LinearMap(std::move(columns), std::move(codomain));
}

LinearMap LinearMap::identity(std::size_t n, const FieldSpec& spec) {
  return LinearMap(Matrix::identity(n, spec), std::nullopt);
}

Space LinearMap::codomain() const {
  if (codomain_) return *codomain_;
  return Space::full(spec(), ambient_dim());
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != domain_dim()) {
    throw DimensionMismatchError("map has domain F^" + std::to_string(domain_dim()) +
                                 ", argument has length " + std::to_string(x.size()));
  }
  return columns_.apply(x);
}

LinearMap LinearMap::with_codomain(std::optional<Space> codomain) const {
  return from_matrix(columns_, std::move(codomain));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.ambient_dim() != g.domain_dim()) {
    throw DimensionMismatchError("cannot compose: inner map lands in F^" +
                                 std::to_string(f.ambient_dim()) + ", outer map starts at F^" +
                                 std::to_string(g.domain_dim()));
  }
  return LinearMap::from_matrix(matmul(g.columns(), f.columns()), g.declared_codomain());
}

Space kernel(const LinearMap& f) {
  return Space::span(f.spec(), f.domain_dim(), kernel_basis(f.columns()));
}

Space image(const LinearMap& f) { return Space::row_space(f.columns().transpose()); }

bool is_injective(const LinearMap& f) { return rank(f.columns()) == f.domain_dim(); }

bool is_surjective(const LinearMap& f) {
  // columns lie in the codomain, so equal dimension means equal spaces
  return rank(f.columns()) == f.codomain().dim();
}

bool is_isomorphism(const LinearMap& f) { return is_injective(f) && is_surjective(f); }

LinearMap inverse(const LinearMap& f) {
  if (!is_isomorphism(f)) {
    throw NotInvertibleError("map F^" + std::to_string(f.domain_dim()) + " -> F^" +
                             std::to_string(f.ambient_dim()) + " is not an isomorphism");
  }
  const FieldSpec& spec = f.spec();
  const std::size_t n = f.domain_dim();
  const std::size_t m = f.ambient_dim();
  const Space codomain = f.codomain();
  const std::vector<std::size_t>& pivots = codomain.pivot_cols();

  // Vectors of V are determined by their pivot coordinates, so the n×n block of
  // pivot rows of f is invertible. Invert it via rref([block | I]).
  Matrix augmented(spec, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = f.columns()(pivots[i], j);
    augmented(i, n + i) = FieldElement::one(spec);
  }
  const Matrix reduced = rref(augmented).rref;

  Matrix out(spec, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) out(i, pivots[k]) = reduced(i, n + k);
  }
  return LinearMap::from_matrix(std::move(out));
}

LinearMap embed_truncate(std::size_t from_dim, std::size_t to_dim, const FieldSpec& spec) {
  Matrix m(spec, to_dim, from_dim);
  for (std::size_t t = 0; t < std::min(from_dim, to_dim); ++t) m(t, t) = FieldElement::one(spec);
  return LinearMap::from_matrix(std::move(m));
}

}  // namespace isodim
