#include "isodim/dimension.hpp"

#include <stdexcept>

#include "isodim/errors.hpp"

namespace isodim {

namespace {

void require_members(const std::vector<Vector>& vectors, const Space& v) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!v.contains(vectors[i])) {
      throw NotMemberError("vector " + std::to_string(i) + " " + format_vector(vectors[i]) +
                           " is not in the space");
    }
  }
}

// First canonical row of v outside image(f), or v.dim() if none.
std::size_t first_uncaptured_row(const Space& v, const Space& captured) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!captured.contains(v.basis().row(i))) return i;
  }
  return v.dim();
}

}  // namespace

DimensionWitness isomorphic_dimension(const Space& v) {
  return {v.dim(), LinearMap::from_images(v.spec(), v.ambient_dim(), v.basis_rows(), v)};
}

LinearMap extend_injective(const LinearMap& f, const Vector& v) {
  if (!is_injective(f)) throw NotInjectiveError("map to extend is not injective");
  const Space target = f.codomain();
  if (!target.contains(v)) {
    throw NotMemberError("vector " + format_vector(v) + " is not in the codomain");
  }
  if (image(f).contains(v)) {
    throw AlreadyInImageError("vector " + format_vector(v) + " is already in the image");
  }
  return LinearMap::from_matrix(f.columns().with_column(v), f.declared_codomain());
}

InjectiveSequence::InjectiveSequence(Space target, Matrix columns,
                                     std::vector<SequenceStep> transcript)
    : target_(std::move(target)), columns_(std::move(columns)), transcript_(std::move(transcript)) {}

LinearMap InjectiveSequence::map_at(std::size_t k) const {
  return LinearMap::from_matrix(columns_.column_prefix(k), target_);
}

InjectiveSequence build_injective_sequence(const Space& v) {
  LinearMap f = LinearMap::from_images(v.spec(), v.ambient_dim(), {}, v);
  std::vector<SequenceStep> transcript;
  while (!is_surjective(f)) {
    const std::size_t row = first_uncaptured_row(v, image(f));
    const Vector chosen = v.basis().row(row);
    f = extend_injective(f, chosen);
    transcript.push_back({f.domain_dim(), row, chosen,
                          "first canonical row of the target outside im(f_" +
                              std::to_string(f.domain_dim() - 1) + ")"});
  }
  return InjectiveSequence(v, f.columns(), std::move(transcript));
}

Extraction extract_basis_from_surjective(const std::vector<Vector>& vectors, const Space& v) {
  require_members(vectors, v);
  if (!(Space::span(v.spec(), v.ambient_dim(), vectors) == v)) {
    throw NotSurjectiveError("vectors do not span the space");
  }

  Extraction out;
  for (std::size_t i = 0; i < vectors.size(); ++i) out.kept.push_back(i);

  Matrix columns = Matrix::from_columns(v.spec(), v.ambient_dim(), vectors);
  while (true) {
    const std::vector<Vector> kernel = kernel_basis(columns);
    if (kernel.empty()) break;
    const Vector& x = kernel.front();
    std::size_t last = x.size();
    while (last > 0 && x[last - 1].is_zero()) --last;
    // kernel vectors are nonzero, so last >= 1
    const std::size_t position = last - 1;
    out.steps.push_back({x, out.kept[position]});
    columns = columns.without_column(position);
    out.kept.erase(out.kept.begin() + static_cast<std::ptrdiff_t>(position));
  }
  return out;
}

Extension extend_injective_to_basis(const std::vector<Vector>& vectors, const Space& v) {
  require_members(vectors, v);
  LinearMap f = LinearMap::from_images(v.spec(), v.ambient_dim(), vectors, v);
  if (!is_injective(f)) throw NotInjectiveError("vectors are not an injective set");

  Extension out;
  while (!is_surjective(f)) {
    const std::size_t row = first_uncaptured_row(v, image(f));
    const Vector chosen = v.basis().row(row);
    f = extend_injective(f, chosen);
    out.appended.push_back(chosen);
    out.basis_rows.push_back(row);
  }
  return out;
}

RankNullity rank_nullity(const LinearMap& f) {
  const RankNullity out{kernel(f).dim(), image(f).dim(), f.domain_dim()};
  if (out.kernel_dim + out.image_dim != out.domain_dim) {
    throw std::logic_error("rank-nullity violated: " + std::to_string(out.kernel_dim) + " + " +
                           std::to_string(out.image_dim) + " != " +
                           std::to_string(out.domain_dim));
  }
  return out;
}

}  // namespace isodim
