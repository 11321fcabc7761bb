#include "isodim/quotient.hpp"

#include <algorithm>

#include "isodim/errors.hpp"

namespace isodim {

QuotientSpace::QuotientSpace(Space ambient, Space sub) {
  if (!sub.is_subspace_of(ambient)) {
    throw NotSubspaceError("quotient requires U ⊆ V");
  }
  std::vector<std::size_t> free;
  const auto& u_pivots = sub.pivot_cols();
  for (auto p : ambient.pivot_cols()) {
    if (!std::binary_search(u_pivots.begin(), u_pivots.end(), p)) free.push_back(p);
  }
  data_ = std::make_shared<const Data>(Data{std::move(ambient), std::move(sub), std::move(free)});
}

Vector Coset::coordinates() const {
  Vector out;
  out.reserve(quotient.free_coordinates().size());
  for (auto p : quotient.free_coordinates()) out.push_back(rep[p]);
  return out;
}

Coset coset_rep(const QuotientSpace& q, const Vector& v) {
  if (!q.ambient().contains(v)) {
    throw NotMemberError("vector " + format_vector(v) + " is not in the ambient space V");
  }
  // RREF rows vanish at each other's pivots, so one pass clears every U-pivot.
  Vector rep = v;
  const Matrix& u = q.sub().basis();
  const auto& pivots = q.sub().pivot_cols();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const FieldElement c = rep[pivots[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rep.size(); ++j) rep[j] -= c * u(i, j);
  }
  return Coset{q, std::move(rep)};
}

std::size_t quotient_dim(const QuotientSpace& q) { return q.dim(); }

LinearMap quotient_iso(const QuotientSpace& q) {
  const Space& v = q.ambient();
  const auto& v_pivots = v.pivot_cols();
  std::vector<Vector> images;
  images.reserve(q.dim());
  for (auto p : q.free_coordinates()) {
    const auto row = std::lower_bound(v_pivots.begin(), v_pivots.end(), p) - v_pivots.begin();
    images.push_back(v.basis().row(static_cast<std::size_t>(row)));
  }
  Space reps = Space::span(v.spec(), v.ambient_dim(), images);
  return LinearMap::from_images(v.spec(), v.ambient_dim(), images, std::move(reps));
}

QuotientSpace domain_quotient(const LinearMap& f) {
  return QuotientSpace(Space::full(f.spec(), f.domain_dim()), kernel(f));
}

LinearMap factor_map(const LinearMap& f) {
  const LinearMap h = quotient_iso(domain_quotient(f));
  return compose(f.with_codomain(std::nullopt), h).with_codomain(image(f));
}

}  // namespace isodim
