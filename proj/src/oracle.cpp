#include "isodim/oracle.hpp"

#include <stdexcept>

#include "isodim/errors.hpp"

namespace isodim::oracle {

void EnumerationBudget::check(const FieldSpec& spec, std::size_t n) const {
  if (!spec.is_prime()) {
    throw UnsupportedFieldError("enumeration needs a finite field, got " + spec.to_string());
  }
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    points *= spec.modulus();
    if (points > max_points) {
      throw BudgetExceededError(spec.to_string() + "^" + std::to_string(n) + " exceeds " +
                                std::to_string(max_points) + " points");
    }
  }
}

VectorEnumerator::VectorEnumerator(const FieldSpec& spec, std::size_t n, EnumerationBudget budget)
    : spec_(spec) {
  budget.check(spec, n);
  current_ = zero_vector(spec, n);
}

void VectorEnumerator::advance() {
  const FieldElement one = FieldElement::one(spec_);
  for (std::size_t i = current_.size(); i-- > 0;) {
    current_[i] += one;
    if (!current_[i].is_zero()) return;
  }
  done_ = true;
}

std::vector<Vector> enumerate_vectors(const FieldSpec& spec, std::size_t n,
                                      EnumerationBudget budget) {
  std::vector<Vector> out;
  for (VectorEnumerator it(spec, n, budget); !it.done(); it.advance()) out.push_back(it.current());
  return out;
}

Vector combine(const FieldSpec& spec, std::size_t m, const std::vector<Vector>& vectors,
               const Vector& coefficients) {
  if (coefficients.size() != vectors.size()) {
    throw DimensionMismatchError("coefficient count does not match vector count");
  }
  Vector out = zero_vector(spec, m);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m) throw DimensionMismatchError("vector length mismatch");
    for (std::size_t r = 0; r < m; ++r) out[r] = out[r] + coefficients[i] * vectors[i][r];
  }
  return out;
}

bool oracle_injective(const LinearMap& f, EnumerationBudget budget) {
  const std::vector<Vector> images = f.images();
  VectorSet seen;
  for (VectorEnumerator it(f.spec(), f.domain_dim(), budget); !it.done(); it.advance()) {
    if (!seen.insert(combine(f.spec(), f.ambient_dim(), images, it.current())).second) return false;
  }
  return true;
}

VectorSet oracle_image(const LinearMap& f, EnumerationBudget budget) {
  return oracle_span(f.spec(), f.ambient_dim(), f.images(), budget);
}

VectorSet oracle_kernel(const LinearMap& f, EnumerationBudget budget) {
  const std::vector<Vector> images = f.images();
  VectorSet out;
  for (VectorEnumerator it(f.spec(), f.domain_dim(), budget); !it.done(); it.advance()) {
    if (is_zero_vector(combine(f.spec(), f.ambient_dim(), images, it.current()))) {
      out.insert(it.current());
    }
  }
  return out;
}

bool oracle_surjective(const LinearMap& f, EnumerationBudget budget) {
  const VectorSet codomain =
      oracle_span(f.spec(), f.ambient_dim(), f.codomain().basis_rows(), budget);
  return oracle_image(f, budget) == codomain;
}

VectorSet oracle_span(const FieldSpec& spec, std::size_t m, const std::vector<Vector>& vectors,
                      EnumerationBudget budget) {
  VectorSet out;
  for (VectorEnumerator it(spec, vectors.size(), budget); !it.done(); it.advance()) {
    out.insert(combine(spec, m, vectors, it.current()));
  }
  return out;
}

std::size_t oracle_dimension(const FieldSpec& spec, std::size_t m,
                             const std::vector<Vector>& vectors, EnumerationBudget budget) {
  std::size_t size = oracle_span(spec, m, vectors, budget).size();
  std::size_t dim = 0;
  while (size % spec.modulus() == 0) {
    size /= spec.modulus();
    ++dim;
  }
  if (size != 1) throw std::logic_error("span cardinality is not a power of p");
  return dim;
}

std::map<Vector, std::size_t> oracle_representation_counts(const FieldSpec& spec, std::size_t m,
                                                           const std::vector<Vector>& vectors,
                                                           EnumerationBudget budget) {
  std::map<Vector, std::size_t> out;
  for (VectorEnumerator it(spec, vectors.size(), budget); !it.done(); it.advance()) {
    ++out[combine(spec, m, vectors, it.current())];
  }
  return out;
}

}  // namespace isodim::oracle
