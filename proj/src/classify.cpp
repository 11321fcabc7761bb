#include "isodim/classify.hpp"

#include "isodim/errors.hpp"
#include "isodim/linear_map.hpp"
#include "isodim/matrix.hpp"

namespace isodim {

SetClassification classify(const std::vector<Vector>& vectors, const Space& v) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!v.contains(vectors[i])) {
      throw NotMemberError("vector " + std::to_string(i) + " " + format_vector(vectors[i]) +
                           " is not in the space");
    }
  }
  const LinearMap f = LinearMap::from_images(v.spec(), v.ambient_dim(), vectors, v);
  const bool injective = is_injective(f);
  const bool surjective = is_surjective(f);
  return {injective, surjective, injective && surjective};
}

std::optional<Vector> linear_combination_of(const Vector& target,
                                            const std::vector<Vector>& vectors,
                                            const FieldSpec& spec) {
  return solve(Matrix::from_columns(spec, target.size(), vectors), target);
}

bool unique_representation_check(const std::vector<Vector>& vectors, const Space& v) {
  return classify(vectors, v).basis;
}

}  // namespace isodim
