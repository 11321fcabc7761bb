#pragma once

#include <optional>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/space.hpp"

namespace isodim {

/// How the map F^k -> V, e_i -> vectors[i], behaves. Lists are indexed, so
/// repeated vectors are allowed and make the list noninjective.
struct SetClassification {
  bool injective;
  bool surjective;
  /// injective && surjective
  bool basis;

  bool noninjective() const { return !injective; }
};

/// Throws NotMemberError if some vector is not in v.
SetClassification classify(const std::vector<Vector>& vectors, const Space& v);

/// Coefficients c with sum c_i vectors[i] = target, free coordinates zeroed, or
/// nullopt when target is outside the span. Every other solution differs from
/// this one by an element of kernel_basis of the column matrix.
std::optional<Vector> linear_combination_of(const Vector& target,
                                            const std::vector<Vector>& vectors,
                                            const FieldSpec& spec);

/// True iff every member of v is exactly one linear combination of `vectors`.
bool unique_representation_check(const std::vector<Vector>& vectors, const Space& v);

}  // namespace isodim
