#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth by exhaustive enumeration over small GF(p).
 *
 * Nothing in here performs elimination. Images, spans and kernels are computed
 * by evaluating every coefficient tuple with plain field arithmetic and
 * collecting the results, so the oracle can check the RREF-based engine.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/linear_map.hpp"

namespace isodim::oracle {

struct EnumerationBudget {
  std::uint64_t max_points = 1'000'000;

  /// Throws UnsupportedFieldError for Q, BudgetExceededError when p^n > max_points.
  void check(const FieldSpec& spec, std::size_t n) const;
};

/// All p^n vectors of GF(p)^n, each once, in lexicographic order (last
/// coordinate varies fastest).
class VectorEnumerator {
 public:
  VectorEnumerator(const FieldSpec& spec, std::size_t n, EnumerationBudget budget = {});

  bool done() const { return done_; }
  const Vector& current() const { return current_; }
  void advance();

 private:
  FieldSpec spec_;
  Vector current_;
  bool done_ = false;
};

std::vector<Vector> enumerate_vectors(const FieldSpec& spec, std::size_t n,
                                      EnumerationBudget budget = {});

using VectorSet = std::set<Vector>;

/// sum coefficients[i] * vectors[i] in F^m, by direct arithmetic.
Vector combine(const FieldSpec& spec, std::size_t m, const std::vector<Vector>& vectors,
               const Vector& coefficients);

/// No two inputs share an output.
bool oracle_injective(const LinearMap& f, EnumerationBudget budget = {});
VectorSet oracle_image(const LinearMap& f, EnumerationBudget budget = {});
VectorSet oracle_kernel(const LinearMap& f, EnumerationBudget budget = {});
/// Image equals the set of all members of f's codomain.
bool oracle_surjective(const LinearMap& f, EnumerationBudget budget = {});

/// Every linear combination of `vectors`.
VectorSet oracle_span(const FieldSpec& spec, std::size_t m, const std::vector<Vector>& vectors,
                      EnumerationBudget budget = {});

/// log_p |span(vectors)|. Throws std::logic_error if the size is not a power of p.
std::size_t oracle_dimension(const FieldSpec& spec, std::size_t m,
                             const std::vector<Vector>& vectors, EnumerationBudget budget = {});

/// For every reachable target, how many coefficient tuples produce it.
std::map<Vector, std::size_t> oracle_representation_counts(const FieldSpec& spec, std::size_t m,
                                                           const std::vector<Vector>& vectors,
                                                           EnumerationBudget budget = {});

}  // namespace isodim::oracle
