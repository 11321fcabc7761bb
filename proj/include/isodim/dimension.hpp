#pragma once

/**
 * @file dimension.hpp
 * @brief Dimension of a subspace computed by constructing isomorphisms F^n -> V.
 *
 * Everything here is deterministic. Wherever the underlying existence argument
 * says "pick some vector", the first canonical basis row of V that qualifies is
 * chosen, and every choice is recorded so the construction can be replayed.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/linear_map.hpp"
#include "isodim/space.hpp"

namespace isodim {

struct DimensionWitness {
  std::size_t dim;
  /// Isomorphism F^dim -> V with declared codomain V.
  LinearMap iso;
};

DimensionWitness isomorphic_dimension(const Space& v);

/// Adds `v` as a new last column of an injective map into its declared codomain.
/// Throws NotInjectiveError, NotMemberError or AlreadyInImageError.
LinearMap extend_injective(const LinearMap& f, const Vector& v);

struct SequenceStep {
  /// The step produces f_k from f_(k-1); k starts at 1.
  std::size_t k;
  /// Index of the canonical basis row of the target that was chosen.
  std::size_t basis_row;
  Vector vector;
  std::string reason;
};

/// Chain f_0, ..., f_n of injective maps into `target`. f_k is the map given by
/// the first k columns, so f_(k+1) ∘ p_k^(k+1) = f_k holds by construction.
class InjectiveSequence {
 public:
  InjectiveSequence(Space target, Matrix columns, std::vector<SequenceStep> transcript);

  const Space& target() const { return target_; }
  const Matrix& columns() const { return columns_; }
  const std::vector<SequenceStep>& transcript() const { return transcript_; }

  /// Number of maps in the chain, n + 1.
  std::size_t length() const { return columns_.cols() + 1; }
  /// f_k : F^k -> target.
  LinearMap map_at(std::size_t k) const;

 private:
  Space target_;
  Matrix columns_;
  std::vector<SequenceStep> transcript_;
};

InjectiveSequence build_injective_sequence(const Space& v);

struct ExtractionStep {
  /// Kernel vector of the current map, indexed over the surviving inputs.
  Vector kernel_vector;
  /// Original index of the input that was removed.
  std::size_t dropped;
};

struct Extraction {
  /// Surviving original indices, increasing.
  std::vector<std::size_t> kept;
  std::vector<ExtractionStep> steps;
};

/// Shrinks a spanning list of V to a basis by repeatedly removing the input at
/// the largest nonzero coordinate of the first kernel-basis vector.
/// Throws NotSurjectiveError if span(vectors) != V.
Extraction extract_basis_from_surjective(const std::vector<Vector>& vectors, const Space& v);

struct Extension {
  std::vector<Vector> appended;
  /// For each appended vector, the index of the canonical row of V it came from.
  std::vector<std::size_t> basis_rows;
};

/// Grows an independent list in V to a basis of V by appending canonical rows
/// of V that are not yet in the span. Throws NotMemberError or NotInjectiveError.
Extension extend_injective_to_basis(const std::vector<Vector>& vectors, const Space& v);

struct RankNullity {
  std::size_t kernel_dim;
  std::size_t image_dim;
  std::size_t domain_dim;
};

/// Throws std::logic_error if kernel_dim + image_dim != domain_dim (a library defect).
RankNullity rank_nullity(const LinearMap& f);

}  // namespace isodim
