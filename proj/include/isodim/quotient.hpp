#pragma once

/**
 * @file quotient.hpp
 * @brief Quotient spaces V/U with computable cosets.
 *
 * A coset v + U is represented by its canonical representative: the unique
 * member of v + U whose coordinates vanish at every pivot column of U's
 * canonical basis. Any other fixed choice would do; this one turns "the coset
 * map is well defined" into an equality test on vectors.
 *
 * The representatives form a subspace R ⊆ V. Because U's pivot columns are a
 * subset of V's, R has a basis made of the canonical rows of V whose pivots are
 * not U-pivots, and dim R = dim V - dim U. quotient_iso is the coordinate map
 * F^(dim V - dim U) -> R on that basis.
 */

#include <cstddef>
#include <memory>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/linear_map.hpp"
#include "isodim/space.hpp"

namespace isodim {

/// V/U. Immutable; copies share one underlying pair of spaces.
class QuotientSpace {
 public:
  /// Throws NotSubspaceError unless sub ⊆ ambient.
  QuotientSpace(Space ambient, Space sub);

  const Space& ambient() const { return data_->ambient; }
  const Space& sub() const { return data_->sub; }
  std::size_t dim() const { return ambient().dim() - sub().dim(); }

  /// V's pivot columns that are not pivots of U, in increasing order. The
  /// coordinates of a representative at these positions determine it.
  const std::vector<std::size_t>& free_coordinates() const { return data_->free_coordinates; }

 private:
  struct Data {
    Space ambient;
    Space sub;
    std::vector<std::size_t> free_coordinates;
  };
  std::shared_ptr<const Data> data_;
};

struct Coset {
  QuotientSpace quotient;
  /// Canonical representative; zero at every pivot column of quotient.sub().
  Vector rep;

  /// rep read at quotient.free_coordinates(): a vector of F^dim(V/U).
  Vector coordinates() const;

  friend bool operator==(const Coset& a, const Coset& b) { return a.rep == b.rep; }
};

/// Throws NotMemberError when v is not in q.ambient().
Coset coset_rep(const QuotientSpace& q, const Vector& v);

std::size_t quotient_dim(const QuotientSpace& q);

/// Isomorphism F^dim(V/U) -> R (representatives), sending e_t to the canonical
/// row of V whose pivot is the t-th free coordinate. Its codomain is R.
LinearMap quotient_iso(const QuotientSpace& q);

/// The induced map F^n / ker(f) -> im(f), realized as f ∘ quotient_iso on the
/// representative coordinates. An isomorphism onto image(f);
/// factor_map(f).apply(coset_rep(q, x).coordinates()) == f.apply(x).
LinearMap factor_map(const LinearMap& f);

/// F^n / ker(f), the quotient whose coordinates factor_map consumes.
QuotientSpace domain_quotient(const LinearMap& f);

}  // namespace isodim
