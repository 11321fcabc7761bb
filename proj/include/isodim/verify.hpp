#pragma once

/**
 * @file verify.hpp
 * @brief Theorem-level verification runs shared by `isodim verify` and the
 *        acceptance test binary.
 *
 * Each check enumerates (or samples, from a fixed seed) a family of inputs,
 * tests one statement on every case and reports how many cases violated it.
 * Results depend only on the arguments.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "isodim/field.hpp"
#include "isodim/matrix.hpp"
#include "isodim/space.hpp"

namespace isodim::verify {

struct CheckResult {
  std::string id;
  std::string title;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  /// First violation found, for diagnostics.
  std::string first_violation;
  double seconds = 0.0;
  std::optional<double> time_limit;

  bool within_time() const { return !time_limit || seconds < *time_limit; }
  bool passed() const { return violations == 0 && cases > 0 && within_time(); }
};

/// One line: "PASS <id> cases=... violations=... <title>" (timings are excluded
/// unless `with_timing`, so the default output is reproducible byte for byte).
std::string format_result(const CheckResult& r, bool with_timing = false);

/// Seeded random values over one field.
class Generator {
 public:
  Generator(const FieldSpec& spec, std::uint64_t seed);

  const FieldSpec& spec() const { return spec_; }
  std::mt19937_64& engine() { return engine_; }

  std::size_t uniform(std::size_t lo, std::size_t hi);
  FieldElement element();
  FieldElement nonzero_element();
  Vector vector(std::size_t m);
  /// Uniform random matrix half of the time, otherwise a product B·C through a
  /// random inner dimension so that rank deficiency is common.
  Matrix matrix(std::size_t rows, std::size_t cols);
  /// Random member of s.
  Vector member(const Space& s);
  /// Span of a random number of random vectors, biased towards proper subspaces.
  Space space(std::size_t ambient_dim);
  /// Random invertible n×n matrix.
  Matrix invertible(std::size_t n);
  /// Random spanning list of `v` with `count` >= dim(v) entries, duplicates allowed.
  std::vector<Vector> spanning_list(const Space& v, std::size_t count);
  /// Random injective list in `v` with `count` <= dim(v) entries.
  std::vector<Vector> injective_list(const Space& v, std::size_t count);

 private:
  FieldSpec spec_;
  std::mt19937_64 engine_;
};

/// GF(2), GF(3), GF(5), GF(7) and Q.
std::vector<FieldSpec> default_fields();

/// Every m×n matrix with n > m (m, n <= max_dim) has a nonzero kernel vector.
CheckResult check_injective_bound(const FieldSpec& spec, std::size_t max_dim,
                                  std::optional<double> time_limit = std::nullopt);

/// Every n×n matrix (n <= max_dim): injective <=> surjective <=> rank n.
CheckResult check_square_equivalence(const FieldSpec& spec, std::size_t max_dim);

/// kernel_dim + image_dim = domain_dim for `trials` random maps per field.
CheckResult check_rank_nullity(const std::vector<FieldSpec>& fields, std::size_t trials,
                               std::size_t max_dim, std::uint64_t seed,
                               std::optional<double> time_limit = std::nullopt);

/// isomorphic_dimension = sequence length - 1 = rank, exhaustively over all
/// lists of <= max_vectors vectors in exhaustive_spec^ambient, and for `trials`
/// random spaces per random field.
CheckResult check_dimension_routes(const FieldSpec& exhaustive_spec, std::size_t ambient,
                                   std::size_t max_vectors,
                                   const std::vector<FieldSpec>& random_fields,
                                   std::size_t trials, std::uint64_t seed);

/// Extraction from random spanning lists gives a basis with every dropped
/// vector in the span of the kept ones.
CheckResult check_extraction(const std::vector<FieldSpec>& fields, std::size_t trials,
                             std::size_t max_size, std::size_t max_ambient, std::uint64_t seed);

/// Extension of random injective lists appends dim - size vectors and yields a basis.
CheckResult check_extension(const std::vector<FieldSpec>& fields, std::size_t trials,
                            std::size_t max_ambient, std::uint64_t seed);

/// Quotient dimension, coset well-definedness, factor maps and transport along
/// isomorphisms, exhaustively over every pair U ⊆ V ⊆ F^m (m <= max_ambient).
/// Isomorphisms are enumerated when |GL| is small and sampled otherwise.
CheckResult check_quotients(const std::vector<FieldSpec>& fields, std::size_t max_ambient,
                            std::uint64_t seed);

/// surjective => size >= dim and injective => size <= dim, on the random lists
/// of check_extraction/check_extension (same arguments reproduce them) and on
/// every list of <= max_list vectors inside every subspace of exhaustive_spec^m.
CheckResult check_size_bounds(const FieldSpec& exhaustive_spec, std::size_t max_ambient,
                              std::size_t max_list, const std::vector<FieldSpec>& fields,
                              std::size_t trials, std::size_t max_size,
                              std::size_t random_max_ambient, std::uint64_t seed);

struct OracleCase {
  FieldSpec spec;
  std::size_t ambient;
};

/// classify, image membership and dimension agree with brute-force enumeration
/// on every list of <= max_list vectors.
CheckResult check_oracle_equivalence(const std::vector<OracleCase>& cases, std::size_t max_list,
                                     std::optional<double> time_limit = std::nullopt);

/// Every subspace of spec^m, each once. Enumeration-based; small fields only.
std::vector<Space> all_subspaces(const FieldSpec& spec, std::size_t m);

}  // namespace isodim::verify
