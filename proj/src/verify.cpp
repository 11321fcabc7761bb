#include "isodim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "isodim/classify.hpp"
#include "isodim/dimension.hpp"
#include "isodim/errors.hpp"
#include "isodim/linear_map.hpp"
#include "isodim/matrix_io.hpp"
#include "isodim/oracle.hpp"
#include "isodim/quotient.hpp"

namespace isodim::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Independent stream per (check, field) so that checks do not perturb each other.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view salt, std::size_t field_index) {
  std::uint64_t h = splitmix64(seed);
  for (char c : salt) h = splitmix64(h ^ static_cast<unsigned char>(c));
  return splitmix64(h ^ field_index);
}

class Recorder {
 public:
  Recorder(std::string id, std::string title, std::optional<double> time_limit = std::nullopt)
      : start_(Clock::now()) {
    result_.id = std::move(id);
    result_.title = std::move(title);
    result_.time_limit = time_limit;
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.violations++ == 0) result_.first_violation = describe();
  }

  // Runs `body`; a thrown exception counts as a violation.
  template <typename Body>
  void guarded(Body&& body, const std::function<std::string()>& describe) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, [&] { return describe() + ": threw " + e.what(); });
    }
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  CheckResult result_;
  Clock::time_point start_;
};

std::string describe_list(const std::vector<Vector>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += " ";
    out += format_vector(vs[i]);
  }
  return out + "]";
}

std::string describe_matrix(const Matrix& m) { return describe_list(m.row_list()); }

// Calls `visit` on every list of exactly `length` entries drawn from `items`.
void for_each_list(const std::vector<Vector>& items, std::size_t length,
                   const std::function<void(const std::vector<Vector>&)>& visit) {
  std::vector<Vector> current;
  std::function<void()> recurse = [&] {
    if (current.size() == length) {
      visit(current);
      return;
    }
    for (const auto& v : items) {
      current.push_back(v);
      recurse();
      current.pop_back();
    }
  };
  recurse();
}

void for_each_list_up_to(const std::vector<Vector>& items, std::size_t max_length,
                         const std::function<void(const std::vector<Vector>&)>& visit) {
  for (std::size_t k = 0; k <= max_length; ++k) for_each_list(items, k, visit);
}

// Every rows×cols matrix over a small prime field.
void for_each_matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                     const std::function<void(const Matrix&)>& visit) {
  for (oracle::VectorEnumerator it(spec, rows * cols); !it.done(); it.advance()) {
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = it.current()[i * cols + j];
    }
    visit(m);
  }
}

struct SurjectiveCase {
  Space space;
  std::vector<Vector> vectors;
};

SurjectiveCase surjective_case(Generator& gen, std::size_t max_size, std::size_t max_ambient) {
  const std::size_t m = gen.uniform(0, max_ambient);
  Space v = gen.space(m);
  while (v.dim() > max_size) v = gen.space(m);
  const std::size_t count = gen.uniform(v.dim(), max_size);
  auto vectors = gen.spanning_list(v, count);
  return {std::move(v), std::move(vectors)};
}

struct InjectiveCase {
  Space space;
  std::vector<Vector> vectors;
};

InjectiveCase injective_case(Generator& gen, std::size_t max_ambient) {
  const std::size_t m = gen.uniform(0, max_ambient);
  Space v = gen.space(m);
  const std::size_t count = gen.uniform(0, v.dim());
  auto vectors = gen.injective_list(v, count);
  return {std::move(v), std::move(vectors)};
}

void expect_size_bounds(Recorder& rec, const std::vector<Vector>& list, const Space& v) {
  const SetClassification c = classify(list, v);
  const std::size_t size = list.size();
  const std::size_t dim = v.dim();
  rec.expect(!c.surjective || size >= dim,
             [&] { return "surjective list smaller than dim: " + describe_list(list); });
  rec.expect(!c.injective || size <= dim,
             [&] { return "injective list larger than dim: " + describe_list(list); });
  rec.expect(!(size == dim && (c.injective || c.surjective)) || c.basis,
             [&] { return "list of size dim is not a basis: " + describe_list(list); });
  rec.expect(c.basis == (c.injective && c.surjective), [&] { return "basis flag inconsistent"; });
}

}  // namespace

std::string format_result(const CheckResult& r, bool with_timing) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << " " << r.id << " cases=" << r.cases
      << " violations=" << r.violations;
  if (with_timing || !r.within_time()) {
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " time=" << r.seconds << "s";
    if (r.time_limit) out << " limit=" << *r.time_limit << "s";
  }
  out << "  " << r.title;
  if (r.violations > 0) out << "\n  first violation: " << r.first_violation;
  return out.str();
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(const FieldSpec& spec, std::uint64_t seed) : spec_(spec), engine_(seed) {}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

FieldElement Generator::element() {
  if (spec_.is_prime()) {
    return FieldElement(spec_, static_cast<std::int64_t>(
                                   std::uniform_int_distribution<std::uint64_t>(
                                       0, spec_.modulus() - 1)(engine_)));
  }
  if (uniform(0, 3) == 0) return FieldElement::zero(spec_);
  const auto num = static_cast<long>(uniform(0, 18)) - 9;
  const auto den = static_cast<long>(uniform(1, 5));
  return FieldElement(spec_, mpz_class(num), mpz_class(den));
}

FieldElement Generator::nonzero_element() {
  while (true) {
    FieldElement x = element();
    if (!x.is_zero()) return x;
  }
}

Vector Generator::vector(std::size_t m) {
  Vector v;
  v.reserve(m);
  for (std::size_t i = 0; i < m; ++i) v.push_back(element());
  return v;
}

Matrix Generator::matrix(std::size_t rows, std::size_t cols) {
  if (uniform(0, 1) == 0) {
    Matrix m(spec_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = element();
    }
    return m;
  }
  const std::size_t inner = uniform(0, std::min(rows, cols));
  Matrix b(spec_, rows, inner);
  Matrix c(spec_, inner, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < inner; ++j) b(i, j) = element();
  }
  for (std::size_t i = 0; i < inner; ++i) {
    for (std::size_t j = 0; j < cols; ++j) c(i, j) = element();
  }
  return b * c;
}

Vector Generator::member(const Space& s) {
  Vector v = zero_vector(spec_, s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v = v + element() * s.basis().row(i);
  return v;
}

Space Generator::space(std::size_t ambient_dim) {
  const std::size_t count = uniform(0, ambient_dim);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(vector(ambient_dim));
  return Space::span(spec_, ambient_dim, vs);
}

Matrix Generator::invertible(std::size_t n) {
  while (true) {
    Matrix m(spec_, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = element();
    }
    if (rank(m) == n) return m;
  }
}

std::vector<Vector> Generator::spanning_list(const Space& v, std::size_t count) {
  if (count < v.dim()) throw std::invalid_argument("spanning list shorter than dimension");
  while (true) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < count; ++i) {
      // occasional exact duplicates and zero vectors
      const std::size_t kind = uniform(0, 9);
      if (kind == 0 && !out.empty()) {
        out.push_back(out[uniform(0, out.size() - 1)]);
      } else if (kind == 1) {
        out.push_back(zero_vector(spec_, v.ambient_dim()));
      } else {
        out.push_back(member(v));
      }
    }
    if (Space::span(spec_, v.ambient_dim(), out) == v) return out;
  }
}

std::vector<Vector> Generator::injective_list(const Space& v, std::size_t count) {
  if (count > v.dim()) throw std::invalid_argument("injective list longer than dimension");
  std::vector<Vector> out;
  while (out.size() < count) {
    Vector candidate = member(v);
    if (!Space::span(spec_, v.ambient_dim(), out).contains(candidate)) {
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

std::vector<FieldSpec> default_fields() {
  return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::prime(7),
          FieldSpec::rationals()};
}

std::vector<Space> all_subspaces(const FieldSpec& spec, std::size_t m) {
  std::map<std::string, Space> unique;
  const auto vectors = oracle::enumerate_vectors(spec, m);
  for_each_list_up_to(vectors, m, [&](const std::vector<Vector>& list) {
    Space s = Space::span(spec, m, list);
    unique.emplace(format_matrix_file(s.basis()), std::move(s));
  });
  std::vector<Space> out;
  for (auto& [key, s] : unique) out.push_back(std::move(s));
  return out;
}

// ---------------------------------------------------------------------------
// Checks

CheckResult check_injective_bound(const FieldSpec& spec, std::size_t max_dim,
                                  std::optional<double> time_limit) {
  Recorder rec("injective-bound",
               "every map F^n -> F^m with n > m over " + spec.to_string() +
                   " has a nonzero kernel (m, n <= " + std::to_string(max_dim) + ")",
               time_limit);
  for (std::size_t m = 0; m <= max_dim; ++m) {
    for (std::size_t n = m + 1; n <= max_dim; ++n) {
      for_each_matrix(spec, m, n, [&](const Matrix& a) {
        const LinearMap f = LinearMap::from_matrix(a);
        rec.expect(!kernel_basis(a).empty() && !is_injective(f) && kernel(f).dim() > 0,
                   [&] { return "trivial kernel for " + describe_matrix(a); });
      });
    }
  }
  return rec.finish();
}

CheckResult check_square_equivalence(const FieldSpec& spec, std::size_t max_dim) {
  Recorder rec("square-equivalence",
               "n x n over " + spec.to_string() +
                   ": injective <=> surjective <=> rank n (n <= " + std::to_string(max_dim) + ")");
  for (std::size_t n = 0; n <= max_dim; ++n) {
    for_each_matrix(spec, n, n, [&](const Matrix& a) {
      const LinearMap f = LinearMap::from_matrix(a);
      const bool inj = is_injective(f);
      const bool surj = is_surjective(f);
      const bool full = rank(a) == n;
      rec.expect(inj == surj && surj == full && is_isomorphism(f) == full,
                 [&] { return "inconsistent classification of " + describe_matrix(a); });
    });
  }
  return rec.finish();
}

CheckResult check_rank_nullity(const std::vector<FieldSpec>& fields, std::size_t trials,
                               std::size_t max_dim, std::uint64_t seed,
                               std::optional<double> time_limit) {
  Recorder rec("rank-nullity",
               "dim ker + dim im = dim domain on " + std::to_string(trials) +
                   " random maps per field (dims <= " + std::to_string(max_dim) + ")",
               time_limit);
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    Generator gen(fields[fi], derive_seed(seed, "rank-nullity", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t m = gen.uniform(0, max_dim);
      const std::size_t n = gen.uniform(0, max_dim);
      const Matrix a = gen.matrix(m, n);
      rec.guarded(
          [&] {
            const LinearMap f = LinearMap::from_matrix(a);
            const RankNullity rn = rank_nullity(f);
            bool ok = rn.kernel_dim + rn.image_dim == rn.domain_dim && rn.domain_dim == n &&
                      rn.image_dim == rank(transpose(a));
            for (const auto& v : kernel_basis(a)) ok = ok && is_zero_vector(a.apply(v));
            rec.expect(ok, [&] {
              return fields[fi].to_string() + " " + describe_matrix(a) + ": " +
                     std::to_string(rn.kernel_dim) + " + " + std::to_string(rn.image_dim) +
                     " vs " + std::to_string(rn.domain_dim);
            });
          },
          [&] { return describe_matrix(a); });
    }
  }
  return rec.finish();
}

namespace {

void expect_dimension_routes(Recorder& rec, const FieldSpec& spec, std::size_t ambient,
                             const std::vector<Vector>& list) {
  rec.guarded(
      [&] {
        const Space v = Space::span(spec, ambient, list);
        const DimensionWitness w = isomorphic_dimension(v);
        const InjectiveSequence seq = build_injective_sequence(v);
        const std::size_t by_rank = rank(Matrix::from_rows(spec, ambient, list));

        bool ok = w.dim == seq.length() - 1 && w.dim == by_rank && is_isomorphism(w.iso) &&
                  w.iso.codomain() == v && w.iso.domain_dim() == w.dim;
        // chain invariants: injective prefixes, growing images, prefix compatibility
        for (std::size_t k = 0; ok && k < seq.length(); ++k) {
          const LinearMap fk = seq.map_at(k);
          ok = is_injective(fk) && image(fk).dim() == k;
          if (ok && k + 1 < seq.length()) {
            const LinearMap next = seq.map_at(k + 1);
            ok = compose(next, embed_truncate(k, k + 1, spec)).columns() == fk.columns() &&
                 image(fk).is_subspace_of(image(next)) && !(image(fk) == image(next));
          }
        }
        ok = ok && is_isomorphism(seq.map_at(seq.length() - 1));
        rec.expect(ok, [&] {
          return spec.to_string() + " " + describe_list(list) + ": witness " +
                 std::to_string(w.dim) + ", sequence " + std::to_string(seq.length() - 1) +
                 ", rank " + std::to_string(by_rank);
        });
      },
      [&] { return describe_list(list); });
}

}  // namespace

CheckResult check_dimension_routes(const FieldSpec& exhaustive_spec, std::size_t ambient,
                                   std::size_t max_vectors,
                                   const std::vector<FieldSpec>& random_fields,
                                   std::size_t trials, std::uint64_t seed) {
  Recorder rec("dimension-routes",
               "witness dim = injective sequence length - 1 = rank (exhaustive <= " +
                   std::to_string(max_vectors) + " vectors in " + exhaustive_spec.to_string() +
                   "^" + std::to_string(ambient) + ", " + std::to_string(trials) +
                   " random spaces per field)");
  const auto vectors = oracle::enumerate_vectors(exhaustive_spec, ambient);
  for_each_list_up_to(vectors, max_vectors, [&](const std::vector<Vector>& list) {
    expect_dimension_routes(rec, exhaustive_spec, ambient, list);
  });
  for (std::size_t fi = 0; fi < random_fields.size(); ++fi) {
    Generator gen(random_fields[fi], derive_seed(seed, "dimension-routes", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t m = gen.uniform(0, 6);
      const Space w = gen.space(m);
      const auto list = gen.spanning_list(w, gen.uniform(w.dim(), w.dim() + 2));
      expect_dimension_routes(rec, random_fields[fi], m, list);
    }
  }
  return rec.finish();
}

CheckResult check_extraction(const std::vector<FieldSpec>& fields, std::size_t trials,
                             std::size_t max_size, std::size_t max_ambient, std::uint64_t seed) {
  Recorder rec("extraction",
               "basis extracted from " + std::to_string(trials) +
                   " random spanning lists per field (size <= " + std::to_string(max_size) +
                   ", ambient <= " + std::to_string(max_ambient) + ")");
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    const FieldSpec& spec = fields[fi];
    Generator gen(spec, derive_seed(seed, "extraction", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const SurjectiveCase c = surjective_case(gen, max_size, max_ambient);
      rec.guarded(
          [&] {
            const Extraction ex = extract_basis_from_surjective(c.vectors, c.space);
            std::vector<Vector> kept;
            for (auto i : ex.kept) kept.push_back(c.vectors[i]);

            bool ok = classify(kept, c.space).basis && kept.size() == c.space.dim() &&
                      ex.steps.size() == c.vectors.size() - kept.size();
            for (std::size_t i = 0; ok && i < c.vectors.size(); ++i) {
              if (std::find(ex.kept.begin(), ex.kept.end(), i) != ex.kept.end()) continue;
              const auto coeffs = linear_combination_of(c.vectors[i], kept, spec);
              ok = coeffs.has_value() &&
                   Matrix::from_columns(spec, c.space.ambient_dim(), kept).apply(*coeffs) ==
                       c.vectors[i];
            }
            rec.expect(ok, [&] {
              return spec.to_string() + " " + describe_list(c.vectors) + ": kept " +
                     std::to_string(kept.size()) + " of dim " + std::to_string(c.space.dim());
            });
          },
          [&] { return spec.to_string() + " " + describe_list(c.vectors); });
    }
  }
  return rec.finish();
}

CheckResult check_extension(const std::vector<FieldSpec>& fields, std::size_t trials,
                            std::size_t max_ambient, std::uint64_t seed) {
  Recorder rec("extension", "injective lists extended to a basis, " + std::to_string(trials) +
                                " random cases per field (ambient <= " +
                                std::to_string(max_ambient) + ")");
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    const FieldSpec& spec = fields[fi];
    Generator gen(spec, derive_seed(seed, "extension", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const InjectiveCase c = injective_case(gen, max_ambient);
      rec.guarded(
          [&] {
            const Extension ext = extend_injective_to_basis(c.vectors, c.space);
            std::vector<Vector> combined = c.vectors;
            combined.insert(combined.end(), ext.appended.begin(), ext.appended.end());
            bool ok = ext.appended.size() == c.space.dim() - c.vectors.size() &&
                      classify(combined, c.space).basis;
            rec.expect(ok, [&] {
              return spec.to_string() + " " + describe_list(c.vectors) + ": appended " +
                     std::to_string(ext.appended.size()) + " in dim " +
                     std::to_string(c.space.dim());
            });
          },
          [&] { return spec.to_string() + " " + describe_list(c.vectors); });
    }
  }
  return rec.finish();
}

CheckResult check_quotients(const std::vector<FieldSpec>& fields, std::size_t max_ambient,
                            std::uint64_t seed) {
  std::string names;
  for (const auto& f : fields) names += (names.empty() ? "" : "/") + f.to_string();
  Recorder rec("quotients", "quotient dimension, coset representatives, factor maps and "
                            "transport over " + names + ", ambient <= " +
                                std::to_string(max_ambient));

  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    const FieldSpec& spec = fields[fi];
    Generator gen(spec, derive_seed(seed, "quotients", fi));
    for (std::size_t m = 0; m <= max_ambient; ++m) {
      const std::vector<Space> subspaces = all_subspaces(spec, m);
      std::vector<std::vector<Vector>> elements;
      for (const auto& s : subspaces) {
        const auto set = oracle::oracle_span(spec, m, s.basis_rows());
        elements.emplace_back(set.begin(), set.end());
      }

      // isomorphisms of F^m: all of GL(m) when small, otherwise a sample
      std::vector<Matrix> isos;
      std::uint64_t all_matrices = 1;
      for (std::size_t i = 0; i < m * m && all_matrices <= 512; ++i) all_matrices *= spec.modulus();
      if (all_matrices <= 512) {
        for_each_matrix(spec, m, m, [&](const Matrix& g) {
          if (rank(g) == m) isos.push_back(g);
        });
      } else {
        for (int i = 0; i < 8; ++i) isos.push_back(gen.invertible(m));
      }

      for (std::size_t vi = 0; vi < subspaces.size(); ++vi) {
        const Space& v = subspaces[vi];
        for (std::size_t ui = 0; ui < subspaces.size(); ++ui) {
          const Space& u = subspaces[ui];
          if (!u.is_subspace_of(v)) continue;
          const auto where = [&] {
            return spec.to_string() + " V=" + describe_matrix(v.basis()) +
                   " U=" + describe_matrix(u.basis());
          };
          rec.guarded(
              [&] {
                const QuotientSpace q(v, u);
                const LinearMap h = quotient_iso(q);
                rec.expect(quotient_dim(q) == v.dim() - u.dim() &&
                               q.free_coordinates().size() == quotient_dim(q) &&
                               h.domain_dim() == quotient_dim(q) && is_isomorphism(h),
                           [&] { return where() + ": quotient dimension"; });

                std::vector<Vector> reps;
                for (const auto& x : elements[vi]) {
                  const Coset c = coset_rep(q, x);
                  bool ok = v.contains(c.rep) && u.contains(x - c.rep) &&
                            h.apply(c.coordinates()) == c.rep;
                  for (auto p : u.pivot_cols()) ok = ok && c.rep[p].is_zero();
                  rec.expect(ok, [&] { return where() + ": representative of " + format_vector(x); });
                  reps.push_back(c.rep);
                }
                for (std::size_t a = 0; a < elements[vi].size(); ++a) {
                  for (std::size_t b = 0; b < elements[vi].size(); ++b) {
                    const bool same = reps[a] == reps[b];
                    const bool differ_in_u = u.contains(elements[vi][a] - elements[vi][b]);
                    rec.expect(same == differ_in_u, [&] {
                      return where() + ": cosets of " + format_vector(elements[vi][a]) + " and " +
                             format_vector(elements[vi][b]);
                    });
                  }
                }

                for (const auto& g : isos) {
                  const auto push = [&](const Space& s) {
                    std::vector<Vector> rows;
                    for (const auto& r : s.basis_rows()) rows.push_back(g.apply(r));
                    return Space::span(spec, m, rows);
                  };
                  const QuotientSpace moved(push(v), push(u));
                  bool ok = quotient_dim(moved) == quotient_dim(q);
                  for (std::size_t a = 0; ok && a < elements[vi].size(); ++a) {
                    ok = coset_rep(moved, g.apply(elements[vi][a])) ==
                         coset_rep(moved, g.apply(reps[a]));
                  }
                  rec.expect(ok, [&] { return where() + ": transport along " + describe_matrix(g); });
                }
              },
              where);
        }
      }

      for (std::size_t n = 0; n <= max_ambient; ++n) {
        const auto domain = oracle::enumerate_vectors(spec, n);
        for_each_matrix(spec, m, n, [&](const Matrix& a) {
          rec.guarded(
              [&] {
                const LinearMap f = LinearMap::from_matrix(a);
                const LinearMap bar = factor_map(f);
                const QuotientSpace q = domain_quotient(f);
                bool ok = is_isomorphism(bar) && bar.codomain() == image(f) &&
                          bar.domain_dim() == quotient_dim(q);
                for (std::size_t i = 0; ok && i < domain.size(); ++i) {
                  ok = bar.apply(coset_rep(q, domain[i]).coordinates()) == f.apply(domain[i]);
                }
                rec.expect(ok, [&] { return spec.to_string() + " factor map of " + describe_matrix(a); });
              },
              [&] { return describe_matrix(a); });
        });
      }
    }
  }
  return rec.finish();
}

CheckResult check_size_bounds(const FieldSpec& exhaustive_spec, std::size_t max_ambient,
                              std::size_t max_list, const std::vector<FieldSpec>& fields,
                              std::size_t trials, std::size_t max_size,
                              std::size_t random_max_ambient, std::uint64_t seed) {
  Recorder rec("size-bounds",
               "surjective => size >= dim, injective => size <= dim (random extraction/"
               "extension lists, all lists of <= " + std::to_string(max_list) + " vectors in " +
                   exhaustive_spec.to_string() + "^m, m <= " + std::to_string(max_ambient) + ")");

  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    Generator gen(fields[fi], derive_seed(seed, "extraction", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const SurjectiveCase c = surjective_case(gen, max_size, random_max_ambient);
      rec.guarded(
          [&] {
            expect_size_bounds(rec, c.vectors, c.space);
            const Extraction ex = extract_basis_from_surjective(c.vectors, c.space);
            std::vector<Vector> kept;
            for (auto i : ex.kept) kept.push_back(c.vectors[i]);
            expect_size_bounds(rec, kept, c.space);
          },
          [&] { return describe_list(c.vectors); });
    }
  }
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    Generator gen(fields[fi], derive_seed(seed, "extension", fi));
    for (std::size_t t = 0; t < trials; ++t) {
      const InjectiveCase c = injective_case(gen, random_max_ambient);
      rec.guarded(
          [&] {
            expect_size_bounds(rec, c.vectors, c.space);
            const Extension ext = extend_injective_to_basis(c.vectors, c.space);
            std::vector<Vector> combined = c.vectors;
            combined.insert(combined.end(), ext.appended.begin(), ext.appended.end());
            expect_size_bounds(rec, combined, c.space);
          },
          [&] { return describe_list(c.vectors); });
    }
  }

  for (std::size_t m = 0; m <= max_ambient; ++m) {
    for (const Space& v : all_subspaces(exhaustive_spec, m)) {
      const auto set = oracle::oracle_span(exhaustive_spec, m, v.basis_rows());
      const std::vector<Vector> in_v(set.begin(), set.end());
      for_each_list_up_to(in_v, max_list, [&](const std::vector<Vector>& list) {
        rec.guarded([&] { expect_size_bounds(rec, list, v); }, [&] { return describe_list(list); });
      });
    }
  }
  return rec.finish();
}

CheckResult check_oracle_equivalence(const std::vector<OracleCase>& cases, std::size_t max_list,
                                     std::optional<double> time_limit) {
  std::string names;
  for (const auto& c : cases) {
    names += (names.empty() ? "" : ", ") + c.spec.to_string() + "^" + std::to_string(c.ambient);
  }
  Recorder rec("oracle-equivalence",
               "classification, image membership, kernel and dimension agree with enumeration "
               "on all lists of <= " + std::to_string(max_list) + " vectors in " + names,
               time_limit);

  for (const auto& oc : cases) {
    const FieldSpec& spec = oc.spec;
    const std::size_t m = oc.ambient;
    const auto ambient = oracle::enumerate_vectors(spec, m);
    const Space full = Space::full(spec, m);
    for_each_list_up_to(ambient, max_list, [&](const std::vector<Vector>& list) {
      const auto where = [&] { return spec.to_string() + " " + describe_list(list); };
      rec.guarded(
          [&] {
            const LinearMap f = LinearMap::from_images(spec, m, list);
            const Space s = Space::span(spec, m, list);
            const LinearMap onto_span = f.with_codomain(s);

            const SetClassification in_full = classify(list, full);
            const SetClassification in_span = classify(list, s);
            const bool inj = oracle::oracle_injective(f);
            rec.expect(in_full.injective == inj && in_full.surjective == oracle::oracle_surjective(f),
                       [&] { return where() + ": classify in F^m"; });
            rec.expect(in_span.injective == inj &&
                           in_span.surjective == oracle::oracle_surjective(onto_span) &&
                           in_span.surjective,
                       [&] { return where() + ": classify in span"; });

            const oracle::VectorSet img = oracle::oracle_image(f);
            const Space im = image(f);
            bool membership = true;
            for (const auto& x : ambient) membership = membership && (im.contains(x) == (img.count(x) == 1));
            rec.expect(membership, [&] { return where() + ": image membership"; });

            const oracle::VectorSet ker = oracle::oracle_kernel(f);
            const Space k = kernel(f);
            bool kernel_ok = true;
            for (oracle::VectorEnumerator it(spec, list.size()); !it.done(); it.advance()) {
              kernel_ok = kernel_ok && (k.contains(it.current()) == (ker.count(it.current()) == 1));
            }
            rec.expect(kernel_ok, [&] { return where() + ": kernel membership"; });

            rec.expect(isomorphic_dimension(s).dim == oracle::oracle_dimension(spec, m, list),
                       [&] { return where() + ": dimension"; });

            const auto counts = oracle::oracle_representation_counts(spec, m, list);
            bool unique = counts.size() == ambient.size();
            for (const auto& [target, count] : counts) unique = unique && count == 1;
            rec.expect(unique_representation_check(list, full) == unique,
                       [&] { return where() + ": unique representation"; });
          },
          where);
    });
  }
  return rec.finish();
}

}  // namespace isodim::verify
