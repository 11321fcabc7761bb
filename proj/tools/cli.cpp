#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "isodim/classify.hpp"
#include "isodim/dimension.hpp"
#include "isodim/errors.hpp"
#include "isodim/linear_map.hpp"
#include "isodim/matrix_io.hpp"
#include "isodim/quotient.hpp"
#include "isodim/space.hpp"
#include "isodim/verify.hpp"

namespace isodim::cli {

namespace {

Space space_from_file(const std::string& path) { return Space::row_space(read_matrix_file(path)); }

void require_same_setting(const Matrix& vectors, const Space& s) {
  if (!(vectors.spec() == s.spec())) {
    throw FieldMismatchError("vector file is over " + vectors.spec().to_string() +
                             ", space file over " + s.spec().to_string());
  }
  if (vectors.cols() != s.ambient_dim()) {
    throw DimensionMismatchError("vectors have length " + std::to_string(vectors.cols()) +
                                 ", space lives in F^" + std::to_string(s.ambient_dim()));
  }
}

std::string join_indices(const std::vector<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += " " + std::to_string(x);
  return out;
}

std::string map_shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void cmd_rref(const std::string& file, std::ostream& out) {
  const RrefResult r = rref(read_matrix_file(file));
  out << "# rank " << r.rank() << "\n";
  out << "# pivots" << join_indices(r.pivot_cols) << "\n";
  out << format_matrix_file(r.rref);
}

void cmd_rank(const std::string& file, std::ostream& out) {
  const std::size_t r = rank(read_matrix_file(file));
  out << "rank " << r << "\n";
}

void cmd_kernel(const std::string& file, std::ostream& out) {
  const Matrix a = read_matrix_file(file);
  const auto basis = kernel_basis(a);
  out << "# kernel of a " << map_shape(a) << " map: dim " << basis.size() << "\n";
  out << format_matrix_file(Matrix::from_rows(a.spec(), a.cols(), basis));
}

void cmd_image(const std::string& file, std::ostream& out) {
  const Matrix a = read_matrix_file(file);
  const Space im = image(LinearMap::from_matrix(a));
  out << "# image of a " << map_shape(a) << " map: dim " << im.dim() << "\n";
  out << format_matrix_file(im.basis());
}

void cmd_dim(const std::string& file, std::ostream& out) {
  const DimensionWitness w = isomorphic_dimension(space_from_file(file));
  out << "dim " << w.dim << "\n";
  out << "# witness: column j is the image of e_j\n";
  out << format_matrix_file(w.iso.columns());
}

void cmd_classify(const std::string& file, const std::string& space_file, std::ostream& out) {
  const Matrix vectors = read_matrix_file(file);
  const Space s = space_from_file(space_file);
  require_same_setting(vectors, s);
  const SetClassification c = classify(vectors.row_list(), s);
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "size " << vectors.rows() << "\n";
  out << "dim " << s.dim() << "\n";
  out << "injective " << flag(c.injective) << "\n";
  out << "noninjective " << flag(c.noninjective()) << "\n";
  out << "surjective " << flag(c.surjective) << "\n";
  out << "basis " << flag(c.basis) << "\n";
}

void cmd_extract(const std::string& file, const std::string& space_file, std::ostream& out) {
  const Matrix vectors = read_matrix_file(file);
  const Space s = space_from_file(space_file);
  require_same_setting(vectors, s);
  const Extraction ex = extract_basis_from_surjective(vectors.row_list(), s);
  for (std::size_t i = 0; i < ex.steps.size(); ++i) {
    out << "step " << i + 1 << ": kernel vector " << format_vector(ex.steps[i].kernel_vector)
        << ", drop index " << ex.steps[i].dropped << "\n";
  }
  out << "kept" << join_indices(ex.kept) << "\n";
}

void cmd_extend(const std::string& file, const std::string& space_file, std::ostream& out) {
  const Matrix vectors = read_matrix_file(file);
  const Space s = space_from_file(space_file);
  require_same_setting(vectors, s);
  const Extension ext = extend_injective_to_basis(vectors.row_list(), s);
  out << "appended " << ext.appended.size() << "\n";
  for (std::size_t i = 0; i < ext.appended.size(); ++i) {
    out << "append " << format_vector(ext.appended[i]) << " (canonical row " << ext.basis_rows[i]
        << ")\n";
  }
}

QuotientSpace quotient_from_files(const std::string& v_file, const std::string& u_file) {
  const Space v = space_from_file(v_file);
  const Space u = space_from_file(u_file);
  if (!(u.spec() == v.spec()) || u.ambient_dim() != v.ambient_dim()) {
    throw DimensionMismatchError("V and U must live in the same F^m");
  }
  return QuotientSpace(v, u);
}

void cmd_quotient_dim(const std::string& v_file, const std::string& u_file, std::ostream& out) {
  const std::size_t d = quotient_dim(quotient_from_files(v_file, u_file));
  out << "quotient-dim " << d << "\n";
}

void cmd_coset_rep(const std::string& v_file, const std::string& u_file, const std::string& text,
                   std::ostream& out) {
  const QuotientSpace q = quotient_from_files(v_file, u_file);
  const Vector v = parse_vector(text, q.ambient().spec());
  if (v.size() != q.ambient().ambient_dim()) {
    throw DimensionMismatchError("--vector has " + std::to_string(v.size()) +
                                 " entries, expected " +
                                 std::to_string(q.ambient().ambient_dim()));
  }
  const Coset c = coset_rep(q, v);
  out << "rep " << format_vector(c.rep) << "\n";
  out << "coordinates " << format_vector(c.coordinates()) << "\n";
}

void cmd_rank_nullity(const std::string& file, std::ostream& out) {
  const RankNullity rn = rank_nullity(LinearMap::from_matrix(read_matrix_file(file)));
  out << "kernel " << rn.kernel_dim << " image " << rn.image_dim << " domain " << rn.domain_dim
      << "\n";
}

void cmd_sequence(const std::string& file, std::ostream& out) {
  const Space v = space_from_file(file);
  const InjectiveSequence seq = build_injective_sequence(v);
  out << "target dim " << v.dim() << " in " << v.spec().to_string() << "^" << v.ambient_dim()
      << "\n";
  out << "f_0: empty map F^0 -> V\n";
  for (const auto& step : seq.transcript()) {
    out << "f_" << step.k << ": add " << format_vector(step.vector) << " [canonical row "
        << step.basis_row << ": " << step.reason << "]\n";
  }
  out << "length " << seq.length() << "\n";
  out << "dim " << seq.length() - 1 << "\n";
}

struct VerifyOptions {
  std::string field = "gf2";
  std::size_t max_dim = 3;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  bool timing = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const FieldSpec exhaustive = FieldSpec::prime(opt.field == "gf3" ? 3 : 2);
  const auto fields = verify::default_fields();
  std::vector<FieldSpec> others;
  for (const auto& f : fields) {
    if (!(f == exhaustive)) others.push_back(f);
  }
  std::vector<verify::OracleCase> oracle_cases;
  for (const verify::OracleCase c : {verify::OracleCase{FieldSpec::prime(2), 2},
                                     verify::OracleCase{FieldSpec::prime(2), 3},
                                     verify::OracleCase{FieldSpec::prime(3), 2}}) {
    if (c.ambient <= opt.max_dim) oracle_cases.push_back(c);
  }

  const std::vector<std::function<verify::CheckResult()>> checks = {
      [&] { return verify::check_injective_bound(exhaustive, opt.max_dim, 5.0); },
      [&] { return verify::check_square_equivalence(exhaustive, opt.max_dim); },
      [&] { return verify::check_rank_nullity(fields, opt.trials, 8, opt.seed, 30.0); },
      [&] {
        return verify::check_dimension_routes(exhaustive, opt.max_dim, opt.max_dim + 1, others,
                                              opt.trials, opt.seed);
      },
      [&] { return verify::check_extraction(fields, opt.trials, 8, 5, opt.seed); },
      [&] { return verify::check_extension(fields, opt.trials, 5, opt.seed); },
      [&] {
        return verify::check_quotients({FieldSpec::prime(2), FieldSpec::prime(3)}, opt.max_dim,
                                       opt.seed);
      },
      [&] {
        return verify::check_size_bounds(exhaustive, opt.max_dim, 3, fields, opt.trials, 8, 5,
                                         opt.seed);
      },
      [&] { return verify::check_oracle_equivalence(oracle_cases, 3, 60.0); },
  };

  std::size_t passed = 0;
  for (const auto& check : checks) {
    const verify::CheckResult r = check();
    out << verify::format_result(r, opt.timing) << "\n";
    if (r.passed()) ++passed;
  }
  out << "summary " << passed << "/" << checks.size() << " passed\n";
  return passed == checks.size() ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear algebra over GF(p) and Q: dimension via isomorphisms"};
  app.name("isodim");
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string space_file;
  std::string vector_text;
  VerifyOptions verify_opt;
  std::function<int()> action;

  const auto single_file = [&](const std::string& name, const std::string& help,
                               void (*fn)(const std::string&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "matrix file")->required();
    sub->callback([&, fn] { action = [&, fn] { fn(file, out); return kSuccess; }; });
  };
  single_file("rref", "reduced row echelon form", cmd_rref);
  single_file("rank", "rank of a matrix", cmd_rank);
  single_file("kernel", "kernel basis of the map whose columns are the images of e_j", cmd_kernel);
  single_file("image", "canonical basis of the image of the map", cmd_image);
  single_file("dim", "dimension of the span of the rows, with a witness isomorphism", cmd_dim);
  single_file("rank-nullity", "kernel, image and domain dimensions of the map", cmd_rank_nullity);
  single_file("sequence", "injective-sequence construction for the span of the rows",
              cmd_sequence);

  const auto with_space = [&](const std::string& name, const std::string& help,
                              void (*fn)(const std::string&, const std::string&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "vectors, one per row")->required();
    sub->add_option("--space", space_file, "file whose rows span the space")->required();
    sub->callback([&, fn] { action = [&, fn] { fn(file, space_file, out); return kSuccess; }; });
  };
  with_space("classify", "injective / surjective / basis classification of the rows",
             cmd_classify);
  with_space("extract-basis", "shrink a spanning list to a basis", cmd_extract);
  with_space("extend-basis", "grow an injective list to a basis", cmd_extend);

  auto* qdim = app.add_subcommand("quotient-dim", "dimension of V/U");
  qdim->add_option("VFILE", file, "rows span V")->required();
  qdim->add_option("UFILE", second, "rows span U")->required();
  qdim->callback([&] { action = [&] { cmd_quotient_dim(file, second, out); return kSuccess; }; });

  auto* crep = app.add_subcommand("coset-rep", "canonical representative of v + U in V/U");
  crep->add_option("VFILE", file, "rows span V")->required();
  crep->add_option("UFILE", second, "rows span U")->required();
  crep->add_option("--vector", vector_text, "comma-separated scalars")->required();
  crep->callback([&] {
    action = [&] { cmd_coset_rep(file, second, vector_text, out); return kSuccess; };
  });

  auto* ver = app.add_subcommand("verify", "run the theorem verification suite");
  ver->add_option("--field", verify_opt.field, "field for the exhaustive checks")
      ->check(CLI::IsMember({"gf2", "gf3"}));
  ver->add_option("--max-dim", verify_opt.max_dim, "largest dimension enumerated exhaustively")
      ->check(CLI::Range(0, 4));
  ver->add_option("--seed", verify_opt.seed, "seed for the random trials");
  ver->add_option("--trials", verify_opt.trials, "random trials per theorem")
      ->check(CLI::Range(1, 1000000));
  ver->add_flag("--timing", verify_opt.timing, "print wall-clock time per check");
  ver->callback([&] { action = [&] { return cmd_verify(verify_opt, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "isodim: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "isodim: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "isodim: internal error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace isodim::cli
