// Runs the ten acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "isodim/matrix_io.hpp"
#include "isodim/verify.hpp"

namespace {

using isodim::FieldSpec;
using namespace isodim::verify;

constexpr std::uint64_t kSeed = 20240601;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckResult cli_contract() {
  CheckResult r{"cli", "golden outputs, exit codes, matrix-file round trip", 0, 0, "", 0.0,
                std::nullopt};
  const auto note = [&](const std::string& what) {
    if (r.violations++ == 0) r.first_violation = what;
  };
  const std::string dir = ISODIM_GOLDEN_DIR;
  for (const auto& c : isodim::testing::golden_cases()) {
    const auto args = isodim::testing::resolve_args(c, dir);
    for (int rep = 0; rep < 2; ++rep) {
      std::ostringstream out, err;
      const int code = isodim::cli::run(args, out, err);
      ++r.cases;
      if (code != c.exit_code) note(c.name + ": exit " + std::to_string(code));
      if (out.str() != slurp(dir + "/" + c.name + ".out")) note(c.name + ": stdout differs");
    }
  }
  std::uint64_t salt = 0;
  for (const auto& spec : default_fields()) {
    Generator gen(spec, kSeed + ++salt);
    for (int t = 0; t < 200; ++t) {
      const auto m = gen.matrix(gen.uniform(0, 6), gen.uniform(0, 6));
      ++r.cases;
      const std::string text = isodim::format_matrix_file(m);
      if (!(isodim::parse_matrix_file(text) == m)) note("round trip failed:\n" + text);
    }
  }
  return r;
}

}  // namespace

int main() {
  const FieldSpec gf2 = FieldSpec::prime(2);
  const FieldSpec gf3 = FieldSpec::prime(3);
  const auto fields = default_fields();
  std::vector<FieldSpec> others;
  for (const auto& f : fields) {
    if (!(f == gf2)) others.push_back(f);
  }

  const std::vector<std::function<CheckResult()>> criteria = {
      [&] { return check_injective_bound(gf2, 3, 5.0); },
      [&] { return check_square_equivalence(gf2, 3); },
      [&] { return check_rank_nullity(fields, 1000, 8, kSeed, 30.0); },
      [&] { return check_dimension_routes(gf2, 3, 4, others, 500, kSeed); },
      [&] { return check_extraction(fields, 500, 8, 5, kSeed); },
      [&] { return check_extension(fields, 500, 5, kSeed); },
      [&] { return check_quotients({gf2, gf3}, 3, kSeed); },
      [&] { return check_size_bounds(gf2, 3, 3, fields, 500, 8, 5, kSeed); },
      [&] { return check_oracle_equivalence({{gf2, 2}, {gf2, 3}, {gf3, 2}}, 3, 60.0); },
      [&] {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = cli_contract();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
      },
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const CheckResult r = criteria[i]();
    std::printf("criterion %2zu: %s\n", i + 1, format_result(r, true).c_str());
    if (!r.passed()) {
      ++failed;
      std::printf("    first violation: %s\n", r.first_violation.c_str());
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
