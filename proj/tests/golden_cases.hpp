#pragma once

// CLI golden cases shared by the unit suite and the acceptance binary. Each
// case names the expected stdout file tests/golden/<name>.out; "@" in an
// argument is replaced by the golden directory.

#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace isodim::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

inline const std::vector<GoldenCase>& golden_cases() {
  using cli::kDomainError;
  using cli::kSuccess;
  using cli::kUsageError;
  static const std::vector<GoldenCase> cases = {
      {"rref_gf2", {"rref", "@/gf2_rref_input.txt"}, kSuccess},
      {"rref_q_fractions", {"rref", "@/q_fractions.txt"}, kSuccess},
      {"rref_gf5", {"rref", "@/gf5_map.txt"}, kSuccess},
      {"rank_gf2_dependent", {"rank", "@/gf2_dependent3.txt"}, kSuccess},
      {"rank_q_identity", {"rank", "@/q_identity3.txt"}, kSuccess},
      {"kernel_q_row", {"kernel", "@/q_row123.txt"}, kSuccess},
      {"kernel_gf5", {"kernel", "@/gf5_map.txt"}, kSuccess},
      {"kernel_identity", {"kernel", "@/q_identity3.txt"}, kSuccess},
      {"image_gf2_row", {"image", "@/gf2_row11.txt"}, kSuccess},
      {"image_gf5", {"image", "@/gf5_map.txt"}, kSuccess},
      {"dim_identity", {"dim", "@/q_identity3.txt"}, kSuccess},
      {"dim_empty", {"dim", "@/q_empty_rows.txt"}, kSuccess},
      {"dim_gf2_dependent", {"dim", "@/gf2_dependent3.txt"}, kSuccess},
      {"classify_spanning", {"classify", "@/gf2_spanning3.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"classify_duplicates", {"classify", "@/gf2_duplicates.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"classify_empty", {"classify", "@/gf2_empty_list.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"classify_basis", {"classify", "@/q_full2.txt", "--space", "@/q_full2.txt"}, kSuccess},
      {"extract_gf2", {"extract-basis", "@/gf2_spanning3.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"extract_q", {"extract-basis", "@/q_spanning_dup.txt", "--space", "@/q_full2.txt"}, kSuccess},
      {"extend_gf2", {"extend-basis", "@/gf2_row11.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"extend_empty", {"extend-basis", "@/gf2_empty_list.txt", "--space", "@/gf2_full2.txt"}, kSuccess},
      {"quotient_dim_gf2", {"quotient-dim", "@/gf2_full2.txt", "@/gf2_row11.txt"}, kSuccess},
      {"quotient_dim_gf3", {"quotient-dim", "@/gf3_plane.txt", "@/gf3_line.txt"}, kSuccess},
      {"coset_rep_q", {"coset-rep", "@/q_full2.txt", "@/q_u10.txt", "--vector", "3,5"}, kSuccess},
      {"coset_rep_gf2", {"coset-rep", "@/gf2_full2.txt", "@/gf2_row11.txt", "--vector", "1,0"}, kSuccess},
      {"rank_nullity_gf2", {"rank-nullity", "@/gf2_row11.txt"}, kSuccess},
      {"rank_nullity_gf5", {"rank-nullity", "@/gf5_map.txt"}, kSuccess},
      {"sequence_gf2", {"sequence", "@/gf2_dependent3.txt"}, kSuccess},
      {"sequence_empty", {"sequence", "@/q_empty_rows.txt"}, kSuccess},
      {"verify_small", {"verify", "--max-dim", "2", "--trials", "20", "--seed", "7"}, kSuccess},
      // domain errors
      {"err_coset_not_member", {"coset-rep", "@/gf3_plane.txt", "@/gf3_line.txt", "--vector", "0,0,1"}, kDomainError},
      {"err_quotient_not_subspace", {"quotient-dim", "@/gf2_row11.txt", "@/gf2_full2.txt"}, kDomainError},
      {"err_extract_not_spanning", {"extract-basis", "@/gf2_row11.txt", "--space", "@/gf2_full2.txt"}, kDomainError},
      {"err_extend_not_injective", {"extend-basis", "@/gf2_duplicates.txt", "--space", "@/gf2_full2.txt"}, kDomainError},
      {"err_classify_not_member", {"classify", "@/gf2_full2.txt", "--space", "@/gf2_row11.txt"}, kDomainError},
      // parse and usage errors
      {"err_malformed_scalar", {"rank", "@/malformed_scalar.txt"}, kUsageError},
      {"err_composite_field", {"rank", "@/composite_field.txt"}, kUsageError},
      {"err_missing_row", {"rank", "@/missing_row.txt"}, kUsageError},
      {"err_missing_file", {"rank", "@/does_not_exist.txt"}, kUsageError},
      {"err_no_subcommand", {}, kUsageError},
      {"err_unknown_subcommand", {"transmogrify"}, kUsageError},
      {"err_missing_space", {"classify", "@/gf2_full2.txt"}, kUsageError},
      {"err_bad_vector", {"coset-rep", "@/q_full2.txt", "@/q_u10.txt", "--vector", "1,x"}, kUsageError},
  };
  return cases;
}

// gtest prints parameters through this; the default dumps raw bytes
inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline std::vector<std::string> resolve_args(const GoldenCase& c, const std::string& golden_dir) {
  std::vector<std::string> out;
  for (auto arg : c.args) {
    if (arg.rfind("@/", 0) == 0) arg = golden_dir + arg.substr(1);
    out.push_back(arg);
  }
  return out;
}

}  // namespace isodim::testing
