#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace hopfelim {

struct RunConfig {
  std::vector<std::string> v_generators{"v"};
  std::vector<std::string> w_generators{"s"};
  int max_degree = 8;
  std::string output_format = "text";
  std::uint64_t seed = 42;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success, 1 user error, 2 property-check failure,
// 3 internal decomposition failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitCheck = 2;
inline constexpr int kExitInternal = 3;

// `args` excludes the program name. An expression argument "-" is read
// from `in`.
CommandResult run_command(const std::vector<std::string>& args, std::istream& in);

// "a,b,c" or a count "n" (prefix1 .. prefixn).
std::vector<std::string> parse_generator_list(const std::string& list_text, const std::string& prefix);

}  // namespace hopfelim
